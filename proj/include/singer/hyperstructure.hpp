#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singer/finite_field.hpp"
#include "singer/group.hpp"
#include "singer/incidence.hpp"

namespace singer {

inline constexpr std::size_t kMaxCarrier = 256;
using HyperSet = std::bitset<kMaxCarrier>;

/// Finite carrier with a set-valued addition and an ordinary multiplication.
class HyperTable {
 public:
  /// Tables are indexed [a][b]. Every sum must be nonempty.
  HyperTable(std::vector<std::string> labels, std::uint32_t zero, std::uint32_t one,
             std::vector<std::vector<HyperSet>> add, std::vector<std::vector<std::uint32_t>> mul);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t one() const noexcept { return one_; }
  const HyperSet& sum(std::uint32_t a, std::uint32_t b) const { return add_[a][b]; }
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  std::vector<std::uint32_t> sum_list(std::uint32_t a, std::uint32_t b) const;

  /// Copy with one hyperaddition entry replaced (a+b only).
  HyperTable with_sum(std::uint32_t a, std::uint32_t b, const HyperSet& value) const;

  friend bool operator==(const HyperTable& x, const HyperTable& y) {
    return x.zero_ == y.zero_ && x.one_ == y.one_ && x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  std::vector<std::string> labels_;
  std::uint32_t zero_;
  std::uint32_t one_;
  std::vector<std::vector<HyperSet>> add_;
  std::vector<std::vector<std::uint32_t>> mul_;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::vector<std::uint32_t> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;

  bool all_passed() const;
  const AxiomResult& get(std::string_view name) const;
  std::vector<std::string> failed() const;
};

/// commutativity, associativity, neutral, unique-negative, reversibility,
/// distributivity, mul-associativity, mul-identity, mul-commutativity,
/// absorbing-zero, zero-ne-one, mul-group.
AxiomReport check_axioms(const HyperTable& t);

struct VectorspaceLaw {
  bool holds = true;
  std::optional<std::uint32_t> witness;
};

/// x + x = {0, x} for every x != 0.
VectorspaceLaw check_vectorspace_law(const HyperTable& t);

HyperTable krasner();

/// K[G]: x + x = {0, x}, x + y = everything nonzero except x and y. Needs |G| >= 3.
HyperTable k_algebra(const GroupHandle& group);

struct QuotientSpec {
  enum class Ring { field, integers_mod };
  Ring ring = Ring::field;
  std::uint64_t p = 0;        // field characteristic
  unsigned n = 0;             // field degree
  std::uint64_t modulus = 0;  // Z/modulus
  std::vector<std::uint32_t> generators;  // ring elements (field values or residues)

  /// F_{q^ext} / F_q^x.
  static QuotientSpec field_over_subfield(std::uint64_t q, unsigned ext);
  /// GF(p^n) / G with G generated by the given field values.
  static QuotientSpec field(std::uint64_t p, unsigned n, std::vector<std::uint32_t> generators);
  static QuotientSpec integers(std::uint64_t modulus, std::vector<std::uint32_t> generators);
};

struct QuotientHyperring {
  HyperTable table;
  std::vector<std::uint32_t> unit_group;      // ring elements of G, ascending
  std::vector<std::uint32_t> class_of;        // ring element -> class index
  std::vector<std::uint32_t> representative;  // class index -> least ring element
  std::uint64_t ring_size = 0;
  bool is_field = false;
  bool unit_group_is_subfield = false;        // {0} u G closed under the ring operations
};

/// Classes xG ordered by least representative, so 0 is class 0 and 1 is class 1.
QuotientHyperring quotient_hyperring(const QuotientSpec& spec, std::uint64_t field_cap = Field::default_cap);

struct KrasnerContainment {
  bool table = false;     // {0,1} is closed and equal to the Krasner table
  bool subfield = false;  // {0} u G is a subfield of the ring
  bool agree() const noexcept { return table == subfield; }
};

KrasnerContainment contains_krasner(const QuotientHyperring& q);

struct PointLabeling {
  PointIndex identity = 0;
  std::vector<std::vector<PointIndex>> mul;  // point x point -> point
  std::vector<std::string> labels;
};

struct HyperGeometry {
  IncidenceStructure geometry;
  PointLabeling labeling;
};

/// Points are the nonzero carrier elements in carrier order; lines are the sets (x + y) u {x, y}.
HyperGeometry hyperfield_to_geometry(const HyperTable& t);

/// Carrier is 0 followed by the points; x + y = (line xy) minus {x, y}. Lines need >= 4 points.
HyperTable geometry_to_hyperfield(const IncidenceStructure& g, const PointLabeling& labels);

/// Carrier bijection a -> b preserving 0, 1, products and sums, if one exists.
std::optional<std::vector<std::uint32_t>> isomorphic_tables(const HyperTable& a, const HyperTable& b);

enum class ExtensionCase { single_line, field_quotient, plane_other };

struct Classification {
  ExtensionCase kind = ExtensionCase::plane_other;
  bool degenerate = false;  // the Krasner hyperfield itself
  std::uint64_t group_order = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  std::size_t points = 0;
  std::size_t lines = 0;
  std::optional<PlaneCertificate> plane;
};

Classification classify_extension(const HyperTable& t);

std::string_view case_name(ExtensionCase c);

}  // namespace singer
