#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace singer {

enum class GroupKind { cyclic, abelian, integers, free, field_quotient, symmetric, monomial };

using CanonicalForm = boost::container::small_vector<std::int64_t, 4>;

/// An element of some GroupHandle, stored in its unique canonical form.
///
/// Forms per kind:
///  - cyclic / field-quotient: {residue} (for field-quotient the residue is the
///    exponent i of the class g^i F_q^x)
///  - abelian: one residue per invariant factor
///  - integers: {value}
///  - free: reduced word, letters +k / -k for generator k (1-based) and its inverse
///  - symmetric: image list of the permutation of {0..m-1}
///  - monomial: fiber permutation images followed by the twist vector
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::uint64_t group_id, CanonicalForm form) : group_id_(group_id), form_(std::move(form)) {}

  std::uint64_t group_id() const noexcept { return group_id_; }
  const CanonicalForm& form() const noexcept { return form_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_id_ == b.group_id_ && a.form_ == b.form_;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::uint64_t group_id_ = 0;
  CanonicalForm form_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// A group with a fixed, deterministic enumeration order. Identity comes first.
///
/// Orders: residues ascending; integers 0, 1, -1, 2, -2, ...; free groups in
/// shortlex with a < a^-1 < b < b^-1 < ...; abelian products and monomial
/// groups lexicographically (first coordinate most significant); symmetric
/// groups lexicographically on image lists.
class GroupHandle {
 public:
  static GroupHandle cyclic(std::uint64_t order);
  static GroupHandle abelian(std::vector<std::uint64_t> invariant_factors);
  static GroupHandle integers();
  static GroupHandle free(unsigned rank);
  /// F_{q^m}^x / F_q^x with q = p^n; cyclic of order (q^m - 1)/(q - 1).
  static GroupHandle field_quotient(std::uint64_t p, unsigned n, unsigned m);
  static GroupHandle symmetric(unsigned degree);
  /// C_n wr S_{m+1}: monomial (m+1)x(m+1) matrices with entries in C_n.
  static GroupHandle monomial(unsigned n, unsigned m);

  /// Parses "cyclic:7", "abelian:3,9", "integers", "free:2",
  /// "fieldquot:p=2,n=1,m=3", "symmetric:4", "monomial:n=2,m=3".
  static GroupHandle parse(std::string_view spec);

  GroupKind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t>& params() const noexcept { return params_; }
  std::string spec() const;
  std::uint64_t id() const noexcept { return id_; }

  bool is_finite() const noexcept { return order_.has_value(); }
  std::optional<std::uint64_t> order() const noexcept { return order_; }
  bool is_abelian() const noexcept;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, std::int64_t k) const;
  bool contains(const GroupElement& a) const;

  /// First `count` elements in enumeration order.
  std::vector<GroupElement> enumerate(std::size_t count) const;
  /// Element at a given enumeration position. Not available for free groups.
  GroupElement element_at(std::uint64_t index) const;
  /// Enumeration position of an element. Not available for free groups.
  std::uint64_t index_of(const GroupElement& a) const;

  std::string format(const GroupElement& a) const;
  GroupElement parse_element(std::string_view text) const;

  /// Convenience constructors for canonical forms.
  GroupElement make(CanonicalForm form) const;
  GroupElement letter(unsigned generator, bool inverted = false) const;  // free groups

  friend bool operator==(const GroupHandle& a, const GroupHandle& b) {
    return a.kind_ == b.kind_ && a.params_ == b.params_;
  }

 private:
  GroupHandle(GroupKind kind, std::vector<std::uint64_t> params);
  void check_same(const GroupElement& a) const;

  GroupKind kind_;
  std::vector<std::uint64_t> params_;
  std::optional<std::uint64_t> order_;
  std::uint64_t id_ = 0;
};

/// Stateful cursor over a group's enumeration order.
class Enumerator {
 public:
  explicit Enumerator(const GroupHandle& group);
  Enumerator(GroupHandle&&) = delete;  // keeps a pointer to the group

  /// Next element, or nullopt once a finite group is exhausted.
  std::optional<GroupElement> next();
  std::size_t position() const noexcept { return position_; }

 private:
  const GroupHandle* group_;
  std::size_t position_ = 0;
  std::optional<GroupElement> last_;
};

struct InvolutionScan {
  bool found = false;
  std::optional<GroupElement> witness;
  std::size_t scanned = 0;
  bool exhaustive = false;
};

/// Searches the first `bound` elements for h != e with h*h = e.
InvolutionScan has_involution(const GroupHandle& group, std::size_t bound);

/// All x among the first `bound` elements with x*x = h.
std::vector<GroupElement> square_roots(const GroupHandle& group, const GroupElement& h, std::size_t bound);

/// { g^-1 h g : g among the first `bound` elements }, sorted and deduplicated.
std::vector<GroupElement> conjugacy_sample(const GroupHandle& group, const GroupElement& h, std::size_t bound);

}  // namespace singer
