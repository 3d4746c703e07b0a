#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "singer/difference_set.hpp"
#include "singer/finite_field.hpp"
#include "singer/group.hpp"
#include "singer/linear_algebra.hpp"

namespace singer {

using PointIndex = std::uint32_t;
using Line = std::vector<PointIndex>;  // sorted point indices

/// Finite points/lines structure. Lines keep the order they were given in,
/// each sorted; repeated lines are rejected.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::size_t num_points, std::vector<Line> lines);

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t l) const { return lines_.at(l); }
  const boost::dynamic_bitset<>& line_bits(std::size_t l) const { return line_bits_.at(l); }
  /// Bitset over line indices of the lines through p.
  const boost::dynamic_bitset<>& lines_through(PointIndex p) const { return point_bits_.at(p); }
  bool incident(PointIndex p, std::size_t l) const { return line_bits_[l].test(p); }
  std::optional<std::size_t> find_line(const Line& sorted_points) const;
  /// Some line through both points, if any.
  std::optional<std::size_t> line_through(PointIndex p, PointIndex q) const;

  /// Same point count and the same set of lines.
  bool same_incidence(const IncidenceStructure& other) const;

 private:
  std::size_t num_points_ = 0;
  std::vector<Line> lines_;
  std::vector<boost::dynamic_bitset<>> line_bits_;
  std::vector<boost::dynamic_bitset<>> point_bits_;
  std::map<Line, std::size_t> lookup_;
};

struct PlaneCertificate {
  bool two_points_one_line = false;
  bool two_lines_one_point = false;
  bool quadrangle = false;
  std::optional<std::uint64_t> order;
  std::string failed_axiom;  // empty when all pass
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // point pair or line pair
  bool passed() const noexcept { return two_points_one_line && two_lines_one_point && quadrangle; }
};

PlaneCertificate verify_plane(const IncidenceStructure& s);

struct LinearSpaceReport {
  bool ok = true;
  std::optional<std::pair<PointIndex, PointIndex>> counterexample;
};

/// Any two distinct points lie on at most one line.
LinearSpaceReport verify_partial_linear_space(const IncidenceStructure& s);
/// Any two distinct points lie on exactly one line, and every line has at least two points.
LinearSpaceReport verify_linear_space(const IncidenceStructure& s);

/// Points = lines = G, x on line y iff x y^-1 in S. Line y is S*y.
IncidenceStructure plane_from_difference_set(const PartialDifferenceSet& s);

/// PG(m, q) with points normalised so that the first nonzero coordinate is 1.
struct ProjectiveSpace {
  unsigned m = 0;
  std::uint64_t q = 0;
  Field field;
  std::vector<std::vector<FieldElement>> points;
  IncidenceStructure geometry;

  /// Index of the point spanned by a nonzero vector.
  PointIndex index_of(const std::vector<FieldElement>& v) const;

  // Base-q code of a normalised vector -> point index.
  std::vector<PointIndex> code_to_point;
};

std::vector<FieldElement> normalize_projective(const Field& field, std::vector<FieldElement> v);

ProjectiveSpace pg_space(unsigned m, std::uint64_t q, std::uint64_t cap = 100000);

/// Point i of the classical model is the class g^i F_q^x. transport[i] is its
/// index in pg_space(m, q), using coordinates over the basis 1, g, ..., g^m.
std::vector<PointIndex> classical_transport(const ClassicalSinger& c, const ProjectiveSpace& space);

/// images[g][p] is the image of point p under the g-th group element.
struct PointAction {
  std::vector<std::vector<PointIndex>> images;
  std::size_t identity_row = 0;
  std::size_t num_points() const { return images.empty() ? 0 : images.front().size(); }
};

/// x -> x g on the elements of a finite group (in enumeration order).
PointAction right_translation(const GroupHandle& group);

/// Conjugates an action on indices through a bijection: new[g][t[p]] = t[old[g][p]].
PointAction transport_action(const PointAction& action, const std::vector<PointIndex>& t);

struct SingerCertificate {
  bool permutations = false;
  bool lines_preserved = false;
  bool regular = false;
  std::optional<std::size_t> bad_element;                       // line preservation
  std::optional<std::pair<PointIndex, PointIndex>> bad_pair;    // regularity
  std::size_t movers = 0;                                       // group elements moving bad_pair.first to .second
  bool passed() const noexcept { return permutations && lines_preserved && regular; }
};

SingerCertificate verify_singer_action(const IncidenceStructure& s, const PointAction& action);

struct VirtualSingerReport {
  bool free = false;
  std::size_t orbit_count = 0;
  std::optional<std::pair<std::size_t, PointIndex>> fixed;  // (element row, point)
};

VirtualSingerReport verify_virtual_singer(const PointAction& action);

/// All permutations generated by the given ones, identity first, then BFS order.
PointAction generate_group(const std::vector<std::vector<PointIndex>>& generators, std::size_t num_points);

/// x -> A x^sigma with sigma = Frobenius^frobenius.
struct Collineation {
  Field field;
  Matrix<FieldElement> matrix;
  unsigned frobenius = 0;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const;
};

/// Permutation of pg_space points induced by c; throws if the matrix is singular.
std::vector<PointIndex> collineation_permutation(const ProjectiveSpace& space, const Collineation& c);

/// Projective fixed points of a linear collineation from the eigenvectors of
/// the roots of its characteristic polynomial. Normalised and sorted.
std::vector<std::vector<FieldElement>> fixed_points_eigen(const Collineation& c);
/// Fixed points by scanning every point of the projective space.
std::vector<std::vector<FieldElement>> fixed_points_scan(const Collineation& c);
/// Eigen route for linear maps, scan otherwise.
std::vector<std::vector<FieldElement>> fixed_points(const Collineation& c);

struct RationalEigenspace {
  Rational eigenvalue;
  std::vector<std::vector<Rational>> basis;
};

/// Over Q the fixed points are the projectivised eigenspaces of rational eigenvalues.
std::vector<RationalEigenspace> fixed_points_rational(const Matrix<Rational>& a);

enum class IsoStatus { isomorphic, not_isomorphic, indeterminate };

struct IsoResult {
  IsoStatus status = IsoStatus::indeterminate;
  std::vector<PointIndex> map;  // point map when isomorphic
  std::uint64_t nodes = 0;
};

IsoResult isomorphic_planes(const IncidenceStructure& a, const IncidenceStructure& b,
                            std::uint64_t node_cap = 10000000);

}  // namespace singer
