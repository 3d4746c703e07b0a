#include <gtest/gtest.h>

#include <set>

#include "singer/errors.hpp"
#include "singer/incidence.hpp"
#include "oracle_values.hpp"

using namespace singer;

namespace {

PartialDifferenceSet cyclic_set(std::uint64_t v, std::vector<std::int64_t> items) {
  auto g = GroupHandle::cyclic(v);
  std::vector<GroupElement> el;
  for (auto x : items) el.push_back(g.make({x}));
  return certify(PartialDifferenceSet(g, el));
}

IncidenceStructure fano() { return plane_from_difference_set(cyclic_set(7, {0, 1, 3})); }

Matrix<FieldElement> matrix_from(const Field& f, std::size_t n, std::uint64_t code) {
  Matrix<FieldElement> m(n, f.zero());
  for (std::size_t k = 0; k < n * n; ++k) {
    m.entries[k] = f.element(static_cast<std::uint32_t>(code % f.size()));
    code /= f.size();
  }
  return m;
}

// Companion matrix of a monic polynomial (low-to-high, leading 1 omitted).
Matrix<FieldElement> companion(const Field& f, const std::vector<FieldElement>& low) {
  const auto n = low.size();
  Matrix<FieldElement> m(n, f.zero());
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = f.one();
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = f.neg(low[i]);
  return m;
}

}  // namespace

TEST(IncidenceStructure, Validation) {
  EXPECT_THROW(IncidenceStructure(3, {{0, 0}}), DomainError);
  EXPECT_THROW(IncidenceStructure(3, {{0, 3}}), DomainError);
  EXPECT_THROW(IncidenceStructure(3, {{0, 1}, {1, 0}}), DomainError);
  IncidenceStructure s(3, {{2, 0}, {1, 2}});
  EXPECT_EQ(s.line(0), (Line{0, 2}));
  EXPECT_TRUE(s.incident(2, 1));
  EXPECT_EQ(s.line_through(0, 2), 0u);
  EXPECT_FALSE(s.line_through(0, 1).has_value());
  EXPECT_EQ(s.lines_through(2).count(), 2u);
}

TEST(PlaneFromDifferenceSet, Examples) {
  const auto f = fano();
  EXPECT_EQ(f.num_points(), 7u);
  EXPECT_EQ(f.num_lines(), 7u);
  for (const auto& l : f.lines()) EXPECT_EQ(l.size(), 3u);
  auto cert = verify_plane(f);
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(cert.order, 2u);
  auto p13 = verify_plane(plane_from_difference_set(cyclic_set(13, {0, 1, 3, 9})));
  EXPECT_TRUE(p13.passed());
  EXPECT_EQ(p13.order, 3u);
  auto partial = plane_from_difference_set(cyclic_set(7, {0, 1}));
  EXPECT_TRUE(verify_partial_linear_space(partial).ok);
  EXPECT_FALSE(verify_plane(partial).passed());
  auto z = GroupHandle::integers();
  EXPECT_THROW(plane_from_difference_set(certify(PartialDifferenceSet(z, {z.identity()}))), UnsupportedError);
}

TEST(VerifyPlane, CompleteGraphFails) {
  IncidenceStructure k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto c = verify_plane(k4);
  EXPECT_TRUE(c.two_points_one_line);
  EXPECT_FALSE(c.two_lines_one_point);
  EXPECT_FALSE(c.passed());
  EXPECT_TRUE(c.counterexample.has_value());
  EXPECT_FALSE(c.failed_axiom.empty());
}

TEST(PgSpace, Counts) {
  auto a = pg_space(2, 2);
  EXPECT_EQ(a.points.size(), 7u);
  EXPECT_EQ(a.geometry.num_lines(), 7u);
  auto b = pg_space(2, 3);
  EXPECT_EQ(b.points.size(), 13u);
  EXPECT_EQ(b.geometry.num_lines(), 13u);
  for (const auto& l : b.geometry.lines()) EXPECT_EQ(l.size(), 4u);
  auto c = pg_space(3, 2);
  EXPECT_EQ(c.points.size(), 15u);
  EXPECT_EQ(c.geometry.num_lines(), 35u);
  EXPECT_TRUE(verify_linear_space(c.geometry).ok);
  auto d = verify_plane(pg_space(2, 4).geometry);
  EXPECT_TRUE(d.passed());
  EXPECT_EQ(d.order, 4u);
  EXPECT_THROW(pg_space(2, 6), DomainError);
  EXPECT_THROW(pg_space(9, 4), RangeError);
}

TEST(SingerAction, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_TRUE(verify_singer_action(fano(), right_translation(c7)).passed());
  PointAction trivial{{{0, 1, 2, 3, 4, 5, 6}}, 0};
  const auto bad = verify_singer_action(fano(), trivial);
  EXPECT_TRUE(bad.lines_preserved);
  EXPECT_FALSE(bad.regular);
  EXPECT_EQ(bad.bad_pair, std::make_pair(PointIndex{0}, PointIndex{1}));
  EXPECT_EQ(bad.movers, 0u);

  auto c = classical_singer(3, 2);
  auto space = pg_space(2, 3);
  auto action = transport_action(right_translation(c.group), classical_transport(c, space));
  EXPECT_TRUE(verify_singer_action(space.geometry, action).passed());
}

TEST(SingerAction, ClassicalSuite) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto c = classical_singer(q, 2);
    const auto plane = plane_from_difference_set(c.set);
    const auto cert = verify_plane(plane);
    EXPECT_TRUE(cert.passed()) << q;
    EXPECT_EQ(cert.order, q);
    const auto singer = verify_singer_action(plane, right_translation(c.group));
    EXPECT_TRUE(singer.passed()) << q;
    // a Singer group of a plane of order n has n^2+n+1 elements, an odd number
    EXPECT_EQ(c.v % 2, 1u);
    EXPECT_EQ(c.v, q * q + q + 1);
  }
}

TEST(SingerAction, PG32) {
  const auto c = classical_singer(2, 3);
  const auto space = pg_space(3, 2);
  ASSERT_EQ(space.points.size(), c.v);
  const auto action = transport_action(right_translation(c.group), classical_transport(c, space));
  EXPECT_TRUE(verify_singer_action(space.geometry, action).passed());
}

TEST(VirtualSinger, Examples) {
  auto r = verify_virtual_singer(right_translation(GroupHandle::cyclic(7)));
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.orbit_count, 1u);
  auto t = verify_virtual_singer(PointAction{{{0, 1, 2, 3, 4, 5, 6}}, 0});
  EXPECT_TRUE(t.free);
  EXPECT_EQ(t.orbit_count, 7u);

  // a linear map with eigenvalue 3 over GF(5) fixes a point of PG(1,5)... lifted to PG(2,5)
  const auto f5 = Field::make(5, 1);
  auto space = pg_space(2, 5);
  auto m = identity_matrix(GfArith{f5}, 3);
  m(0, 0) = f5.element(2);
  m(1, 2) = f5.element(1);
  Collineation c{f5, m, 0};
  ASSERT_FALSE(fixed_points(c).empty());
  auto group = generate_group({collineation_permutation(space, c)}, space.points.size());
  auto v = verify_virtual_singer(group);
  EXPECT_FALSE(v.free);
  EXPECT_TRUE(v.fixed.has_value());
}

TEST(FixedPoints, Examples) {
  const auto f5 = Field::make(5, 1);
  Collineation c{f5, companion(f5, {f5.from_int(-1), f5.from_int(-1)}), 0};
  const auto pts = fixed_points(c);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (std::vector<FieldElement>{f5.element(1), f5.element(3)}));
  EXPECT_EQ(fixed_points_scan(c), pts);

  const auto f2 = Field::make(2, 1);
  Collineation id{f2, identity_matrix(GfArith{f2}, 3), 0};
  EXPECT_EQ(fixed_points(id).size(), 7u);

  Collineation singer{f2, companion(f2, {f2.one(), f2.one(), f2.zero()}), 0};
  EXPECT_TRUE(fixed_points(singer).empty());
  const auto fano_space = pg_space(2, 2);
  const auto group = generate_group({collineation_permutation(fano_space, singer)}, 7);
  EXPECT_EQ(group.images.size(), 7u);
  EXPECT_TRUE(verify_singer_action(fano_space.geometry, group).passed());
}

TEST(FixedPoints, SemilinearScan) {
  // x -> x^2 on PG(2,4): fixes exactly the 7 points of the subplane PG(2,2)
  const auto f4 = Field::make(2, 2);
  Collineation frob{f4, identity_matrix(GfArith{f4}, 3), 1};
  EXPECT_EQ(fixed_points(frob).size(), 7u);
}

TEST(FixedPoints, Rational) {
  // diag(2, 2, 5): eigenspaces of dimension 2 and 1
  Matrix<Rational> a(3, Rational(0));
  a(0, 0) = 2;
  a(1, 1) = 2;
  a(2, 2) = 5;
  const auto spaces = fixed_points_rational(a);
  ASSERT_EQ(spaces.size(), 2u);
  EXPECT_EQ(spaces[0].eigenvalue, Rational(2));
  EXPECT_EQ(spaces[0].basis.size(), 2u);
  EXPECT_EQ(spaces[1].eigenvalue, Rational(5));
  EXPECT_EQ(spaces[1].basis.size(), 1u);
  // rotation by 90 degrees: no rational eigenvalue
  Matrix<Rational> r(2, Rational(0));
  r(0, 1) = -1;
  r(1, 0) = 1;
  EXPECT_TRUE(fixed_points_rational(r).empty());
}

struct EigenCase {
  std::uint64_t p;
  std::size_t n;
  std::size_t invertible;
  std::size_t with_fixed_point;
};

class EigenLemma : public ::testing::TestWithParam<EigenCase> {};

TEST_P(EigenLemma, RootIffFixedPoint) {
  const auto c = GetParam();
  const auto F = Field::make(c.p, 1);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < c.n * c.n; ++k) total *= c.p;
  std::size_t invertible = 0, fixed = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto m = matrix_from(F, c.n, code);
    if (determinant(GfArith{F}, m) == F.zero()) continue;
    ++invertible;
    Collineation col{F, m, 0};
    const bool has_root = !roots_in_field(F, char_poly(GfArith{F}, m)).empty();
    const auto scan = fixed_points_scan(col);
    ASSERT_EQ(has_root, !scan.empty()) << code;
    ASSERT_EQ(fixed_points_eigen(col), scan) << code;
    fixed += !scan.empty();
  }
  EXPECT_EQ(invertible, c.invertible);
  EXPECT_EQ(fixed, c.with_fixed_point);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, EigenLemma,
                         ::testing::Values(EigenCase{2, 3, oracle::kFixedGf2Dim3.first, oracle::kFixedGf2Dim3.second},
                                           EigenCase{3, 2, oracle::kFixedGf3Dim2.first, oracle::kFixedGf3Dim2.second}));

TEST(NoInvolution, IntersectionOfLineAndImageIsFixed) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto space = pg_space(2, q);
    const auto& F = space.field;
    const auto points = space.points.size();
    std::size_t involutions = 0;
    // sample matrices by a fixed stride through all 3x3 matrices
    std::uint64_t total = 1;
    for (int k = 0; k < 9; ++k) total *= q;
    const std::uint64_t stride = total > 4000 ? total / 4000 + 1 : 1;
    for (std::uint64_t code = 1; code < total; code += stride) {
      const auto m = matrix_from(F, 3, code);
      if (determinant(GfArith{F}, m) == F.zero()) continue;
      const auto perm = collineation_permutation(space, Collineation{F, m, 0});
      bool identity = true, order_two = true;
      for (PointIndex x = 0; x < points; ++x) {
        identity = identity && perm[x] == x;
        order_two = order_two && perm[perm[x]] == x;
      }
      if (identity || !order_two) continue;
      ++involutions;
      for (std::size_t l = 0; l < space.geometry.num_lines(); ++l) {
        Line image;
        for (auto x : space.geometry.line(l)) image.push_back(perm[x]);
        std::sort(image.begin(), image.end());
        const auto l2 = *space.geometry.find_line(image);
        if (l2 == l) continue;
        const auto meet = space.geometry.line_bits(l) & space.geometry.line_bits(l2);
        ASSERT_EQ(meet.count(), 1u);
        const auto x = static_cast<PointIndex>(meet.find_first());
        ASSERT_EQ(perm[x], x) << "q=" << q;
      }
    }
    EXPECT_GT(involutions, 0u) << q;
  }
}

TEST(PartialLinearSpace, HughesTruncation) {
  // lines S + y of a greedy set over the integers, cut to a window
  const auto z = GroupHandle::integers();
  const auto s = hughes_build(z, 40).state.current();
  std::int64_t lo = 0, hi = 0;
  for (const auto& e : s.elements()) {
    lo = std::min(lo, e.form()[0]);
    hi = std::max(hi, e.form()[0]);
  }
  const std::int64_t window = 2 * (hi - lo) + 1;
  std::set<Line> lines;
  for (std::int64_t y = -window; y <= window; ++y) {
    Line l;
    for (const auto& e : s.elements()) {
      const auto x = e.form()[0] + y;
      if (x >= 0 && x < window) l.push_back(static_cast<PointIndex>(x));
    }
    std::sort(l.begin(), l.end());
    if (l.size() >= 2) lines.insert(l);
  }
  IncidenceStructure t(static_cast<std::size_t>(window), {lines.begin(), lines.end()});
  EXPECT_TRUE(verify_partial_linear_space(t).ok);
}

TEST(PartialLinearSpace, CyclicSets) {
  auto g = GroupHandle::cyclic(211);
  const auto s = hughes_build(g, 25).state.current();
  EXPECT_TRUE(verify_partial_linear_space(plane_from_difference_set(s)).ok);
}

TEST(IsomorphicPlanes, Examples) {
  auto fano_pg = pg_space(2, 2).geometry;
  auto r = isomorphic_planes(fano_pg, fano());
  EXPECT_EQ(r.status, IsoStatus::isomorphic);
  EXPECT_EQ(isomorphic_planes(fano(), pg_space(2, 3).geometry).status, IsoStatus::not_isomorphic);
  auto other = plane_from_difference_set(cyclic_set(7, {0, 2, 6}));
  const auto base = fano();
  auto m = isomorphic_planes(base, other);
  ASSERT_EQ(m.status, IsoStatus::isomorphic);
  // the returned map carries lines to lines
  for (const auto& l : base.lines()) {
    Line image;
    for (auto x : l) image.push_back(m.map[x]);
    std::sort(image.begin(), image.end());
    EXPECT_TRUE(other.find_line(image).has_value());
  }
}

TEST(IsomorphicPlanes, CyclicModelIsDesarguesian) {
  for (std::uint64_t q : {2, 3}) {
    const auto c = classical_singer(q, 2);
    EXPECT_EQ(isomorphic_planes(plane_from_difference_set(c.set), pg_space(2, q).geometry).status,
              IsoStatus::isomorphic);
  }
  EXPECT_EQ(isomorphic_planes(fano(), fano(), 1).status, IsoStatus::indeterminate);
}
