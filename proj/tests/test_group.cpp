#include <gtest/gtest.h>

#include <random>
#include <set>

#include "singer/errors.hpp"
#include "singer/group.hpp"

using namespace singer;

namespace {

std::vector<std::string> formatted(const GroupHandle& g, const std::vector<GroupElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(g.format(x));
  return out;
}

}  // namespace

TEST(GroupParse, SpecsRoundTrip) {
  for (const char* spec : {"cyclic:7", "abelian:3,9", "integers", "free:2", "fieldquot:p=2,n=1,m=3", "symmetric:4",
                           "monomial:n=2,m=3"}) {
    EXPECT_EQ(GroupHandle::parse(spec).spec(), spec);
  }
}

TEST(GroupParse, RejectsMalformed) {
  for (const char* spec : {"", "cyclic", "cyclic:0", "cyclic:x", "abelian:", "free:0", "dihedral:4", "symmetric:0"}) {
    EXPECT_THROW(GroupHandle::parse(spec), DomainError) << spec;
  }
}

TEST(GroupOrder, FieldQuotientIsProjectivePointCount) {
  EXPECT_EQ(*GroupHandle::parse("fieldquot:p=2,n=1,m=3").order(), 7u);
  EXPECT_EQ(*GroupHandle::parse("fieldquot:p=3,n=1,m=3").order(), 13u);
  EXPECT_EQ(*GroupHandle::parse("fieldquot:p=2,n=2,m=3").order(), 21u);
  EXPECT_EQ(*GroupHandle::monomial(2, 2).order(), 48u);
  EXPECT_FALSE(GroupHandle::integers().order().has_value());
}

TEST(GroupInverse, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_EQ(c7.format(c7.inverse(c7.parse_element("3"))), "4");
  auto f2 = GroupHandle::free(2);
  EXPECT_EQ(f2.format(f2.inverse(f2.parse_element("a*b"))), "b^-1*a^-1");
  auto s3 = GroupHandle::symmetric(3);
  EXPECT_EQ(s3.format(s3.inverse(s3.parse_element("(1,2,3)"))), "(1,3,2)");
}

TEST(GroupEnumerate, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_EQ(formatted(c7, c7.enumerate(3)), (std::vector<std::string>{"0", "1", "2"}));
  auto f2 = GroupHandle::free(2);
  EXPECT_EQ(formatted(f2, f2.enumerate(5)), (std::vector<std::string>{"e", "a", "a^-1", "b", "b^-1"}));
  auto z = GroupHandle::integers();
  EXPECT_EQ(formatted(z, z.enumerate(5)), (std::vector<std::string>{"0", "1", "-1", "2", "-2"}));
  EXPECT_THROW(c7.enumerate(8), RangeError);
}

TEST(GroupEnumerate, EnumeratorMatchesEnumerate) {
  for (const char* spec : {"abelian:3,9", "free:2", "integers", "symmetric:4"}) {
    auto g = GroupHandle::parse(spec);
    auto expect = g.enumerate(24);
    Enumerator it(g);
    for (const auto& e : expect) EXPECT_EQ(*it.next(), e) << spec;
  }
  const auto c3 = GroupHandle::cyclic(3);
  Enumerator it(c3);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(it.next().has_value());
  EXPECT_FALSE(it.next().has_value());
}

TEST(GroupInvolution, Examples) {
  const auto c7 = has_involution(GroupHandle::cyclic(7), 7);
  EXPECT_FALSE(c7.found);
  EXPECT_TRUE(c7.exhaustive);
  auto c4 = has_involution(GroupHandle::cyclic(4), 4);
  ASSERT_TRUE(c4.found);
  EXPECT_EQ(GroupHandle::cyclic(4).format(*c4.witness), "2");
  auto f2 = has_involution(GroupHandle::free(2), 10000);
  EXPECT_FALSE(f2.found);
  EXPECT_FALSE(f2.exhaustive);
  EXPECT_EQ(f2.scanned, 10000u);
}

TEST(GroupSquareRoots, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_EQ(formatted(c7, square_roots(c7, c7.parse_element("1"), 7)), std::vector<std::string>{"4"});
  auto z = GroupHandle::integers();
  EXPECT_TRUE(square_roots(z, z.parse_element("1"), 1000).empty());
  auto f2 = GroupHandle::free(2);
  EXPECT_EQ(formatted(f2, square_roots(f2, f2.parse_element("a*a"), 1000)), std::vector<std::string>{"a"});
}

TEST(GroupConjugacy, Examples) {
  auto ab = GroupHandle::parse("abelian:3,9");
  for (const auto& h : ab.enumerate(27)) EXPECT_EQ(conjugacy_sample(ab, h, 27), std::vector<GroupElement>{h});
  auto f2 = GroupHandle::free(2);
  // a conjugated by e, a, a^-1, b, b^-1
  std::set<std::string> got;
  for (const auto& x : conjugacy_sample(f2, f2.letter(1), 5)) got.insert(f2.format(x));
  EXPECT_EQ(got, (std::set<std::string>{"a", "b^-1*a*b", "b*a*b^-1"}));
  auto s3 = GroupHandle::symmetric(3);
  std::set<std::string> cls;
  for (const auto& x : conjugacy_sample(s3, s3.parse_element("(1,2)"), 6)) cls.insert(s3.format(x));
  EXPECT_EQ(cls, (std::set<std::string>{"(1,2)", "(1,3)", "(2,3)"}));
}

class FiniteGroupLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(FiniteGroupLaws, ExhaustiveAxioms) {
  const auto g = GroupHandle::parse(GetParam());
  const auto n = static_cast<std::size_t>(*g.order());
  const auto all = g.enumerate(n);
  std::set<GroupElement> distinct(all.begin(), all.end());
  ASSERT_EQ(distinct.size(), n);
  EXPECT_EQ(all.front(), g.identity());
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(g.index_of(all[i]), i);
    EXPECT_EQ(g.element_at(i), all[i]);
    EXPECT_EQ(g.mul(all[i], g.inverse(all[i])), g.identity());
    EXPECT_EQ(g.mul(g.identity(), all[i]), all[i]);
    EXPECT_EQ(g.parse_element(g.format(all[i])), all[i]);
  }
  // triples exhaustively while cheap, otherwise a fixed sample
  std::mt19937_64 rng(7);
  const bool exhaustive = n <= 64;
  const std::size_t rounds = exhaustive ? n * n * n : 100000;
  for (std::size_t r = 0; r < rounds; ++r) {
    const auto& a = exhaustive ? all[r % n] : all[rng() % n];
    const auto& b = exhaustive ? all[(r / n) % n] : all[rng() % n];
    const auto& c = exhaustive ? all[r / (n * n)] : all[rng() % n];
    ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

TEST_P(FiniteGroupLaws, OddOrderHasNoInvolution) {
  const auto g = GroupHandle::parse(GetParam());
  const auto scan = has_involution(g, static_cast<std::size_t>(*g.order()));
  if (*g.order() % 2 == 1) EXPECT_FALSE(scan.found);
  else EXPECT_TRUE(scan.found);  // Cauchy
}

INSTANTIATE_TEST_SUITE_P(Groups, FiniteGroupLaws,
                         ::testing::Values("cyclic:1", "cyclic:7", "cyclic:12", "cyclic:10000", "abelian:3,9",
                                           "abelian:2,6", "abelian:5,5,5", "fieldquot:p=2,n=1,m=3",
                                           "fieldquot:p=5,n=1,m=3", "symmetric:3", "symmetric:4", "symmetric:6",
                                           "monomial:n=2,m=2", "monomial:n=3,m=3"));

TEST(InfiniteGroupLaws, SampledTriples) {
  for (const auto& g : {GroupHandle::integers(), GroupHandle::free(2), GroupHandle::free(3)}) {
    const auto pool = g.enumerate(2000);
    std::mt19937_64 rng(11);
    for (int r = 0; r < 100000; ++r) {
      const auto& a = pool[rng() % pool.size()];
      const auto& b = pool[rng() % pool.size()];
      const auto& c = pool[rng() % pool.size()];
      ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      ASSERT_EQ(g.mul(a, g.inverse(a)), g.identity());
    }
  }
}

TEST(FreeGroup, EnumerationIsReducedShortlex) {
  const auto g = GroupHandle::free(2);
  const auto words = g.enumerate(5000);
  std::set<GroupElement> distinct(words.begin(), words.end());
  EXPECT_EQ(distinct.size(), words.size());
  std::size_t previous = 0;
  for (const auto& w : words) {
    const auto& f = w.form();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) ASSERT_NE(f[i], -f[i + 1]);
    ASSERT_GE(f.size(), previous);
    previous = f.size();
  }
  // 1 + 4 + 12 + 36 + 108 + 324 + 972 words of length <= 6
  EXPECT_EQ(words[1456].form().size(), 6u);
  EXPECT_EQ(words[1457].form().size(), 7u);
}

TEST(CyclicInvolutions, OddEvenUpTo500) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(has_involution(GroupHandle::cyclic(n), n).found, n % 2 == 0) << n;
  }
}
