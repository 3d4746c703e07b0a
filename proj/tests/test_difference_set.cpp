#include <gtest/gtest.h>

#include <map>
#include <set>

#include "singer/difference_set.hpp"
#include "singer/errors.hpp"
#include "oracle_values.hpp"

using namespace singer;
using namespace oracle;

namespace {

PartialDifferenceSet make_set(const GroupHandle& g, std::vector<std::string> items) {
  std::vector<GroupElement> el;
  for (const auto& s : items) el.push_back(g.parse_element(s));
  return PartialDifferenceSet(g, el);
}

std::vector<std::int64_t> residues(const PartialDifferenceSet& s) {
  std::vector<std::int64_t> out;
  for (const auto& e : s.elements()) out.push_back(e.form()[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(PartialDifferenceSet, RejectsForeignAndRepeated) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_THROW(PartialDifferenceSet(c7, {c7.identity(), c7.identity()}), DomainError);
  auto c5 = GroupHandle::cyclic(5);
  EXPECT_THROW(PartialDifferenceSet(c7, {c5.identity()}), DomainError);
  EXPECT_FALSE(make_set(c7, {"0", "1", "3"}).certified());
  EXPECT_TRUE(certify(make_set(c7, {"0", "1", "3"})).certified());
  EXPECT_THROW(certify(make_set(c7, {"0", "1", "2"})), DomainError);
}

TEST(Differences, Fano) {
  auto c7 = GroupHandle::cyclic(7);
  auto d = differences(make_set(c7, {"0", "1", "3"}));
  std::vector<std::string> got;
  for (const auto& x : d) got.push_back(c7.format(x));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "2", "3", "4", "5", "6"}));
}

TEST(VerifyPartial, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_TRUE(verify_partial(make_set(c7, {"0", "1", "3"})).partial);
  auto z = GroupHandle::integers();
  const auto v = verify_partial(make_set(z, {"0", "1", "3", "5"}));
  ASSERT_FALSE(v.partial);
  const auto& [first, second] = *v.collision;
  EXPECT_EQ(z.format(first.first) + "," + z.format(first.second), "3,1");
  EXPECT_EQ(z.format(second.first) + "," + z.format(second.second), "5,3");
}

TEST(VerifyPerfect, Examples) {
  auto c7 = GroupHandle::cyclic(7);
  EXPECT_TRUE(verify_perfect(make_set(c7, {"0", "1", "3"})).perfect);
  auto c13 = GroupHandle::cyclic(13);
  EXPECT_TRUE(verify_perfect(make_set(c13, {"0", "1", "3", "9"})).perfect);
  const auto bad = verify_perfect(make_set(c7, {"0", "1", "2"}));
  EXPECT_FALSE(bad.perfect);
  ASSERT_FALSE(bad.missing.empty());
  EXPECT_EQ(c7.format(bad.missing.front()), "3");
  ASSERT_FALSE(bad.repeated.empty());
  EXPECT_EQ(c7.format(bad.repeated.front()), "1");
  EXPECT_THROW(verify_perfect(make_set(GroupHandle::integers(), {"0", "1"})), UnsupportedError);
}

TEST(Classical, MatchesReference) {
  for (const auto& [key, expect] : kClassical) {
    const auto [q, m] = key;
    const auto c = classical_singer(q, m);
    EXPECT_EQ(c.v, expect.first) << q;
    EXPECT_EQ(residues(c.set), expect.second) << q;
    if (m == 2) {
      EXPECT_TRUE(c.set.certified());
      const auto perfect = verify_perfect(c.set);
      EXPECT_TRUE(perfect.perfect);
      // |G| = k^2 - k + 1 for a perfect set
      EXPECT_EQ(c.v, c.set.size() * c.set.size() - c.set.size() + 1);
      EXPECT_EQ(difference_multiplicity(c.set), 1u);
    }
  }
  // PG(3,2): a (15,7,3) difference set
  EXPECT_EQ(difference_multiplicity(classical_singer(2, 3).set), 3u);
  EXPECT_FALSE(classical_singer(2, 3).set.certified());
}

TEST(Classical, Errors) {
  EXPECT_THROW(classical_singer(6, 2), DomainError);
  EXPECT_THROW(classical_singer(3, 1), DomainError);
  EXPECT_THROW(classical_singer(1024, 2), RangeError);
}

TEST(HughesStep, Examples) {
  auto z = GroupHandle::integers();
  auto s = BuilderState::start(z);
  auto r1 = hughes_step(s, z.parse_element("1"));
  EXPECT_EQ(r1.outcome, StepOutcome::extended);
  EXPECT_EQ(residues(r1.state.current()), (std::vector<std::int64_t>{0, 1}));
  auto r2 = hughes_step(r1.state, z.parse_element("2"));
  EXPECT_EQ(residues(r2.state.current()), (std::vector<std::int64_t>{0, 1, 3}));
  EXPECT_EQ(z.format(*r2.state.log().back().chosen_x), "3");
  auto covered = hughes_step(r2.state, z.parse_element("-2"));
  EXPECT_EQ(covered.outcome, StepOutcome::already_covered);
  EXPECT_FALSE(covered.state.log().back().chosen_x.has_value());

  auto f2 = GroupHandle::free(2);
  auto rf = hughes_step(BuilderState::start(f2), f2.letter(1));
  std::vector<std::string> got;
  for (const auto& e : rf.state.current().elements()) got.push_back(f2.format(e));
  EXPECT_EQ(got, (std::vector<std::string>{"e", "a"}));
  EXPECT_THROW(hughes_step(rf.state, f2.identity()), DomainError);
}

TEST(HughesStep, BoundedFailure) {
  auto z = GroupHandle::integers();
  auto s = hughes_build(z, 6).state;
  BuilderOptions tight{2, 100};
  auto limited = BuilderState::from_set(s.current(), tight);
  auto r = hughes_step(limited, z.parse_element("1000"));
  EXPECT_EQ(r.outcome, StepOutcome::bounded_failure);
  EXPECT_EQ(r.state.current().elements(), s.current().elements());
}

TEST(HughesBuild, IntegersFourTargets) {
  auto z = GroupHandle::integers();
  auto r = hughes_build(z, 4);
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(residues(r.state.current()), (std::vector<std::int64_t>{0, 1, 3}));
  ASSERT_EQ(r.state.log().size(), 4u);
  EXPECT_FALSE(r.state.log()[1].chosen_x.has_value());  // -1 is already 0 - 1
  EXPECT_FALSE(r.state.log()[3].chosen_x.has_value());  // -2 = 1 - 3
}

TEST(HughesBuild, MatchesReference) {
  auto z = hughes_build(GroupHandle::integers(), 200);
  ASSERT_TRUE(z.complete);
  EXPECT_EQ(residues(z.state.current()), kIntegers200);
  std::vector<std::int64_t> order;
  for (std::size_t k = 0; k < 12; ++k) order.push_back(z.state.current().elements()[k].form()[0]);
  EXPECT_EQ(order, (std::vector<std::int64_t>{0, 1, 3, -5, -9, -20, -27, 45, 32, -66, -80, -113}));

  auto f2 = GroupHandle::free(2);
  auto f = hughes_build(f2, 100);
  ASSERT_TRUE(f.complete);
  std::vector<std::string> got;
  for (const auto& e : f.state.current().elements()) got.push_back(f2.format(e));
  EXPECT_EQ(got, kFree100);
}

TEST(HughesBuild, RefusesInvolutions) {
  for (const char* spec : {"cyclic:4", "abelian:2,6", "symmetric:3", "cyclic:10"}) {
    try {
      hughes_build(GroupHandle::parse(spec), 2);
      FAIL() << spec;
    } catch (const PreconditionError& e) {
      EXPECT_NE(std::string(e.what()).find("contains no involutions"), std::string::npos);
    }
  }
  EXPECT_TRUE(hughes_build(GroupHandle::cyclic(7), 6).complete);
  EXPECT_THROW(hughes_build(GroupHandle::cyclic(7), 7), RangeError);
}

class BuilderProperties : public ::testing::TestWithParam<std::pair<const char*, std::size_t>> {};

TEST_P(BuilderProperties, ChainStepSizesAndDeterminism) {
  const auto [spec, targets] = GetParam();
  const auto g = GroupHandle::parse(spec);
  const auto a = hughes_build(g, targets);
  const auto b = hughes_build(g, targets);
  EXPECT_EQ(log_fingerprint(a.state), log_fingerprint(b.state));
  EXPECT_EQ(a.state.current().elements(), b.state.current().elements());
  const auto chain = verify_chain(a.state);
  EXPECT_TRUE(chain.ok);
  EXPECT_EQ(chain.prefixes_checked, a.state.log().size() + 1);

  // replay step by step: |S'| - |S| in {0,1,2}, the target is covered, S' is partial
  auto state = BuilderState::start(g);
  for (const auto& step : a.state.log()) {
    const auto before = state.current().size();
    auto r = hughes_step(state, step.target);
    const auto after = r.state.current().size();
    EXPECT_LE(after - before, 2u);
    EXPECT_TRUE(r.state.covers(step.target));
    EXPECT_TRUE(verify_partial(r.state.current()).partial);
    state = std::move(r.state);
  }
  EXPECT_EQ(state.current().elements(), a.state.current().elements());
  if (g.is_abelian()) EXPECT_EQ(a.state.skips().conjugation, 0u);
}

INSTANTIATE_TEST_SUITE_P(Groups, BuilderProperties,
                         ::testing::Values(std::make_pair("integers", 60), std::make_pair("free:2", 40),
                                           std::make_pair("free:3", 30), std::make_pair("cyclic:211", 30),
                                           std::make_pair("abelian:3,9", 20), std::make_pair("abelian:7,49", 40)));

TEST(VerifyChain, DetectsTampering) {
  auto z = GroupHandle::integers();
  auto good = hughes_build(z, 10).state;
  EXPECT_TRUE(verify_chain(good).ok);
  // a state started from a set that is not partial cannot exist
  EXPECT_THROW(BuilderState::from_set(make_set(z, {"0", "1", "2"})), DomainError);
}
