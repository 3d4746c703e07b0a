#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "singer/finite_field.hpp"
#include "singer/group.hpp"

namespace singer {

/// A finite subset of a group, kept in insertion order. Only certify() can
/// set the certified flag, and it does so only after verify_partial passes.
class PartialDifferenceSet {
 public:
  /// Rejects foreign or repeated elements.
  PartialDifferenceSet(GroupHandle group, std::vector<GroupElement> elements);

  const GroupHandle& group() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool certified() const noexcept { return certified_; }
  bool contains(const GroupElement& g) const;

 private:
  friend PartialDifferenceSet certify(PartialDifferenceSet s);
  GroupHandle group_;
  std::vector<GroupElement> elements_;
  bool certified_ = false;
};

using OrderedPair = std::pair<GroupElement, GroupElement>;

struct PartialVerdict {
  bool partial = true;
  // Two distinct ordered pairs (a, b) with the same ab^-1; the first is the earlier one in scan order.
  std::optional<std::pair<OrderedPair, OrderedPair>> collision;
};

struct PerfectVerdict {
  bool perfect = false;
  std::vector<GroupElement> missing;   // nonidentity elements that are no difference
  std::vector<GroupElement> repeated;  // elements hit more than once
};

/// { ab^-1 : a, b in S, a != b }, sorted.
std::vector<GroupElement> differences(const PartialDifferenceSet& s);

PartialVerdict verify_partial(const PartialDifferenceSet& s);

/// Returns s with certified set; throws DomainError if s is not partial.
PartialDifferenceSet certify(PartialDifferenceSet s);

/// Finite groups only.
PerfectVerdict verify_perfect(const PartialDifferenceSet& s);

/// lambda if every nonidentity element is ab^-1 for exactly lambda ordered pairs.
std::optional<std::uint64_t> difference_multiplicity(const PartialDifferenceSet& s);

struct ClassicalSinger {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t v = 0;
  Field field;  // GF(q^{m+1})
  GroupHandle group;
  PartialDifferenceSet set;
};

/// Points of PG(m,q) are the classes g^i F_q^x, i in [0, v); S collects the
/// exponents of the hyperplane spanned over F_q by 1, g, ..., g^{m-1}.
ClassicalSinger classical_singer(std::uint64_t q, unsigned m, std::uint64_t cap = Field::default_cap);

struct BuilderOptions {
  std::size_t bound = 100000;            // candidates scanned per step
  std::size_t involution_bound = 10000;  // prefix scanned for involutions in infinite groups
};

enum class StepOutcome { extended, already_covered, bounded_failure };

struct StepLog {
  GroupElement target;
  std::optional<GroupElement> chosen_x;  // empty when the target was already a difference
  std::vector<GroupElement> added;
  std::size_t scanned = 0;
};

struct SkipCounts {
  std::size_t in_set = 0;
  std::size_t conjugation = 0;  // d^x = s_j^-1 s_i
  std::size_t square = 0;       // s_j^-1 d s_i = (s_j^-1 x)^2
  std::size_t clash = 0;        // some new difference repeats
};

class BuilderState {
 public:
  /// Starts from S = {e}. Refuses groups with an involution.
  static BuilderState start(const GroupHandle& group, BuilderOptions options = {});
  /// Starts from an already certified set; no involution check.
  static BuilderState from_set(const PartialDifferenceSet& set, BuilderOptions options = {});

  const PartialDifferenceSet& current() const noexcept { return current_; }
  const std::vector<GroupElement>& initial() const noexcept { return initial_; }
  const std::vector<StepLog>& log() const noexcept { return log_; }
  std::size_t targets_consumed() const noexcept { return log_.size(); }
  std::size_t cursor() const noexcept { return cursor_; }
  const SkipCounts& skips() const noexcept { return skips_; }
  const BuilderOptions& options() const noexcept { return options_; }
  bool covers(const GroupElement& d) const { return diffs_.contains(d); }

 private:
  explicit BuilderState(PartialDifferenceSet set, BuilderOptions options);
  friend struct StepResult hughes_step(const BuilderState& state, const GroupElement& d);

  PartialDifferenceSet current_;
  std::vector<GroupElement> initial_;
  std::vector<StepLog> log_;
  std::unordered_set<GroupElement, GroupElementHash> members_;
  std::unordered_set<GroupElement, GroupElementHash> diffs_;        // ab^-1
  std::unordered_set<GroupElement, GroupElementHash> left_quotients_;  // b^-1 a, including e
  SkipCounts skips_;
  BuilderOptions options_;
  std::size_t cursor_ = 0;  // total candidates examined
};

struct StepResult {
  BuilderState state;
  StepOutcome outcome;
};

/// One successor step: makes d a difference by adjoining the least admissible
/// x (in enumeration order) together with y = d^-1 x.
StepResult hughes_step(const BuilderState& state, const GroupElement& d);

struct BuildResult {
  BuilderState state;
  bool complete = false;
  std::optional<GroupElement> failed_target;
};

/// Runs hughes_step over the first `num_targets` nonidentity elements.
BuildResult hughes_build(const GroupHandle& group, std::size_t num_targets, BuilderOptions options = {});

struct ChainReport {
  bool ok = true;
  std::size_t prefixes_checked = 0;
  std::optional<std::size_t> first_bad_prefix;
};

/// Re-certifies the set after every prefix of the log and checks that the
/// union of the steps equals the final set.
ChainReport verify_chain(const BuilderState& state);

/// Stable hash of the log contents (targets, choices, additions).
std::uint64_t log_fingerprint(const BuilderState& state);

}  // namespace singer
