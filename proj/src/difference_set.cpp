#include "singer/difference_set.hpp"

#include <algorithm>
#include <set>

#include "singer/errors.hpp"
#include "singer/hash.hpp"

namespace singer {

PartialDifferenceSet::PartialDifferenceSet(GroupHandle group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::unordered_set<GroupElement, GroupElementHash> seen;
  for (const auto& g : elements_) {
    if (!group_.contains(g)) throw DomainError("element does not belong to " + group_.spec());
    if (!seen.insert(g).second) throw DomainError("repeated element " + group_.format(g));
  }
}

bool PartialDifferenceSet::contains(const GroupElement& g) const {
  return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

std::vector<GroupElement> differences(const PartialDifferenceSet& s) {
  const auto& G = s.group();
  std::set<GroupElement> out;
  for (const auto& a : s.elements()) {
    for (const auto& b : s.elements()) {
      if (a != b) out.insert(G.mul(a, G.inverse(b)));
    }
  }
  return {out.begin(), out.end()};
}

PartialVerdict verify_partial(const PartialDifferenceSet& s) {
  const auto& G = s.group();
  const auto& el = s.elements();
  std::unordered_map<GroupElement, OrderedPair, GroupElementHash> seen;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& pair : {OrderedPair{el[i], el[j]}, OrderedPair{el[j], el[i]}}) {
        auto d = G.mul(pair.first, G.inverse(pair.second));
        auto [it, fresh] = seen.emplace(d, pair);
        if (!fresh) return {false, std::make_pair(it->second, pair)};
      }
    }
  }
  return {};
}

PartialDifferenceSet certify(PartialDifferenceSet s) {
  auto verdict = verify_partial(s);
  if (!verdict.partial) {
    const auto& G = s.group();
    const auto& [p, q] = *verdict.collision;
    throw DomainError("not a partial difference set: (" + G.format(p.first) + "," + G.format(p.second) + ") and (" +
                      G.format(q.first) + "," + G.format(q.second) + ") have the same difference");
  }
  s.certified_ = true;
  return s;
}

namespace {

std::vector<std::uint64_t> difference_counts(const PartialDifferenceSet& s) {
  const auto& G = s.group();
  if (!G.is_finite()) throw UnsupportedError("difference counts need a finite group");
  std::vector<std::uint64_t> counts(*G.order(), 0);
  std::vector<GroupElement> inv;
  for (const auto& a : s.elements()) inv.push_back(G.inverse(a));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j) ++counts[G.index_of(G.mul(s.elements()[i], inv[j]))];
    }
  }
  return counts;
}

}  // namespace

PerfectVerdict verify_perfect(const PartialDifferenceSet& s) {
  const auto& G = s.group();
  if (!G.is_finite()) throw UnsupportedError("verify_perfect needs a finite group; " + G.spec() + " is infinite");
  auto counts = difference_counts(s);
  PerfectVerdict out;
  for (std::uint64_t k = 1; k < counts.size(); ++k) {
    if (counts[k] == 0) out.missing.push_back(G.element_at(k));
    if (counts[k] > 1) out.repeated.push_back(G.element_at(k));
  }
  out.perfect = out.missing.empty() && out.repeated.empty() && counts[0] == 0;
  return out;
}

std::optional<std::uint64_t> difference_multiplicity(const PartialDifferenceSet& s) {
  auto counts = difference_counts(s);
  if (counts.size() < 2) return std::nullopt;
  const auto lambda = counts[1];
  for (std::size_t k = 1; k < counts.size(); ++k) {
    if (counts[k] != lambda) return std::nullopt;
  }
  return lambda;
}

ClassicalSinger classical_singer(std::uint64_t q, unsigned m, std::uint64_t cap) {
  auto pp = prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  if (m < 2) throw DomainError("classical_singer needs m >= 2");
  const auto [p, n] = *pp;
  auto field = Field::make(p, n * (m + 1), cap);
  const std::uint64_t order = field.size() - 1;
  const std::uint64_t v = order / (q - 1);

  // F_q = {0} together with the powers of g^v.
  std::vector<FieldElement> base{field.zero()};
  for (std::uint64_t k = 0; k + 1 < q; ++k) base.push_back(field.exp(static_cast<std::int64_t>(k * v)));

  std::vector<FieldElement> basis;
  for (unsigned k = 0; k < m; ++k) basis.push_back(field.exp(k));

  std::vector<bool> in_hyperplane(v, false);
  std::vector<std::size_t> digits(m, 0);
  while (true) {
    FieldElement x = field.zero();
    for (unsigned k = 0; k < m; ++k) x = field.add(x, field.mul(base[digits[k]], basis[k]));
    if (x.value != 0) in_hyperplane[field.log(x) % v] = true;
    unsigned pos = 0;
    while (pos < m && digits[pos] + 1 == q) digits[pos++] = 0;
    if (pos == m) break;
    ++digits[pos];
  }

  auto group = GroupHandle::cyclic(v);
  std::vector<GroupElement> elements;
  for (std::uint64_t i = 0; i < v; ++i) {
    if (in_hyperplane[i]) elements.push_back(group.element_at(i));
  }
  PartialDifferenceSet set(group, std::move(elements));
  if (verify_partial(set).partial) set = certify(std::move(set));
  return {q, m, v, field, group, std::move(set)};
}

BuilderState::BuilderState(PartialDifferenceSet set, BuilderOptions options)
    : current_(std::move(set)), initial_(current_.elements()), options_(options) {
  const auto& G = current_.group();
  for (const auto& a : current_.elements()) {
    members_.insert(a);
    for (const auto& b : current_.elements()) {
      left_quotients_.insert(G.mul(G.inverse(b), a));
      if (a != b) diffs_.insert(G.mul(a, G.inverse(b)));
    }
  }
}

BuilderState BuilderState::start(const GroupHandle& group, BuilderOptions options) {
  const std::size_t bound =
      group.is_finite() ? static_cast<std::size_t>(*group.order()) : options.involution_bound;
  auto scan = has_involution(group, bound);
  if (scan.found) {
    throw PreconditionError("the group " + group.spec() + " has the involution " + group.format(*scan.witness) +
                            "; the construction needs a group that contains no involutions");
  }
  return BuilderState(certify(PartialDifferenceSet(group, {group.identity()})), options);
}

BuilderState BuilderState::from_set(const PartialDifferenceSet& set, BuilderOptions options) {
  return BuilderState(certify(set), options);
}

StepResult hughes_step(const BuilderState& state, const GroupElement& d) {
  const auto& G = state.current_.group();
  if (d == G.identity()) throw DomainError("target must not be the identity");
  if (!state.current_.certified()) throw PreconditionError("builder state is not certified");
  if (state.diffs_.contains(d)) {
    BuilderState next = state;
    next.log_.push_back({d, std::nullopt, {}, 0});
    return {std::move(next), StepOutcome::already_covered};
  }

  const auto d_inv = G.inverse(d);
  const auto& S = state.current_.elements();
  std::vector<GroupElement> S_inv;
  for (const auto& s : S) S_inv.push_back(G.inverse(s));
  SkipCounts skips;
  Enumerator it(G);
  std::size_t scanned = 0;
  std::vector<GroupElement> fresh_diffs;

  auto admissible = [&](const GroupElement& x, const GroupElement& y, bool y_new) {
    const auto x_inv = G.inverse(x);
    // d^x = s_j^-1 s_i
    if (state.left_quotients_.contains(G.mul(G.mul(x_inv, d), x))) {
      ++skips.conjugation;
      return false;
    }
    // s_j^-1 d s_i = (s_j^-1 x)^2  <=>  s_i = d^-1 x s_j^-1 x
    const auto dx = G.mul(d_inv, x);
    for (const auto& sj_inv : S_inv) {
      if (state.members_.contains(G.mul(G.mul(dx, sj_inv), x))) {
        ++skips.square;
        return false;
      }
    }
    fresh_diffs.clear();
    std::unordered_set<GroupElement, GroupElementHash> local;
    auto add = [&](const GroupElement& e) {
      if (state.diffs_.contains(e) || !local.insert(e).second) return false;
      fresh_diffs.push_back(e);
      return true;
    };
    std::vector<GroupElement> news{x};
    if (y_new) news.push_back(y);
    for (const auto& a : news) {
      const auto a_inv = G.inverse(a);
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (!add(G.mul(a, S_inv[k])) || !add(G.mul(S[k], a_inv))) {
          ++skips.clash;
          return false;
        }
      }
    }
    if (y_new && (!add(G.mul(x, G.inverse(y))) || !add(G.mul(y, G.inverse(x))))) {
      ++skips.clash;
      return false;
    }
    return true;
  };

  while (scanned < state.options_.bound) {
    auto cand = it.next();
    if (!cand) break;
    ++scanned;
    const auto& x = *cand;
    if (state.members_.contains(x)) {
      ++skips.in_set;
      continue;
    }
    const auto y = G.mul(d_inv, x);
    const bool y_new = !state.members_.contains(y);
    if (!admissible(x, y, y_new)) continue;

    BuilderState next = state;
    auto elements = S;
    std::vector<GroupElement> added{x};
    if (y_new) added.push_back(y);
    for (const auto& a : added) {
      elements.push_back(a);
      next.members_.insert(a);
    }
    next.current_ = certify(PartialDifferenceSet(G, std::move(elements)));
    for (const auto& e : fresh_diffs) next.diffs_.insert(e);
    for (const auto& a : next.current_.elements()) {
      for (const auto& b : added) {
        next.left_quotients_.insert(G.mul(G.inverse(b), a));
        next.left_quotients_.insert(G.mul(G.inverse(a), b));
      }
    }
    next.skips_.in_set += skips.in_set;
    next.skips_.conjugation += skips.conjugation;
    next.skips_.square += skips.square;
    next.skips_.clash += skips.clash;
    next.cursor_ += scanned;
    next.log_.push_back({d, x, std::move(added), scanned});
    if (!next.diffs_.contains(d)) throw DomainError("internal: target not covered after step");  // unreachable
    return {std::move(next), StepOutcome::extended};
  }
  BuilderState same = state;
  same.cursor_ += scanned;
  return {std::move(same), StepOutcome::bounded_failure};
}

BuildResult hughes_build(const GroupHandle& group, std::size_t num_targets, BuilderOptions options) {
  auto start = BuilderState::start(group, options);
  if (group.is_finite() && num_targets + 1 > *group.order()) {
    throw RangeError("only " + std::to_string(*group.order() - 1) + " nonidentity targets exist in " + group.spec());
  }
  auto targets = group.enumerate(num_targets + 1);
  BuildResult result{std::move(start), false, std::nullopt};
  for (std::size_t k = 1; k < targets.size(); ++k) {
    auto step = hughes_step(result.state, targets[k]);
    result.state = std::move(step.state);
    if (step.outcome == StepOutcome::bounded_failure) {
      result.failed_target = targets[k];
      return result;
    }
  }
  result.complete = true;
  return result;
}

ChainReport verify_chain(const BuilderState& state) {
  const auto& G = state.current().group();
  ChainReport report;
  std::vector<GroupElement> running = state.initial();
  auto check = [&](std::size_t prefix) {
    ++report.prefixes_checked;
    bool ok = true;
    try {
      ok = verify_partial(PartialDifferenceSet(G, running)).partial;
    } catch (const DomainError&) {
      ok = false;
    }
    if (!ok && report.ok) {
      report.ok = false;
      report.first_bad_prefix = prefix;
    }
  };
  check(0);
  for (std::size_t k = 0; k < state.log().size(); ++k) {
    for (const auto& a : state.log()[k].added) running.push_back(a);
    check(k + 1);
  }
  if (running != state.current().elements() && report.ok) {
    report.ok = false;
    report.first_bad_prefix = state.log().size();
  }
  return report;
}

std::uint64_t log_fingerprint(const BuilderState& state) {
  const auto& G = state.current().group();
  std::uint64_t h = fnv1a(G.spec());
  for (const auto& step : state.log()) {
    h = fnv1a("|t:" + G.format(step.target), h);
    h = fnv1a(step.chosen_x ? ";x:" + G.format(*step.chosen_x) : std::string(";x:-"), h);
    for (const auto& a : step.added) h = fnv1a(";a:" + G.format(a), h);
  }
  return h;
}

}  // namespace singer
