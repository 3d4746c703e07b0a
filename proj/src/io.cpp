#include "singer/io.hpp"

#include <cstdio>

#include "singer/errors.hpp"

namespace singer {

Json to_json(const PartialDifferenceSet& s) {
  Json elements = Json::array();
  for (const auto& g : s.elements()) elements.push_back(s.group().format(g));
  return {{"group", s.group().spec()}, {"elements", elements}, {"certified", s.certified()}};
}

PartialDifferenceSet difference_set_from_json(const Json& j) {
  const auto group = GroupHandle::parse(j.at("group").get<std::string>());
  std::vector<GroupElement> elements;
  for (const auto& e : j.at("elements")) elements.push_back(group.parse_element(e.get<std::string>()));
  return PartialDifferenceSet(group, std::move(elements));
}

Json log_to_json(const BuilderState& state) {
  const auto& group = state.current().group();
  Json out = Json::array();
  for (const auto& step : state.log()) {
    Json added = Json::array();
    for (const auto& a : step.added) added.push_back(group.format(a));
    out.push_back({{"target", group.format(step.target)},
                   {"chosen_x", step.chosen_x ? Json(group.format(*step.chosen_x)) : Json(nullptr)},
                   {"added", added}});
  }
  return out;
}

Json to_json(const IncidenceStructure& s, Json meta) {
  return {{"points", s.num_points()}, {"lines", s.lines()}, {"meta", std::move(meta)}};
}

IncidenceStructure incidence_from_json(const Json& j) {
  return IncidenceStructure(j.at("points").get<std::size_t>(), j.at("lines").get<std::vector<Line>>());
}

Json to_json(const HyperTable& t) {
  Json add = Json::array();
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < t.size(); ++b) row.push_back(t.sum_list(a, b));
    add.push_back(std::move(row));
  }
  Json mul = Json::array();
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < t.size(); ++b) row.push_back(t.product(a, b));
    mul.push_back(std::move(row));
  }
  return {{"carrier", t.labels()}, {"zero", t.zero()}, {"one", t.one()}, {"mul", mul}, {"hyperadd", add}};
}

HyperTable hypertable_from_json(const Json& j) {
  auto labels = j.at("carrier").get<std::vector<std::string>>();
  const auto n = labels.size();
  if (n == 0 || n > kMaxCarrier) throw DomainError("carrier size out of range");
  auto mul = j.at("mul").get<std::vector<std::vector<std::uint32_t>>>();
  std::vector<std::vector<HyperSet>> add(n, std::vector<HyperSet>(n));
  const auto& rows = j.at("hyperadd");
  if (rows.size() != n) throw DomainError("hyperadd table has the wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw DomainError("hyperadd table has the wrong size");
    for (std::size_t b = 0; b < n; ++b) {
      for (auto k : rows[a][b].get<std::vector<std::uint32_t>>()) {
        if (k >= n) throw DomainError("hyperadd entry out of range");
        add[a][b].set(k);
      }
    }
  }
  if (mul.size() != n) throw DomainError("mul table has the wrong size");
  return HyperTable(std::move(labels), j.at("zero").get<std::uint32_t>(), j.at("one").get<std::uint32_t>(),
                    std::move(add), std::move(mul));
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const PlaneCertificate& c) {
  return {{"two_points_one_line", c.two_points_one_line},
          {"two_lines_one_point", c.two_lines_one_point},
          {"quadrangle", c.quadrangle},
          {"order", optional_json(c.order)},
          {"failed_axiom", c.failed_axiom.empty() ? Json(nullptr) : Json(c.failed_axiom)},
          {"counterexample", optional_json(c.counterexample)},
          {"passed", c.passed()}};
}

Json to_json(const SingerCertificate& c) {
  return {{"permutations", c.permutations},
          {"lines_preserved", c.lines_preserved},
          {"regular", c.regular},
          {"bad_element", optional_json(c.bad_element)},
          {"bad_pair", optional_json(c.bad_pair)},
          {"movers", c.movers},
          {"passed", c.passed()}};
}

Json to_json(const AxiomReport& r) {
  Json axioms = Json::object();
  for (const auto& a : r.axioms) axioms[a.name] = {{"passed", a.passed}, {"witness", a.witness}};
  return {{"axioms", axioms}, {"failed", r.failed()}, {"passed", r.all_passed()}};
}

Json to_json(const ChainReport& r) {
  return {{"ok", r.ok}, {"prefixes_checked", r.prefixes_checked}, {"first_bad_prefix", optional_json(r.first_bad_prefix)}};
}

Json to_json(const EmbeddingCertificate& c) {
  return {{"i", c.i},
          {"j", c.j},
          {"source_order", c.source_order},
          {"target_order", c.target_order},
          {"homomorphism", c.homomorphism},
          {"injective", c.injective},
          {"closed", c.closed},
          {"equivariant", c.equivariant},
          {"passed", c.passed()}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

VerifyOutcome verify_one(const Json& j) {
  VerifyOutcome out;
  if (!j.is_object()) return out;
  if (j.contains("group") && j.contains("elements") && j["elements"].is_array()) {
    out.recognised = true;
    const auto s = difference_set_from_json(j);
    const auto verdict = verify_partial(s);
    out.report = {{"kind", "difference-set"}, {"size", s.size()}, {"partial", verdict.partial}};
    if (verdict.collision) {
      const auto& g = s.group();
      const auto& [p, q] = *verdict.collision;
      out.report["collision"] = {{g.format(p.first), g.format(p.second)}, {g.format(q.first), g.format(q.second)}};
    }
    if (s.group().is_finite()) out.report["perfect"] = verify_perfect(s).perfect;
    // an uncertified set is consistent either way; a certified claim must hold
    const bool claimed = j.value("certified", false);
    out.passed = verdict.partial || !claimed;
    out.report["claimed_certified"] = claimed;
    return out;
  }
  if (j.contains("points") && j.contains("lines") && j["lines"].is_array()) {
    out.recognised = true;
    const auto s = incidence_from_json(j);
    const auto kind = j.contains("meta") ? j["meta"].value("kind", "projective-plane") : "projective-plane";
    if (kind == "projective-plane") {
      const auto cert = verify_plane(s);
      out.report = {{"kind", kind}, {"plane", to_json(cert)}};
      out.passed = cert.passed();
    } else {
      const auto r = verify_linear_space(s);
      out.report = {{"kind", kind}, {"linear_space", r.ok}, {"counterexample", optional_json(r.counterexample)}};
      out.passed = r.ok;
    }
    return out;
  }
  if (j.contains("carrier") && j.contains("hyperadd") && j["hyperadd"].is_array()) {
    out.recognised = true;
    const auto t = hypertable_from_json(j);
    const auto axioms = check_axioms(t);
    out.report = {{"kind", "hypertable"}, {"axioms", to_json(axioms)}};
    out.passed = axioms.all_passed();
    return out;
  }
  return out;
}

}  // namespace

VerifyOutcome verify_document(const Json& j) {
  auto direct = verify_one(j);
  if (direct.recognised || !j.is_object()) return direct;
  VerifyOutcome out;
  out.passed = true;
  out.report = Json::object();
  for (const auto& [key, value] : j.items()) {
    auto inner = verify_one(value);
    if (!inner.recognised) continue;
    out.recognised = true;
    out.passed = out.passed && inner.passed;
    out.report[key] = {{"passed", inner.passed}, {"report", inner.report}};
  }
  if (!out.recognised) out.passed = false;
  return out;
}

}  // namespace singer
