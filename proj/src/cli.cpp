#include "singer/cli.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "singer/errors.hpp"
#include "singer/f1_space.hpp"
#include "singer/io.hpp"

namespace singer {

namespace {

struct Options {
  std::string out_path;
  std::string verify_path;
  std::uint64_t field_cap = Field::default_cap;
  std::uint64_t point_cap = 100000;
  std::size_t bound = 100000;
  std::size_t involution_bound = 10000;

  std::uint64_t q = 0;
  unsigned m = 2;

  std::string group;
  std::size_t targets = 50;

  unsigned kalg_n = 0;
  std::uint64_t p = 0;
  unsigned q_deg = 1;
  unsigned ext = 3;
  std::string table_file;

  unsigned f1_m = 0;
  unsigned f1_n = 1;
  std::string f1_s = "cycle";
  std::string chain;

  std::uint64_t lemma_max = 12;
};

struct Outcome {
  Json payload;
  int code = exit_ok;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Outcome cmd_classical(const Options& o, std::ostream& log) {
  auto c = classical_singer(o.q, o.m, o.field_cap);
  Outcome r;
  auto& j = r.payload;
  j["command"] = "classical";
  j["q"] = c.q;
  j["m"] = c.m;
  j["v"] = c.v;
  j["k"] = c.set.size();
  j["difference_set"] = to_json(c.set);
  j["lambda"] = nullptr;
  if (auto lambda = difference_multiplicity(c.set)) j["lambda"] = *lambda;

  bool ok = true;
  if (c.m == 2) {
    const auto perfect = verify_perfect(c.set);
    const auto plane = plane_from_difference_set(c.set);
    const auto cert = verify_plane(plane);
    const auto singer = verify_singer_action(plane, right_translation(c.group));
    j["perfect"] = perfect.perfect;
    j["plane"] = to_json(plane, {{"kind", "projective-plane"}, {"group", c.group.spec()}});
    j["plane_certificate"] = to_json(cert);
    j["singer_action"] = to_json(singer);
    ok = perfect.perfect && cert.passed() && cert.order == o.q && singer.passed();
  } else {
    const auto space = pg_space(c.m, c.q, o.point_cap);
    const auto action = transport_action(right_translation(c.group), classical_transport(c, space));
    const auto singer = verify_singer_action(space.geometry, action);
    const bool counts = space.points.size() == c.v;
    j["geometry"] = to_json(space.geometry, {{"kind", "projective-space"}, {"m", c.m}, {"q", c.q}});
    j["point_count_matches"] = counts;
    j["singer_action"] = to_json(singer);
    ok = counts && singer.passed();
  }
  j["passed"] = ok;
  log << "classical q=" << c.q << " m=" << c.m << ": v=" << c.v << " k=" << c.set.size()
      << (ok ? " certified" : " FAILED") << "\n";
  r.code = ok ? exit_ok : exit_verification;
  return r;
}

Outcome cmd_hughes(const Options& o, std::ostream& log) {
  const auto group = GroupHandle::parse(o.group);
  auto targets = o.targets;
  if (group.is_finite() && targets >= *group.order()) {
    targets = static_cast<std::size_t>(*group.order() - 1);
    log << "truncating to the " << targets << " nonidentity elements of " << group.spec() << "\n";
  }
  const auto built = hughes_build(group, targets, {o.bound, o.involution_bound});
  const auto& state = built.state;
  const auto chain = verify_chain(state);
  Outcome r;
  auto& j = r.payload;
  j["command"] = "hughes";
  j["group"] = group.spec();
  j["targets"] = targets;
  j["complete"] = built.complete;
  j["failed_target"] = built.failed_target ? Json(group.format(*built.failed_target)) : Json(nullptr);
  j["difference_set"] = to_json(state.current());
  j["size"] = state.current().size();
  j["log"] = log_to_json(state);
  j["chain"] = to_json(chain);
  j["fingerprint"] = hex64(log_fingerprint(state));
  const auto& s = state.skips();
  j["skips"] = {{"in_set", s.in_set}, {"conjugation", s.conjugation}, {"square", s.square}, {"clash", s.clash}};
  j["candidates_scanned"] = state.cursor();
  log << "hughes " << group.spec() << ": |S|=" << state.current().size() << " after " << state.log().size()
      << " targets, fingerprint " << hex64(log_fingerprint(state)) << "\n";
  if (!chain.ok) {
    r.code = exit_verification;
  } else if (!built.complete) {
    log << "bounded failure at target " << group.format(*built.failed_target) << "\n";
    r.code = exit_bounded;
  }
  return r;
}

Json classification_json(const Classification& c) {
  return {{"case", case_name(c.kind)},
          {"degenerate", c.degenerate},
          {"group_order", c.group_order},
          {"q", c.q},
          {"m", c.m},
          {"points", c.points},
          {"lines", c.lines},
          {"plane", c.plane ? to_json(*c.plane) : Json(nullptr)}};
}

// Axioms, the vectorspace law and, when both hold, the classification.
Outcome analyse_table(const HyperTable& t, std::ostream& log) {
  Outcome r;
  auto& j = r.payload;
  const auto axioms = check_axioms(t);
  const auto law = check_vectorspace_law(t);
  j["table"] = to_json(t);
  j["axioms"] = to_json(axioms);
  j["vectorspace_law"] = {{"holds", law.holds}, {"witness", law.witness ? Json(*law.witness) : Json(nullptr)}};
  j["classification"] = nullptr;
  if (axioms.all_passed() && law.holds) {
    const auto c = classify_extension(t);
    j["classification"] = classification_json(c);
    log << "case " << case_name(c.kind) << (c.degenerate ? " (degenerate)" : "") << "\n";
  }
  if (!axioms.all_passed()) {
    log << "axioms failed:";
    for (const auto& name : axioms.failed()) log << " " << name;
    log << "\n";
    r.code = exit_verification;
  }
  return r;
}

QuotientHyperring build_quotient(const Options& o) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < o.q_deg; ++k) q *= o.p;
  if (!is_prime(o.p)) throw DomainError(std::to_string(o.p) + " is not prime");
  return quotient_hyperring(QuotientSpec::field_over_subfield(q, o.ext), o.field_cap);
}

Outcome cmd_hyper(const std::string& which, const Options& o, std::ostream& log) {
  Outcome r;
  if (which == "krasner") {
    r = analyse_table(krasner(), log);
  } else if (which == "kalg") {
    r = analyse_table(k_algebra(GroupHandle::cyclic(o.kalg_n)), log);
    r.payload["group"] = GroupHandle::cyclic(o.kalg_n).spec();
  } else if (which == "quotient") {
    const auto qr = build_quotient(o);
    r = analyse_table(qr.table, log);
    const auto k = contains_krasner(qr);
    r.payload["classes"] = qr.table.size();
    r.payload["unit_group_order"] = qr.unit_group.size();
    r.payload["contains_krasner"] = {{"table", k.table}, {"subfield", k.subfield}, {"agree", k.agree()}};
  } else if (which == "classify") {
    const auto t = !o.table_file.empty() ? hypertable_from_json(read_json_file(o.table_file))
                   : o.kalg_n != 0      ? k_algebra(GroupHandle::cyclic(o.kalg_n))
                   : o.p != 0           ? build_quotient(o).table
                                        : krasner();
    const auto c = classify_extension(t);
    r.payload["classification"] = classification_json(c);
    r.payload["table"] = to_json(t);
    log << "case " << case_name(c.kind) << "\n";
  } else if (which == "roundtrip") {
    const auto qr = build_quotient(o);
    const auto forward = hyperfield_to_geometry(qr.table);
    const auto plane = verify_plane(forward.geometry);
    const auto back = geometry_to_hyperfield(forward.geometry, forward.labeling);
    const bool tables_equal = back == qr.table;
    const bool incidence_equal = hyperfield_to_geometry(back).geometry.same_incidence(forward.geometry);
    auto& j = r.payload;
    j["geometry"] = to_json(forward.geometry, {{"kind", "projective-plane"}});
    j["plane_certificate"] = to_json(plane);
    j["tables_equal"] = tables_equal;
    j["incidence_equal"] = incidence_equal;
    const bool ok = plane.passed() && tables_equal && incidence_equal;
    j["passed"] = ok;
    log << "roundtrip: " << forward.geometry.num_points() << " points, " << (ok ? "exact" : "MISMATCH") << "\n";
    if (!ok) r.code = exit_verification;
  }
  r.payload["command"] = "hyper " + which;
  return r;
}

std::vector<unsigned> parse_chain(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw DomainError("bad chain entry '" + item + "'");
    }
  }
  return out;
}

Json f1_json(const F1SingerGroup& g) {
  return {{"order", g.order()},
          {"points", g.space.num_points()},
          {"regularity", to_json(g.regularity)},
          {"homomorphism", g.homomorphism},
          {"equivariant", g.equivariant}};
}

Outcome cmd_f1(const Options& o, bool n_given, std::ostream& log) {
  const auto gens = named_permutation_group(o.f1_s, o.f1_m);
  const auto s = permutation_group(gens, o.f1_m + 1);
  Outcome r;
  auto& j = r.payload;
  j["command"] = "f1";
  j["m"] = o.f1_m;
  j["S"] = o.f1_s;
  j["S_order"] = s.group.size();
  bool ok = true;
  if (n_given || o.chain.empty()) {
    const bool sharp = s.group.size() == o.f1_m + 1;
    const auto g = sharp ? singer_first(o.f1_m, o.f1_n, gens) : singer_general(o.f1_m, o.f1_n, s);
    j["group"] = "f1:m=" + std::to_string(o.f1_m) + ",n=" + std::to_string(o.f1_n) + ",S=" + o.f1_s;
    j["construction"] = sharp ? "first" : "general";
    j["singer"] = f1_json(g);
    ok = g.regularity.passed() && g.homomorphism && g.equivariant;
    log << "f1 m=" << o.f1_m << " n=" << o.f1_n << ": order " << g.order() << (ok ? " regular" : " NOT regular") << "\n";
  }
  if (!o.chain.empty()) {
    const auto d = direct_limit_demo(o.f1_m, parse_chain(o.chain), gens);
    j["chain"] = {{"chain", d.chain}, {"orders", d.orders}, {"embeddings_certified", d.embeddings_certified},
                  {"coherent", d.coherent}};
    ok = ok && d.embeddings_certified && d.coherent;
    log << "chain " << o.chain << (d.coherent ? " coherent" : " INCOHERENT") << "\n";
  }
  j["passed"] = ok;
  r.code = ok ? exit_ok : exit_verification;
  return r;
}

Outcome cmd_lemma(const Options& o, std::ostream& log) {
  if (!is_prime(o.p)) throw DomainError(std::to_string(o.p) + " is not prime");
  Outcome r;
  auto& j = r.payload;
  Json rows = Json::array();
  std::size_t failures = 0, converse = 0;
  for (std::uint64_t i = 1; i <= o.lemma_max; ++i) {
    for (std::uint64_t jj = i; jj <= o.lemma_max; jj += i) {
      const bool divides = singer_divisibility(o.p, i, jj);
      const bool asserted = std::gcd(jj / i, std::uint64_t{3}) == 1;
      if (asserted && !divides) ++failures;
      if (!asserted && divides) ++converse;
      rows.push_back({{"i", i}, {"j", jj}, {"divides", divides}, {"asserted", asserted}});
    }
  }
  j["command"] = "lemma";
  j["p"] = o.p;
  j["max"] = o.lemma_max;
  j["rows"] = rows;
  j["failures"] = failures;
  j["divides_without_assertion"] = converse;
  log << "lemma p=" << o.p << ": " << rows.size() << " pairs, " << failures << " failures\n";
  r.code = failures == 0 ? exit_ok : exit_verification;
  return r;
}

Outcome cmd_verify(const Options& o, std::ostream& log) {
  const auto v = verify_document(read_json_file(o.verify_path));
  if (!v.recognised) throw DomainError(o.verify_path + " holds no difference-set, incidence or hypertable document");
  Outcome r;
  r.payload = {{"command", "verify"}, {"passed", v.passed}, {"report", v.report}};
  log << "verify " << o.verify_path << ": " << (v.passed ? "passed" : "FAILED") << "\n";
  r.code = v.passed ? exit_ok : exit_verification;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Singer groups, difference sets, projective planes and hyperfields", "singer"};
  app.option_defaults()->always_capture_default();
  app.add_option("--out", o.out_path, "Write the JSON payload to this file");
  app.add_option("--verify-only", o.verify_path, "Re-check an emitted difference-set, plane or hypertable JSON");
  app.add_option("--field-cap", o.field_cap, "Largest field order built");
  app.add_option("--point-cap", o.point_cap, "Largest projective space built");
  app.add_option("--bound", o.bound, "Candidates scanned per builder step");
  app.add_option("--involution-bound", o.involution_bound, "Prefix scanned for involutions in infinite groups");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto* classical = app.add_subcommand("classical", "Classical Singer difference set and plane");
  classical->add_option("--q", o.q, "Prime power")->required();
  classical->add_option("--m", o.m, "Dimension");

  auto* hughes = app.add_subcommand("hughes", "Greedy partial difference set builder");
  hughes->add_option("--group", o.group, "Group spec, e.g. integers, free:2, cyclic:7")->required();
  hughes->add_option("--targets", o.targets, "Number of nonidentity elements to cover");

  auto* hyper = app.add_subcommand("hyper", "Hyperfields and their geometries");
  hyper->require_subcommand(1);
  hyper->add_subcommand("krasner", "The Krasner hyperfield");
  auto* kalg = hyper->add_subcommand("kalg", "K[C_n]");
  kalg->add_option("--n", o.kalg_n, "Order of the cyclic group")->required();
  auto add_quotient_options = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", o.p, "Characteristic");
    if (required) p->required();
    sub->add_option("--q-deg", o.q_deg, "q = p^q-deg");
    sub->add_option("--ext", o.ext, "Extension degree m of F_{q^m}");
  };
  add_quotient_options(hyper->add_subcommand("quotient", "F_{q^m} / F_q^x"), true);
  auto* classify = hyper->add_subcommand("classify", "Classify a hyperfield extension of K");
  add_quotient_options(classify, false);
  classify->add_option("--n", o.kalg_n, "Classify K[C_n]");
  classify->add_option("--file", o.table_file, "Classify a hypertable JSON file");
  add_quotient_options(hyper->add_subcommand("roundtrip", "Hyperfield -> plane -> hyperfield"), true);

  auto* f1 = app.add_subcommand("f1", "Singer groups of F_1^n projective spaces");
  f1->add_option("--m", o.f1_m, "Dimension")->required();
  auto* f1_n = f1->add_option("--n", o.f1_n, "Cyclic order of the fibers");
  f1->add_option("--S", o.f1_s, "cycle, dihedral, alt, full, s3, a4, s4-full");
  f1->add_option("--chain", o.chain, "Divisibility chain, e.g. 1,2,4");

  auto* lemma = app.add_subcommand("lemma", "Divisibility sweep over i | j");
  lemma->add_option("--p", o.p, "Prime")->required();
  lemma->add_option("--max", o.lemma_max, "Largest j");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  Outcome result;
  try {
    if (!o.verify_path.empty()) {
      result = cmd_verify(o, err);
    } else if (classical->parsed()) {
      result = cmd_classical(o, err);
    } else if (hughes->parsed()) {
      result = cmd_hughes(o, err);
    } else if (hyper->parsed()) {
      result = cmd_hyper(hyper->get_subcommands().front()->get_name(), o, err);
    } else if (f1->parsed()) {
      result = cmd_f1(o, f1_n->count() > 0, err);
    } else if (lemma->parsed()) {
      result = cmd_lemma(o, err);
    } else {
      err << app.help();
      return exit_usage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  const auto text = dump(result.payload);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!(file << text)) {
      err << "error: cannot write " << o.out_path << "\n";
      return exit_usage;
    }
  }
  return result.code;
}

}  // namespace singer
