#include "singer/f1_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "singer/errors.hpp"

namespace singer {

F1Space make_f1_space(unsigned m, unsigned n, std::uint64_t cap) {
  if (m < 1) throw DomainError("an F1 space needs m >= 1");
  if (n < 1) throw DomainError("an F1 space needs n >= 1");
  if (static_cast<std::uint64_t>(n) * (m + 1) > cap) throw RangeError("n(m+1) exceeds the point cap");
  return {m, n};
}

PointIndex apply(const F1Space& space, const MonomialAut& g, PointIndex p) {
  const auto fiber = p / space.n, a = p % space.n;
  return space.point(g.perm[fiber], (a + g.twist[fiber]) % space.n);
}

Perm as_permutation(const F1Space& space, const MonomialAut& g) {
  Perm out(space.num_points());
  for (PointIndex p = 0; p < out.size(); ++p) out[p] = apply(space, g, p);
  return out;
}

MonomialAut compose(const F1Space& space, const MonomialAut& first, const MonomialAut& second) {
  const auto k = space.m + 1;
  MonomialAut r{Perm(k), std::vector<std::uint32_t>(k)};
  for (unsigned i = 0; i < k; ++i) {
    r.perm[i] = second.perm[first.perm[i]];
    r.twist[i] = (first.twist[i] + second.twist[first.perm[i]]) % space.n;
  }
  return r;
}

MonomialAut identity_aut(const F1Space& space) {
  MonomialAut id{Perm(space.m + 1), std::vector<std::uint32_t>(space.m + 1, 0)};
  std::iota(id.perm.begin(), id.perm.end(), 0);
  return id;
}

GroupElement to_element(const GroupHandle& w, const MonomialAut& g) {
  CanonicalForm form;
  for (auto v : g.perm) form.push_back(v);
  for (auto v : g.twist) form.push_back(v);
  return w.make(std::move(form));
}

MonomialAut from_element(const GroupHandle& w, const GroupElement& e) {
  if (w.kind() != GroupKind::monomial) throw DomainError("not a monomial group");
  const auto k = w.params()[1] + 1;
  const auto& f = e.form();
  MonomialAut g;
  for (std::size_t i = 0; i < k; ++i) g.perm.push_back(static_cast<std::uint32_t>(f[i]));
  for (std::size_t i = 0; i < k; ++i) g.twist.push_back(static_cast<std::uint32_t>(f[k + i]));
  return g;
}

SingerCertificate check_regular(const PointAction& action) {
  return verify_singer_action(IncidenceStructure(action.num_points(), {}), action);
}

std::vector<Perm> named_permutation_group(std::string_view name, unsigned m) {
  const unsigned k = m + 1;
  auto cycle = [&] {
    Perm p(k);
    for (unsigned i = 0; i < k; ++i) p[i] = (i + 1) % k;
    return p;
  };
  auto transposition = [&](unsigned a, unsigned b) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
  };
  auto need_degree = [&](unsigned d) {
    if (k != d) throw DomainError(std::string(name) + " acts on " + std::to_string(d) + " points; m must be " +
                                  std::to_string(d - 1));
  };
  if (name == "cycle") return {cycle()};
  if (name == "dihedral") {
    Perm r(k);
    for (unsigned i = 0; i < k; ++i) r[i] = (k - i) % k;
    return {cycle(), r};
  }
  if (name == "full" || name == "s3" || name == "s4-full") {
    if (name == "s3") need_degree(3);
    if (name == "s4-full") need_degree(4);
    if (k == 1) return {};
    return {cycle(), transposition(0, 1)};
  }
  if (name == "alt" || name == "a4") {
    if (name == "a4") need_degree(4);
    std::vector<Perm> gens;
    for (unsigned i = 2; i < k; ++i) {
      Perm p(k);
      std::iota(p.begin(), p.end(), 0);
      p[0] = 1;
      p[1] = i;
      p[i] = 0;
      gens.push_back(p);
    }
    return gens;
  }
  throw DomainError("unknown permutation group '" + std::string(name) + "'");
}

namespace {

F1SingerGroup finish(const F1Space& space, std::vector<MonomialAut> elements) {
  F1SingerGroup out{space, std::move(elements), {}, {}, true, true};
  for (const auto& g : out.elements) out.action.images.push_back(as_permutation(space, g));
  out.regularity = check_regular(out.action);
  return out;
}

bool is_transitive(const PermRep& s) {
  const auto k = s.degree();
  std::vector<bool> hit(k, false);
  for (const auto& p : s.perms) hit[p[0]] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

F1SingerGroup singer_first(unsigned m, unsigned n, const std::vector<Perm>& s_generators) {
  const auto space = make_f1_space(m, n);
  const auto s = permutation_group(s_generators, m + 1);
  if (s.group.size() != m + 1 || !is_transitive(s)) {
    throw DomainError("S must act sharply transitively on the " + std::to_string(m + 1) + " fibers (|S| = " +
                      std::to_string(s.group.size()) + ")");
  }
  std::vector<MonomialAut> elements;
  for (const auto& p : s.perms) {
    for (unsigned k = 0; k < n; ++k) elements.push_back({p, std::vector<std::uint32_t>(m + 1, k)});
  }
  return finish(space, std::move(elements));
}

F1SingerGroup singer_general(unsigned m, unsigned n, const PermRep& s, std::optional<std::uint32_t> stabilizer_generator) {
  const auto space = make_f1_space(m, n);
  const auto& G = s.group;
  if (s.perms.size() != G.size() || s.degree() != m + 1) throw DomainError("action does not match the group or m");
  if (!is_transitive(s)) throw DomainError("S is not transitive on the fibers");

  std::vector<std::uint32_t> stabilizer;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (s.perms[g][0] == 0) stabilizer.push_back(g);
  }
  std::optional<std::uint32_t> h = stabilizer_generator;
  if (!h) {
    for (auto g : stabilizer) {
      if (G.order_of(g) == n) {
        h = g;
        break;
      }
    }
  }
  if (stabilizer.size() != n || !h || s.perms[*h][0] != 0 || G.order_of(*h) != n) {
    throw DomainError("the stabiliser of a fiber has order " + std::to_string(stabilizer.size()) +
                      " and is not cyclic of order " + std::to_string(n));
  }

  // discrete log in <h>
  std::vector<std::uint32_t> dlog(G.size(), static_cast<std::uint32_t>(-1));
  for (std::uint32_t a = 0, x = 0; a < n; ++a, x = G.mul(x, *h)) dlog[x] = a;

  // t_i: least element sending fiber 0 to fiber i
  std::vector<std::uint32_t> t(m + 1, static_cast<std::uint32_t>(-1));
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    auto i = s.perms[g][0];
    if (t[i] == static_cast<std::uint32_t>(-1)) t[i] = g;
  }

  std::vector<MonomialAut> elements;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    MonomialAut aut{s.perms[g], std::vector<std::uint32_t>(m + 1)};
    for (unsigned i = 0; i <= m; ++i) {
      const auto c = dlog[G.mul(G.mul(t[i], g), G.inverse(t[s.perms[g][i]]))];
      if (c == static_cast<std::uint32_t>(-1)) throw DomainError("internal: twist outside <h>");  // unreachable
      aut.twist[i] = c;
    }
    elements.push_back(std::move(aut));
  }
  auto out = finish(space, elements);

  std::map<MonomialAut, std::uint32_t> index;
  for (std::uint32_t g = 0; g < elements.size(); ++g) index.emplace(elements[g], g);
  for (std::uint32_t a = 0; a < G.size() && out.homomorphism; ++a) {
    for (std::uint32_t b = 0; b < G.size(); ++b) {
      if (compose(space, elements[a], elements[b]) != elements[G.mul(a, b)]) {
        out.homomorphism = false;
        break;
      }
    }
  }
  // x = h^a t_i sits at point (i, a); right multiplication by g must match the monomial action.
  std::vector<PointIndex> point_of(G.size());
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    const auto i = s.perms[x][0];
    point_of[x] = space.point(i, dlog[G.mul(x, G.inverse(t[i]))]);
  }
  for (std::uint32_t x = 0; x < G.size() && out.equivariant; ++x) {
    for (std::uint32_t g = 0; g < G.size(); ++g) {
      if (point_of[G.mul(x, g)] != apply(space, elements[g], point_of[x])) {
        out.equivariant = false;
        break;
      }
    }
  }
  return out;
}

PermRep coset_action(const CayleyTable& r, std::uint32_t z) {
  if (z >= r.size()) throw DomainError("element " + std::to_string(z) + " is not in the group");
  const auto sub = r.generated({z});
  std::vector<std::uint32_t> coset_of(r.size(), static_cast<std::uint32_t>(-1));
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < r.size(); ++x) {
    if (coset_of[x] != static_cast<std::uint32_t>(-1)) continue;
    for (auto h : sub) coset_of[r.mul(h, x)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  std::vector<Perm> perms(r.size(), Perm(reps.size()));
  for (std::uint32_t g = 0; g < r.size(); ++g) {
    for (std::uint32_t c = 0; c < reps.size(); ++c) perms[g][c] = coset_of[r.mul(reps[c], g)];
  }
  return {r, std::move(perms)};
}

EmbeddingCertificate embed_singer(unsigned m, unsigned i, unsigned j, const std::vector<Perm>& s_generators) {
  if (i == 0 || j == 0 || j % i != 0) {
    throw PreconditionError("embedding S(" + std::to_string(i) + ") -> S(" + std::to_string(j) + ") needs i | j");
  }
  const auto a = singer_first(m, i, s_generators);
  const auto b = singer_first(m, j, s_generators);
  const auto factor = j / i;
  EmbeddingCertificate cert;
  cert.i = i;
  cert.j = j;
  cert.source_order = a.order();
  cert.target_order = b.order();

  std::map<MonomialAut, std::uint32_t> index_b;
  for (std::uint32_t g = 0; g < b.order(); ++g) index_b.emplace(b.elements[g], g);
  cert.element_map.resize(a.order());
  for (std::uint32_t g = 0; g < a.order(); ++g) {
    auto image = a.elements[g];
    for (auto& c : image.twist) c *= factor;
    cert.element_map[g] = index_b.at(image);
  }
  cert.point_map.resize(a.space.num_points());
  for (PointIndex p = 0; p < cert.point_map.size(); ++p) {
    cert.point_map[p] = b.space.point(p / i, (p % i) * factor);
  }

  cert.homomorphism = true;
  for (std::uint32_t x = 0; x < a.order() && cert.homomorphism; ++x) {
    for (std::uint32_t y = 0; y < a.order(); ++y) {
      auto xy = compose(a.space, a.elements[x], a.elements[y]);
      auto lhs = std::find(a.elements.begin(), a.elements.end(), xy);
      if (lhs == a.elements.end()) {
        cert.homomorphism = false;
        break;
      }
      auto image_xy = cert.element_map[static_cast<std::size_t>(lhs - a.elements.begin())];
      auto rhs = compose(b.space, b.elements[cert.element_map[x]], b.elements[cert.element_map[y]]);
      if (b.elements[image_xy] != rhs) {
        cert.homomorphism = false;
        break;
      }
    }
  }
  std::set<std::uint32_t> image(cert.element_map.begin(), cert.element_map.end());
  cert.injective = image.size() == cert.element_map.size();
  cert.closed = true;
  for (auto x : image) {
    for (auto y : image) {
      if (!image.contains(index_b.at(compose(b.space, b.elements[x], b.elements[y])))) cert.closed = false;
    }
  }
  cert.equivariant = true;
  for (std::uint32_t g = 0; g < a.order() && cert.equivariant; ++g) {
    for (PointIndex p = 0; p < cert.point_map.size(); ++p) {
      if (cert.point_map[apply(a.space, a.elements[g], p)] !=
          apply(b.space, b.elements[cert.element_map[g]], cert.point_map[p])) {
        cert.equivariant = false;
        break;
      }
    }
  }
  return cert;
}

DirectLimitReport direct_limit_demo(unsigned m, const std::vector<unsigned>& chain, const std::vector<Perm>& s_generators) {
  if (chain.empty() || chain.size() > 8) throw PreconditionError("chain length must be between 1 and 8");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (chain[k] == 0 || chain[k + 1] % chain[k] != 0) {
      throw PreconditionError("chain must be a divisibility chain; " + std::to_string(chain[k]) + " does not divide " +
                              std::to_string(chain[k + 1]));
    }
  }
  DirectLimitReport report;
  report.chain = chain;
  for (auto n : chain) report.orders.push_back(singer_first(m, n, s_generators).order());
  for (std::size_t a = 0; a < chain.size(); ++a) {
    for (std::size_t c = a + 1; c < chain.size(); ++c) {
      // walk a -> a+1 -> ... -> c and compare with the direct embedding
      auto direct = embed_singer(m, chain[a], chain[c], s_generators);
      report.embeddings_certified = report.embeddings_certified && direct.passed();
      std::vector<std::uint32_t> elements(direct.element_map.size());
      std::iota(elements.begin(), elements.end(), 0);
      std::vector<PointIndex> points(direct.point_map.size());
      std::iota(points.begin(), points.end(), 0);
      for (std::size_t b = a; b < c; ++b) {
        auto step = embed_singer(m, chain[b], chain[b + 1], s_generators);
        report.embeddings_certified = report.embeddings_certified && step.passed();
        for (auto& e : elements) e = step.element_map[e];
        for (auto& p : points) p = step.point_map[p];
      }
      if (elements != direct.element_map || points != direct.point_map) report.coherent = false;
    }
  }
  return report;
}

bool RegularCrossCheck::confirmed() const {
  return std::all_of(cases.begin(), cases.end(), [](const RegularCase& c) {
    return c.counterexamples.empty() && c.confirmed == c.pairs && c.brute_force_covered.value_or(true);
  });
}

namespace {

// Realises R on R itself: r = z^a u_f sits at (f, a), u_f the largest element of its coset.
std::optional<std::vector<MonomialAut>> natural_realisation(const F1Space& space, const CayleyTable& r, std::uint32_t z,
                                                            const PermRep& cosets) {
  const auto n = space.n;
  std::vector<std::uint32_t> dlog(r.size(), static_cast<std::uint32_t>(-1));
  for (std::uint32_t a = 0, x = 0; a < n; ++a, x = r.mul(x, z)) dlog[x] = a;
  std::vector<std::uint32_t> u(space.m + 1, 0);
  for (std::uint32_t x = 0; x < r.size(); ++x) u[cosets.perms[x][0]] = x;  // coset of x is (coset 0)^x
  std::vector<PointIndex> point_of(r.size());
  for (std::uint32_t x = 0; x < r.size(); ++x) {
    const auto f = cosets.perms[x][0];
    point_of[x] = space.point(f, dlog[r.mul(x, r.inverse(u[f]))]);
  }
  std::vector<MonomialAut> out;
  for (std::uint32_t g = 0; g < r.size(); ++g) {
    MonomialAut aut{cosets.perms[g], std::vector<std::uint32_t>(space.m + 1)};
    for (unsigned f = 0; f <= space.m; ++f) aut.twist[f] = point_of[r.mul(u[f], g)] % n;
    for (std::uint32_t x = 0; x < r.size(); ++x) {
      if (apply(space, aut, point_of[x]) != point_of[r.mul(x, g)]) return std::nullopt;
    }
    out.push_back(std::move(aut));
  }
  return out;
}

// Checks that singer_general applied to the subgroup M reproduces M up to a monomial conjugation.
std::optional<std::string> reproduce(const F1Space& space, const std::vector<MonomialAut>& group) {
  std::map<MonomialAut, std::uint32_t> index;
  for (std::uint32_t g = 0; g < group.size(); ++g) index.emplace(group[g], g);
  std::vector<std::vector<std::uint32_t>> table(group.size(), std::vector<std::uint32_t>(group.size()));
  for (std::uint32_t a = 0; a < group.size(); ++a) {
    for (std::uint32_t b = 0; b < group.size(); ++b) {
      auto it = index.find(compose(space, group[a], group[b]));
      if (it == index.end()) return "not closed under composition";
      table[a][b] = it->second;
    }
  }
  if (index.at(identity_aut(space)) != 0) return "identity is not the first element";
  PermRep rep{CayleyTable(std::move(table)), {}};
  for (const auto& g : group) rep.perms.push_back(g.perm);

  std::optional<std::uint32_t> h;
  for (std::uint32_t g = 0; g < group.size(); ++g) {
    if (group[g].perm[0] == 0 && group[g].twist[0] == 1 % space.n) {
      h = g;
      break;
    }
  }
  if (!h) return "no stabiliser element acts as +1 on fiber 0";
  F1SingerGroup built = [&] {
    try {
      return singer_general(space.m, space.n, rep, h);
    } catch (const DomainError& e) {
      return F1SingerGroup{space, {}, {}, {}, false, false};
    }
  }();
  if (built.elements.empty()) return "singer_general rejected the fiber action";
  if (!built.regularity.passed() || !built.homomorphism || !built.equivariant) return "singer_general output not certified";

  // beta(i, a) = (0,0) moved by h^a t_i, where t_i is the least element sending fiber 0 to i
  const auto& G = rep.group;
  std::vector<std::uint32_t> t(space.m + 1, static_cast<std::uint32_t>(-1));
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (t[rep.perms[g][0]] == static_cast<std::uint32_t>(-1)) t[rep.perms[g][0]] = g;
  }
  std::vector<PointIndex> beta(space.num_points());
  for (unsigned i = 0; i <= space.m; ++i) {
    for (unsigned a = 0; a < space.n; ++a) {
      beta[space.point(i, a)] = apply(space, group[G.mul(G.power(*h, a), t[i])], 0);
    }
  }
  // beta must be monomial
  for (unsigned i = 0; i <= space.m; ++i) {
    const auto base = beta[space.point(i, 0)];
    for (unsigned a = 0; a < space.n; ++a) {
      const auto p = beta[space.point(i, a)];
      if (p / space.n != base / space.n || p % space.n != (base % space.n + a) % space.n) return "conjugator not monomial";
    }
  }
  for (std::uint32_t g = 0; g < group.size(); ++g) {
    for (PointIndex p = 0; p < space.num_points(); ++p) {
      if (beta[apply(space, built.elements[g], p)] != apply(space, group[g], beta[p])) return "not conjugate";
    }
  }
  return std::nullopt;
}

using PermSet = std::vector<std::uint32_t>;  // sorted indices into the monomial group

std::set<PermSet> brute_force_regular(const std::vector<Perm>& w, const std::map<Perm, std::uint32_t>& index,
                                      std::size_t points) {
  std::vector<std::vector<std::uint32_t>> by_image(points);
  for (std::uint32_t g = 0; g < w.size(); ++g) {
    bool fpf = true;
    for (std::size_t p = 0; p < points && fpf; ++p) fpf = w[g][p] != p;
    if (fpf) by_image[w[g][0]].push_back(g);
  }
  Perm identity(points);
  std::iota(identity.begin(), identity.end(), 0);
  const auto id = index.at(identity);
  auto compose_idx = [&](std::uint32_t a, std::uint32_t b) {
    Perm r(points);
    for (std::size_t x = 0; x < points; ++x) r[x] = w[b][w[a][x]];
    return index.at(r);
  };
  auto closure = [&](PermSet gens) -> std::optional<PermSet> {
    std::vector<std::uint32_t> elements{id};
    std::set<std::uint32_t> seen{id};
    for (std::size_t k = 0; k < elements.size(); ++k) {
      for (auto g : gens) {
        auto y = compose_idx(elements[k], g);
        if (seen.insert(y).second) {
          if (y != id) {
            for (std::size_t p = 0; p < points; ++p) {
              if (w[y][p] == p) return std::nullopt;
            }
          }
          elements.push_back(y);
          if (elements.size() > points) return std::nullopt;
        }
      }
    }
    return PermSet(seen.begin(), seen.end());
  };
  std::set<PermSet> found, visited;
  auto dfs = [&](auto&& self, const PermSet& h) -> void {
    if (h.size() == points) {
      found.insert(h);
      return;
    }
    std::vector<bool> covered(points, false);
    for (auto g : h) covered[w[g][0]] = true;
    std::size_t j = 0;
    while (covered[j]) ++j;
    for (auto g : by_image[j]) {
      auto gens = h;
      gens.push_back(g);
      auto next = closure(gens);
      if (next && visited.insert(*next).second) self(self, *next);
    }
  };
  dfs(dfs, PermSet{id});
  return found;
}

}  // namespace

RegularCrossCheck cross_check_regular_subgroups(unsigned max_points, std::size_t brute_force_limit) {
  RegularCrossCheck report;
  for (unsigned total = 2; total <= max_points; ++total) {
    for (unsigned n = 1; n <= total / 2; ++n) {
      if (total % n != 0) continue;
      const unsigned m = total / n - 1;
      const auto space = make_f1_space(m, n);
      RegularCase c;
      c.n = n;
      c.m = m;
      std::vector<std::vector<MonomialAut>> realisations;
      for (std::size_t gi = 0; gi < groups_of_order(total).size(); ++gi) {
        const auto& r = groups_of_order(total)[gi];
        for (std::uint32_t z = 0; z < r.size(); ++z) {
          if (r.order_of(z) != n) continue;
          ++c.pairs;
          const auto label = "group " + std::to_string(gi) + " of order " + std::to_string(total) + ", z = " +
                             std::to_string(z);
          auto cosets = coset_action(r, z);
          auto natural = natural_realisation(space, r, z, cosets);
          if (!natural) {
            c.counterexamples.push_back(label + ": coset realisation is not monomial");
            continue;
          }
          PointAction action;
          for (const auto& g : *natural) action.images.push_back(as_permutation(space, g));
          if (!check_regular(action).passed()) {
            c.counterexamples.push_back(label + ": coset realisation is not regular");
            continue;
          }
          if (auto failure = reproduce(space, *natural)) {
            c.counterexamples.push_back(label + ": " + *failure);
            continue;
          }
          ++c.confirmed;
          realisations.push_back(std::move(*natural));
        }
      }

      double w_order = 1;
      for (unsigned k = 1; k <= m + 1; ++k) w_order *= static_cast<double>(k) * n;
      if (w_order <= static_cast<double>(brute_force_limit)) {
        const auto w = GroupHandle::monomial(n, m);
        std::vector<Perm> perms;
        std::map<Perm, std::uint32_t> index;
        for (const auto& e : w.enumerate(*w.order())) {
          index.emplace(as_permutation(space, from_element(w, e)), static_cast<std::uint32_t>(perms.size()));
          perms.push_back(as_permutation(space, from_element(w, e)));
        }
        auto all = brute_force_regular(perms, index, space.num_points());
        std::set<PermSet> covered;
        for (const auto& real : realisations) {
          std::vector<Perm> mine;
          for (const auto& g : real) mine.push_back(as_permutation(space, g));
          for (const auto& x : perms) {
            Perm inv(x.size());
            for (std::size_t p = 0; p < x.size(); ++p) inv[x[p]] = static_cast<std::uint32_t>(p);
            PermSet conj;
            for (const auto& g : mine) {
              Perm r(x.size());
              for (std::size_t p = 0; p < x.size(); ++p) r[p] = x[g[inv[p]]];
              conj.push_back(index.at(r));
            }
            std::sort(conj.begin(), conj.end());
            covered.insert(std::move(conj));
          }
        }
        c.brute_force_subgroups = all.size();
        c.brute_force_covered = std::includes(covered.begin(), covered.end(), all.begin(), all.end());
        if (!*c.brute_force_covered) {
          c.counterexamples.push_back("a regular subgroup of C" + std::to_string(n) + " wr S" + std::to_string(m + 1) +
                                      " is not conjugate to any realisation");
        }
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace singer
