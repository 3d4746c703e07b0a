#include "singer/hyperstructure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "singer/errors.hpp"

namespace singer {

namespace {

template <class F>
void for_each_bit(const HyperSet& s, F&& f) {
  for (std::size_t i = s._Find_first(); i < s.size(); i = s._Find_next(i)) f(static_cast<std::uint32_t>(i));
}

HyperSet single(std::uint32_t a) {
  HyperSet s;
  s.set(a);
  return s;
}

}  // namespace

HyperTable::HyperTable(std::vector<std::string> labels, std::uint32_t zero, std::uint32_t one,
                       std::vector<std::vector<HyperSet>> add, std::vector<std::vector<std::uint32_t>> mul)
    : labels_(std::move(labels)), zero_(zero), one_(one), add_(std::move(add)), mul_(std::move(mul)) {
  const auto n = labels_.size();
  if (n == 0 || n > kMaxCarrier) throw RangeError("carrier size must be between 1 and 256");
  if (zero_ >= n || one_ >= n) throw DomainError("zero/one index out of range");
  if (add_.size() != n || mul_.size() != n) throw DomainError("tables must be square over the carrier");
  for (std::size_t a = 0; a < n; ++a) {
    if (add_[a].size() != n || mul_[a].size() != n) throw DomainError("tables must be square over the carrier");
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b].none()) {
        throw DomainError("empty sum " + labels_[a] + " + " + labels_[b]);
      }
      if ((add_[a][b] >> n).any()) throw DomainError("sum refers to an element outside the carrier");
      if (mul_[a][b] >= n) throw DomainError("product refers to an element outside the carrier");
    }
  }
}

std::vector<std::uint32_t> HyperTable::sum_list(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> out;
  for_each_bit(add_[a][b], [&](std::uint32_t x) { out.push_back(x); });
  return out;
}

HyperTable HyperTable::with_sum(std::uint32_t a, std::uint32_t b, const HyperSet& value) const {
  auto add = add_;
  add.at(a).at(b) = value;
  return HyperTable(labels_, zero_, one_, std::move(add), mul_);
}

bool AxiomReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::get(std::string_view name) const {
  for (const auto& r : axioms) {
    if (r.name == name) return r;
  }
  throw DomainError("unknown axiom " + std::string(name));
}

std::vector<std::string> AxiomReport::failed() const {
  std::vector<std::string> out;
  for (const auto& r : axioms) {
    if (!r.passed) out.push_back(r.name);
  }
  return out;
}

AxiomReport check_axioms(const HyperTable& t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  const auto zero = t.zero();
  const auto one = t.one();
  AxiomReport report;
  auto run = [&](const char* name, auto&& body) {
    AxiomResult r{name, true, {}};
    body(r);
    report.axioms.push_back(std::move(r));
  };
  auto fail = [](AxiomResult& r, std::vector<std::uint32_t> w) {
    r.passed = false;
    r.witness = std::move(w);
  };
  auto set_plus = [&](const HyperSet& s, std::uint32_t z) {
    HyperSet out;
    for_each_bit(s, [&](std::uint32_t u) { out |= t.sum(u, z); });
    return out;
  };
  auto plus_set = [&](std::uint32_t x, const HyperSet& s) {
    HyperSet out;
    for_each_bit(s, [&](std::uint32_t u) { out |= t.sum(x, u); });
    return out;
  };

  run("commutativity", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n && r.passed; ++x) {
      for (std::uint32_t y = x + 1; y < n; ++y) {
        if (t.sum(x, y) != t.sum(y, x)) {
          fail(r, {x, y});
          break;
        }
      }
    }
  });

  run("associativity", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n && r.passed; ++x) {
      for (std::uint32_t y = 0; y < n && r.passed; ++y) {
        const auto& xy = t.sum(x, y);
        for (std::uint32_t z = 0; z < n; ++z) {
          if (set_plus(xy, z) != plus_set(x, t.sum(y, z))) {
            fail(r, {x, y, z});
            break;
          }
        }
      }
    }
  });

  run("neutral", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (t.sum(zero, x) != single(x) || t.sum(x, zero) != single(x)) {
        fail(r, {x});
        break;
      }
    }
  });

  std::vector<std::vector<std::uint32_t>> negatives(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (t.sum(x, y).test(zero)) negatives[x].push_back(y);
    }
  }
  run("unique-negative", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (negatives[x].size() != 1) {
        fail(r, {x});
        break;
      }
    }
  });

  run("reversibility", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n && r.passed; ++x) {
      for (std::uint32_t y = 0; y < n && r.passed; ++y) {
        for (std::uint32_t z = 0; z < n; ++z) {
          if (!t.sum(y, z).test(x)) continue;
          if (negatives[y].empty() || !t.sum(x, negatives[y].front()).test(z)) {
            fail(r, {x, y, z});
            break;
          }
        }
      }
    }
  });

  run("distributivity", [&](AxiomResult& r) {
    for (std::uint32_t a = 0; a < n && r.passed; ++a) {
      for (std::uint32_t x = 0; x < n && r.passed; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          HyperSet lhs;
          for_each_bit(t.sum(x, y), [&](std::uint32_t u) { lhs.set(t.product(a, u)); });
          if (lhs != t.sum(t.product(a, x), t.product(a, y))) {
            fail(r, {a, x, y});
            break;
          }
        }
      }
    }
  });

  run("mul-associativity", [&](AxiomResult& r) {
    for (std::uint32_t a = 0; a < n && r.passed; ++a) {
      for (std::uint32_t b = 0; b < n && r.passed; ++b) {
        for (std::uint32_t c = 0; c < n; ++c) {
          if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c))) {
            fail(r, {a, b, c});
            break;
          }
        }
      }
    }
  });

  run("mul-identity", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (t.product(one, x) != x || t.product(x, one) != x) {
        fail(r, {x});
        break;
      }
    }
  });

  run("mul-commutativity", [&](AxiomResult& r) {
    for (std::uint32_t a = 0; a < n && r.passed; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (t.product(a, b) != t.product(b, a)) {
          fail(r, {a, b});
          break;
        }
      }
    }
  });

  run("absorbing-zero", [&](AxiomResult& r) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (t.product(zero, x) != zero || t.product(x, zero) != zero) {
        fail(r, {x});
        break;
      }
    }
  });

  run("zero-ne-one", [&](AxiomResult& r) {
    if (zero == one) fail(r, {zero});
  });

  run("mul-group", [&](AxiomResult& r) {
    for (std::uint32_t a = 0; a < n && r.passed; ++a) {
      if (a == zero) continue;
      bool has_inverse = false;
      for (std::uint32_t b = 0; b < n; ++b) {
        if (b == zero) continue;
        if (t.product(a, b) == zero) {
          fail(r, {a, b});
          break;
        }
        has_inverse = has_inverse || t.product(a, b) == one;
      }
      if (r.passed && !has_inverse) fail(r, {a});
    }
  });

  return report;
}

VectorspaceLaw check_vectorspace_law(const HyperTable& t) {
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (x == t.zero()) continue;
    auto expect = single(x);
    expect.set(t.zero());
    if (t.sum(x, x) != expect) return {false, x};
  }
  return {};
}

HyperTable krasner() {
  std::vector<std::vector<HyperSet>> add(2, std::vector<HyperSet>(2));
  add[0][0] = single(0);
  add[0][1] = add[1][0] = single(1);
  add[1][1] = single(0) | single(1);
  return HyperTable({"0", "1"}, 0, 1, std::move(add), {{0, 0}, {0, 1}});
}

HyperTable k_algebra(const GroupHandle& group) {
  if (!group.is_finite()) throw DomainError("K[G] needs a finite group");
  if (!group.is_abelian()) throw DomainError("K[G] needs an abelian group");
  const auto order = *group.order();
  if (order < 3) throw DomainError("K[G] needs |G| >= 3; for smaller G some sums x + y would be empty");
  if (order + 1 > kMaxCarrier) throw RangeError("K[G] carrier exceeds 256 elements");
  const auto n = static_cast<std::uint32_t>(order + 1);
  const auto elements = group.enumerate(order);
  std::vector<std::string> labels{"0"};
  for (const auto& g : elements) labels.push_back(group.format(g));

  HyperSet nonzero;
  for (std::uint32_t i = 1; i < n; ++i) nonzero.set(i);
  std::vector<std::vector<HyperSet>> add(n, std::vector<HyperSet>(n));
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == 0 || y == 0) {
        add[x][y] = single(x == 0 ? y : x);
      } else if (x == y) {
        add[x][y] = single(0) | single(x);
      } else {
        add[x][y] = nonzero;
        add[x][y].reset(x);
        add[x][y].reset(y);
      }
      if (x != 0 && y != 0) {
        mul[x][y] = static_cast<std::uint32_t>(group.index_of(group.mul(elements[x - 1], elements[y - 1])) + 1);
      }
    }
  }
  return HyperTable(std::move(labels), 0, 1, std::move(add), std::move(mul));
}

QuotientSpec QuotientSpec::field_over_subfield(std::uint64_t q, unsigned ext) {
  auto pp = prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  if (ext == 0) throw DomainError("extension degree must be at least 1");
  auto big = Field::make(pp->first, pp->second * ext);
  const auto v = (static_cast<std::uint64_t>(big.size()) - 1) / (q - 1);
  return field(pp->first, pp->second * ext, {big.exp(static_cast<std::int64_t>(v)).value});
}

QuotientSpec QuotientSpec::field(std::uint64_t p, unsigned n, std::vector<std::uint32_t> generators) {
  QuotientSpec s;
  s.ring = Ring::field;
  s.p = p;
  s.n = n;
  s.generators = std::move(generators);
  return s;
}

QuotientSpec QuotientSpec::integers(std::uint64_t modulus, std::vector<std::uint32_t> generators) {
  QuotientSpec s;
  s.ring = Ring::integers_mod;
  s.modulus = modulus;
  s.generators = std::move(generators);
  return s;
}

QuotientHyperring quotient_hyperring(const QuotientSpec& spec, std::uint64_t field_cap) {
  std::optional<Field> field;
  std::uint64_t size = 0;
  if (spec.ring == QuotientSpec::Ring::field) {
    field = Field::make(spec.p, spec.n, field_cap);
    size = field->size();
  } else {
    if (spec.modulus < 2) throw DomainError("Z/m needs m >= 2");
    if (spec.modulus > field_cap) throw RangeError("ring exceeds the size cap");
    size = spec.modulus;
  }
  const auto m = size;
  auto add = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    return field ? field->add({a}, {b}).value : static_cast<std::uint32_t>((a + b) % m);
  };
  auto mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    return field ? field->mul({a}, {b}).value : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % m);
  };
  auto is_unit = [&](std::uint32_t a) { return field ? a != 0 : std::gcd<std::uint64_t>(a, m) == 1; };
  auto label = [&](std::uint32_t a) { return field ? field->format({a}) : std::to_string(a); };

  std::vector<bool> in_group(size, false);
  std::vector<std::uint32_t> group{1};
  in_group[1 % size] = true;
  for (auto g : spec.generators) {
    if (g >= size || !is_unit(g)) throw DomainError("generator " + std::to_string(g) + " is not a unit of the ring");
  }
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (auto g : spec.generators) {
      auto h = mul(group[k], g);
      if (!in_group[h]) {
        in_group[h] = true;
        group.push_back(h);
      }
    }
  }
  std::sort(group.begin(), group.end());

  QuotientHyperring out{krasner(), group, std::vector<std::uint32_t>(size, 0), {}, size, field.has_value() || is_prime(size), false};
  const std::uint32_t unassigned = static_cast<std::uint32_t>(-1);
  std::fill(out.class_of.begin(), out.class_of.end(), unassigned);
  for (std::uint32_t x = 0; x < size; ++x) {
    if (out.class_of[x] != unassigned) continue;
    const auto c = static_cast<std::uint32_t>(out.representative.size());
    if (c >= kMaxCarrier) throw RangeError("quotient has more than 256 classes");
    out.representative.push_back(x);
    for (auto g : group) out.class_of[mul(x, g)] = c;
  }
  const auto classes = static_cast<std::uint32_t>(out.representative.size());

  std::vector<std::string> labels;
  for (auto r : out.representative) labels.push_back(label(r));
  std::vector<std::vector<HyperSet>> add_table(classes, std::vector<HyperSet>(classes));
  std::vector<std::vector<std::uint32_t>> mul_table(classes, std::vector<std::uint32_t>(classes));
  for (std::uint32_t i = 0; i < classes; ++i) {
    for (std::uint32_t j = 0; j < classes; ++j) {
      const auto x = out.representative[i], y = out.representative[j];
      for (auto h : group) add_table[i][j].set(out.class_of[add(x, mul(y, h))]);
      mul_table[i][j] = out.class_of[mul(x, y)];
    }
  }
  out.table = HyperTable(std::move(labels), out.class_of[0], out.class_of[1 % size], std::move(add_table),
                         std::move(mul_table));

  std::vector<std::uint32_t> sub{0};
  sub.insert(sub.end(), group.begin(), group.end());
  std::vector<bool> in_sub(size, false);
  for (auto a : sub) in_sub[a] = true;
  out.unit_group_is_subfield = size > 1 && std::all_of(sub.begin(), sub.end(), [&](std::uint32_t a) {
    return std::all_of(sub.begin(), sub.end(), [&](std::uint32_t b) { return in_sub[add(a, b)] && in_sub[mul(a, b)]; });
  });
  return out;
}

KrasnerContainment contains_krasner(const QuotientHyperring& q) {
  const auto& t = q.table;
  const auto zero = t.zero(), one = t.one();
  KrasnerContainment out;
  out.table = zero != one && t.sum(zero, zero) == single(zero) && t.sum(zero, one) == single(one) &&
              t.sum(one, zero) == single(one) && t.sum(one, one) == (single(zero) | single(one)) &&
              t.product(one, one) == one && t.product(zero, one) == zero && t.product(zero, zero) == zero;
  out.subfield = q.unit_group_is_subfield;
  return out;
}

HyperGeometry hyperfield_to_geometry(const HyperTable& t) {
  auto law = check_vectorspace_law(t);
  if (!law.holds) {
    throw DomainError("x + x = {0, x} fails for x = " + t.labels()[*law.witness]);
  }
  const auto n = static_cast<std::uint32_t>(t.size());
  std::vector<PointIndex> point_of(n, 0);
  std::vector<std::uint32_t> carrier_of;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x == t.zero()) continue;
    point_of[x] = static_cast<PointIndex>(carrier_of.size());
    carrier_of.push_back(x);
  }
  std::vector<Line> lines;
  std::set<Line> seen;
  for (std::size_t i = 0; i < carrier_of.size(); ++i) {
    for (std::size_t j = i + 1; j < carrier_of.size(); ++j) {
      const auto x = carrier_of[i], y = carrier_of[j];
      HyperSet l = t.sum(x, y);
      l.set(x);
      l.set(y);
      l.reset(t.zero());
      Line line;
      for_each_bit(l, [&](std::uint32_t u) { line.push_back(point_of[u]); });
      if (seen.insert(line).second) lines.push_back(std::move(line));
    }
  }
  HyperGeometry out;
  out.geometry = IncidenceStructure(carrier_of.size(), std::move(lines));
  out.labeling.identity = point_of[t.one()];
  out.labeling.mul.assign(carrier_of.size(), std::vector<PointIndex>(carrier_of.size()));
  for (std::size_t i = 0; i < carrier_of.size(); ++i) {
    out.labeling.labels.push_back(t.labels()[carrier_of[i]]);
    for (std::size_t j = 0; j < carrier_of.size(); ++j) {
      const auto prod = t.product(carrier_of[i], carrier_of[j]);
      if (prod == t.zero()) throw DomainError("product of nonzero elements is zero");
      out.labeling.mul[i][j] = point_of[prod];
    }
  }
  return out;
}

HyperTable geometry_to_hyperfield(const IncidenceStructure& g, const PointLabeling& labels) {
  const auto v = g.num_points();
  if (v + 1 > kMaxCarrier) throw RangeError("geometry has more than 255 points");
  for (std::size_t l = 0; l < g.num_lines(); ++l) {
    if (g.line(l).size() < 4) {
      throw DomainError("line " + std::to_string(l) + " has " + std::to_string(g.line(l).size()) +
                        " points; every line needs at least 4 points");
    }
  }
  if (!verify_linear_space(g).ok) throw DomainError("two points do not lie on exactly one line");
  if (labels.mul.size() != v || labels.identity >= v) throw DomainError("point labeling does not match the geometry");

  const auto n = static_cast<std::uint32_t>(v + 1);
  std::vector<std::string> names{"0"};
  for (std::size_t p = 0; p < v; ++p) names.push_back(p < labels.labels.size() ? labels.labels[p] : std::to_string(p));
  std::vector<std::vector<HyperSet>> add(n, std::vector<HyperSet>(n));
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == 0 || y == 0) {
        add[x][y] = single(x == 0 ? y : x);
        continue;
      }
      if (labels.mul[x - 1].size() != v) throw DomainError("point labeling does not match the geometry");
      mul[x][y] = labels.mul[x - 1][y - 1] + 1;
      if (x == y) {
        add[x][y] = single(0) | single(x);
        continue;
      }
      const auto l = *g.line_through(x - 1, y - 1);
      for (auto p : g.line(l)) add[x][y].set(p + 1);
      add[x][y].reset(x);
      add[x][y].reset(y);
    }
  }
  return HyperTable(std::move(names), 0, labels.identity + 1, std::move(add), std::move(mul));
}

std::optional<std::vector<std::uint32_t>> isomorphic_tables(const HyperTable& a, const HyperTable& b) {
  const auto n = static_cast<std::uint32_t>(a.size());
  if (b.size() != n) return std::nullopt;
  const std::uint32_t none = static_cast<std::uint32_t>(-1);

  auto mul_order = [](const HyperTable& t, std::uint32_t x) {
    std::uint32_t k = 1;
    for (auto y = x; y != t.one(); y = t.product(y, x)) {
      if (++k > t.size() + 1) return 0u;
    }
    return k;
  };
  std::vector<std::uint32_t> order_b(n);
  for (std::uint32_t y = 0; y < n; ++y) order_b[y] = y == b.zero() ? 0 : mul_order(b, y);

  // Generators of the nonzero part of a, chosen greedily in carrier order.
  std::vector<std::uint32_t> gens;
  {
    std::vector<bool> reached(n, false);
    reached[a.one()] = true;
    std::vector<std::uint32_t> span{a.one()};
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x == a.zero() || reached[x]) continue;
      gens.push_back(x);
      for (std::size_t k = 0; k < span.size(); ++k) {
        for (auto g : gens) {
          auto y = a.product(span[k], g);
          if (!reached[y]) {
            reached[y] = true;
            span.push_back(y);
          }
        }
      }
    }
  }

  std::vector<std::uint32_t> f(n, none), finv(n, none);
  auto assign = [&](std::uint32_t x, std::uint32_t y) {
    if (f[x] != none) return f[x] == y;
    if (finv[y] != none) return false;
    f[x] = y;
    finv[y] = x;
    return true;
  };

  auto extend = [&](std::size_t count) {
    std::vector<std::uint32_t> work;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (f[x] != none && x != a.zero()) work.push_back(x);
    }
    for (std::size_t k = 0; k < work.size(); ++k) {
      for (std::size_t gi = 0; gi < count; ++gi) {
        const auto g = gens[gi];
        const auto x = a.product(work[k], g);
        const bool fresh = f[x] == none;
        if (!assign(x, b.product(f[work[k]], f[g]))) return false;
        if (fresh) work.push_back(x);
      }
    }
    return true;
  };

  auto verify = [&]() {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (f[x] == none) return false;
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (f[a.product(x, y)] != b.product(f[x], f[y])) return false;
        HyperSet image;
        for_each_bit(a.sum(x, y), [&](std::uint32_t u) { image.set(f[u]); });
        if (image != b.sum(f[x], f[y])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return verify();
    const auto g = gens[depth];
    const auto want = mul_order(a, g);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y == b.zero() || order_b[y] != want) continue;
      auto saved_f = f;
      auto saved_finv = finv;
      if (assign(g, y) && extend(depth + 1) && self(self, depth + 1)) return true;
      f = std::move(saved_f);
      finv = std::move(saved_finv);
    }
    return false;
  };

  if (!assign(a.zero(), b.zero()) || !assign(a.one(), b.one())) return std::nullopt;
  if (search(search, 0)) return f;
  return std::nullopt;
}

Classification classify_extension(const HyperTable& t) {
  auto report = check_axioms(t);
  if (!report.all_passed()) {
    std::string names;
    for (const auto& name : report.failed()) names += (names.empty() ? "" : ", ") + name;
    throw DomainError("not a hyperfield; failed axioms: " + names);
  }
  auto law = check_vectorspace_law(t);
  if (!law.holds) throw DomainError("x + x = {0, x} fails for x = " + t.labels()[*law.witness]);

  Classification c;
  c.group_order = t.size() - 1;
  if (t.size() == 2) {
    c.kind = ExtensionCase::field_quotient;
    c.degenerate = true;
    c.m = 1;
    c.points = 1;
    return c;
  }
  auto geo = hyperfield_to_geometry(t);
  c.points = geo.geometry.num_points();
  c.lines = geo.geometry.num_lines();
  if (c.lines == 1) {
    c.kind = ExtensionCase::single_line;
    return c;
  }
  const auto N = c.points;
  for (std::uint64_t q = 2; q < N; ++q) {
    if (!prime_power(q)) continue;
    std::uint64_t count = 1 + q, qm = q * q;
    for (unsigned m = 3; count <= N; ++m) {
      count += qm;
      qm *= q;
      if (count == N && qm <= Field::default_cap) {
        auto quotient = quotient_hyperring(QuotientSpec::field_over_subfield(q, m));
        if (isomorphic_tables(t, quotient.table)) {
          c.kind = ExtensionCase::field_quotient;
          c.q = q;
          c.m = m;
          return c;
        }
      }
    }
  }
  c.kind = ExtensionCase::plane_other;
  c.plane = verify_plane(geo.geometry);
  return c;
}

std::string_view case_name(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::single_line: return "single-line";
    case ExtensionCase::field_quotient: return "field-quotient";
    case ExtensionCase::plane_other: return "plane-other";
  }
  return "unknown";
}

}  // namespace singer
