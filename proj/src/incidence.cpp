#include "singer/incidence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "singer/errors.hpp"

namespace singer {

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<Line> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  point_bits_.assign(num_points_, boost::dynamic_bitset<>(lines_.size()));
  line_bits_.reserve(lines_.size());
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto& line = lines_[l];
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw DomainError("line " + std::to_string(l) + " repeats a point");
    }
    boost::dynamic_bitset<> bits(num_points_);
    for (auto p : line) {
      if (p >= num_points_) throw DomainError("line " + std::to_string(l) + " has point index out of range");
      bits.set(p);
      point_bits_[p].set(l);
    }
    line_bits_.push_back(std::move(bits));
    if (!lookup_.emplace(line, l).second) throw DomainError("line " + std::to_string(l) + " is repeated");
  }
}

std::optional<std::size_t> IncidenceStructure::find_line(const Line& sorted_points) const {
  auto it = lookup_.find(sorted_points);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IncidenceStructure::line_through(PointIndex p, PointIndex q) const {
  auto both = point_bits_[p] & point_bits_[q];
  auto l = both.find_first();
  if (l == boost::dynamic_bitset<>::npos) return std::nullopt;
  return l;
}

bool IncidenceStructure::same_incidence(const IncidenceStructure& other) const {
  if (num_points_ != other.num_points_ || lines_.size() != other.lines_.size()) return false;
  return std::all_of(lines_.begin(), lines_.end(), [&](const Line& l) { return other.find_line(l).has_value(); });
}

PlaneCertificate verify_plane(const IncidenceStructure& s) {
  PlaneCertificate cert;
  auto fail = [&](const char* axiom, std::size_t a, std::size_t b) {
    if (cert.failed_axiom.empty()) {
      cert.failed_axiom = axiom;
      cert.counterexample = std::make_pair(a, b);
    }
  };

  cert.two_points_one_line = true;
  for (PointIndex p = 0; p < s.num_points() && cert.two_points_one_line; ++p) {
    for (PointIndex q = p + 1; q < s.num_points(); ++q) {
      if ((s.lines_through(p) & s.lines_through(q)).count() != 1) {
        cert.two_points_one_line = false;
        fail("two-points-one-line", p, q);
        break;
      }
    }
  }

  cert.two_lines_one_point = true;
  for (std::size_t l = 0; l < s.num_lines() && cert.two_lines_one_point; ++l) {
    for (std::size_t k = l + 1; k < s.num_lines(); ++k) {
      if ((s.line_bits(l) & s.line_bits(k)).count() != 1) {
        cert.two_lines_one_point = false;
        fail("two-lines-one-point", l, k);
        break;
      }
    }
  }

  auto collinear = [&](PointIndex a, PointIndex b, PointIndex c) {
    return (s.lines_through(a) & s.lines_through(b) & s.lines_through(c)).any();
  };
  const auto v = static_cast<PointIndex>(s.num_points());
  for (PointIndex a = 0; a < v && !cert.quadrangle; ++a) {
    for (PointIndex b = a + 1; b < v && !cert.quadrangle; ++b) {
      for (PointIndex c = b + 1; c < v && !cert.quadrangle; ++c) {
        if (collinear(a, b, c)) continue;
        for (PointIndex d = c + 1; d < v; ++d) {
          if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d)) {
            cert.quadrangle = true;
            break;
          }
        }
      }
    }
  }
  if (!cert.quadrangle) fail("quadrangle", 0, 0);

  if (cert.passed()) cert.order = s.line(0).size() - 1;
  return cert;
}

LinearSpaceReport verify_partial_linear_space(const IncidenceStructure& s) {
  for (PointIndex p = 0; p < s.num_points(); ++p) {
    for (PointIndex q = p + 1; q < s.num_points(); ++q) {
      if ((s.lines_through(p) & s.lines_through(q)).count() > 1) return {false, std::make_pair(p, q)};
    }
  }
  return {};
}

LinearSpaceReport verify_linear_space(const IncidenceStructure& s) {
  for (const auto& line : s.lines()) {
    if (line.size() < 2) return {false, std::make_pair(line.empty() ? 0 : line[0], line.empty() ? 0 : line[0])};
  }
  for (PointIndex p = 0; p < s.num_points(); ++p) {
    for (PointIndex q = p + 1; q < s.num_points(); ++q) {
      if ((s.lines_through(p) & s.lines_through(q)).count() != 1) return {false, std::make_pair(p, q)};
    }
  }
  return {};
}

IncidenceStructure plane_from_difference_set(const PartialDifferenceSet& s) {
  const auto& G = s.group();
  if (!G.is_finite()) throw UnsupportedError("plane_from_difference_set needs a finite group");
  if (!s.certified()) throw PreconditionError("difference set is not certified");
  const auto v = *G.order();
  std::vector<Line> lines;
  lines.reserve(v);
  for (std::uint64_t j = 0; j < v; ++j) {
    const auto y = G.element_at(j);
    Line line;
    for (const auto& a : s.elements()) line.push_back(static_cast<PointIndex>(G.index_of(G.mul(a, y))));
    lines.push_back(std::move(line));
  }
  return IncidenceStructure(v, std::move(lines));
}

std::vector<FieldElement> normalize_projective(const Field& field, std::vector<FieldElement> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](FieldElement c) { return c.value != 0; });
  if (lead == v.end()) throw DomainError("the zero vector spans no projective point");
  const auto scale = field.inv(*lead);
  for (auto& c : v) c = field.mul(c, scale);
  return v;
}

namespace {

std::uint64_t code_of(const std::vector<FieldElement>& v, std::uint64_t q) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * q + it->value;
  return code;
}

// Normalised vectors of F^dim: leading 1 at position k, zeros before, anything after.
std::vector<std::vector<FieldElement>> normalized_vectors(const Field& field, std::size_t dim) {
  const std::uint32_t q = field.size();
  std::vector<std::vector<FieldElement>> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::vector<FieldElement> v(dim, field.zero());
    v[lead] = field.one();
    while (true) {
      out.push_back(v);
      std::size_t pos = dim;
      while (pos > lead + 1 && v[pos - 1].value + 1 == q) v[--pos].value = 0;
      if (pos == lead + 1) break;
      ++v[pos - 1].value;
    }
  }
  return out;
}

}  // namespace

PointIndex ProjectiveSpace::index_of(const std::vector<FieldElement>& v) const {
  if (v.size() != static_cast<std::size_t>(m) + 1) throw DomainError("vector has the wrong dimension");
  return code_to_point.at(code_of(normalize_projective(field, v), q));
}

ProjectiveSpace pg_space(unsigned m, std::uint64_t q, std::uint64_t cap) {
  auto pp = prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  if (m < 1) throw DomainError("pg_space needs m >= 1");
  std::uint64_t v = 0, qk = 1;
  for (unsigned k = 0; k <= m; ++k) {
    v += qk;
    if (v > cap) throw RangeError("PG(" + std::to_string(m) + "," + std::to_string(q) + ") exceeds the point cap");
    qk *= q;
  }
  ProjectiveSpace space{m, q, Field::make(pp->first, pp->second), {}, {}, {}};
  space.points = normalized_vectors(space.field, m + 1);
  space.code_to_point.assign(qk, static_cast<PointIndex>(-1));
  for (PointIndex i = 0; i < space.points.size(); ++i) space.code_to_point[code_of(space.points[i], q)] = i;

  const auto& F = space.field;
  std::vector<boost::dynamic_bitset<>> covered(v, boost::dynamic_bitset<>(v));
  std::vector<Line> lines;
  for (PointIndex a = 0; a < v; ++a) {
    for (PointIndex b = a + 1; b < v; ++b) {
      if (covered[a].test(b)) continue;
      Line line{a};
      for (std::uint32_t c = 0; c < F.size(); ++c) {
        std::vector<FieldElement> w(m + 1);
        for (unsigned k = 0; k <= m; ++k) w[k] = F.add(space.points[b][k], F.mul({c}, space.points[a][k]));
        line.push_back(space.index_of(w));
      }
      std::sort(line.begin(), line.end());
      for (auto x : line) {
        for (auto y : line) covered[x].set(y);
      }
      lines.push_back(std::move(line));
    }
  }
  space.geometry = IncidenceStructure(v, std::move(lines));
  return space;
}

std::vector<PointIndex> classical_transport(const ClassicalSinger& c, const ProjectiveSpace& space) {
  if (c.q != space.q || c.m != space.m) throw PreconditionError("classical model and projective space differ");
  const auto& big = c.field;
  const auto& small = space.field;
  const auto emb = subfield_embedding(small, big);
  const std::uint64_t q = small.size();
  std::vector<std::uint64_t> code_of_value(big.size(), 0);
  std::vector<FieldElement> powers;
  for (unsigned k = 0; k <= c.m; ++k) powers.push_back(big.exp(k));
  std::vector<std::uint32_t> digits(c.m + 1, 0);
  while (true) {
    FieldElement x = big.zero();
    std::uint64_t code = 0;
    for (unsigned k = c.m + 1; k-- > 0;) {
      x = big.add(x, big.mul(emb[digits[k]], powers[k]));
      code = code * q + digits[k];
    }
    code_of_value[x.value] = code;
    unsigned pos = 0;
    while (pos <= c.m && digits[pos] + 1 == q) digits[pos++] = 0;
    if (pos > c.m) break;
    ++digits[pos];
  }
  std::vector<PointIndex> transport(c.v);
  for (std::uint64_t i = 0; i < c.v; ++i) {
    auto code = code_of_value[big.exp(static_cast<std::int64_t>(i)).value];
    std::vector<FieldElement> coords(c.m + 1);
    for (unsigned k = 0; k <= c.m; ++k) {
      coords[k] = {static_cast<std::uint32_t>(code % q)};
      code /= q;
    }
    transport[i] = space.index_of(coords);
  }
  return transport;
}

PointAction right_translation(const GroupHandle& group) {
  if (!group.is_finite()) throw UnsupportedError("right translation needs a finite group");
  const auto n = *group.order();
  auto elements = group.enumerate(n);
  PointAction action;
  action.images.assign(n, std::vector<PointIndex>(n));
  for (std::uint64_t g = 0; g < n; ++g) {
    for (std::uint64_t x = 0; x < n; ++x) {
      action.images[g][x] = static_cast<PointIndex>(group.index_of(group.mul(elements[x], elements[g])));
    }
  }
  return action;
}

PointAction transport_action(const PointAction& action, const std::vector<PointIndex>& t) {
  PointAction out;
  out.identity_row = action.identity_row;
  out.images.assign(action.images.size(), std::vector<PointIndex>(t.size()));
  for (std::size_t g = 0; g < action.images.size(); ++g) {
    for (std::size_t p = 0; p < t.size(); ++p) out.images[g][t[p]] = t[action.images[g][p]];
  }
  return out;
}

SingerCertificate verify_singer_action(const IncidenceStructure& s, const PointAction& action) {
  SingerCertificate cert;
  const auto v = s.num_points();
  cert.permutations = std::all_of(action.images.begin(), action.images.end(), [&](const auto& row) {
    if (row.size() != v) return false;
    std::vector<bool> hit(v, false);
    for (auto p : row) {
      if (p >= v || hit[p]) return false;
      hit[p] = true;
    }
    return true;
  });
  if (!cert.permutations) return cert;

  cert.lines_preserved = true;
  for (std::size_t g = 0; g < action.images.size() && cert.lines_preserved; ++g) {
    for (const auto& line : s.lines()) {
      Line image;
      for (auto p : line) image.push_back(action.images[g][p]);
      std::sort(image.begin(), image.end());
      if (!s.find_line(image)) {
        cert.lines_preserved = false;
        cert.bad_element = g;
        break;
      }
    }
  }

  cert.regular = true;
  std::vector<std::size_t> count(v);
  for (PointIndex p = 0; p < v && cert.regular; ++p) {
    std::fill(count.begin(), count.end(), 0);
    for (const auto& row : action.images) ++count[row[p]];
    for (PointIndex q = 0; q < v; ++q) {
      if (count[q] != 1) {
        cert.regular = false;
        cert.bad_pair = std::make_pair(p, q);
        cert.movers = count[q];
        break;
      }
    }
  }
  return cert;
}

VirtualSingerReport verify_virtual_singer(const PointAction& action) {
  VirtualSingerReport report;
  report.free = true;
  const auto v = action.num_points();
  for (std::size_t g = 0; g < action.images.size() && report.free; ++g) {
    if (g == action.identity_row) continue;
    for (PointIndex p = 0; p < v; ++p) {
      if (action.images[g][p] == p) {
        report.free = false;
        report.fixed = std::make_pair(g, p);
        break;
      }
    }
  }
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : action.images) {
    for (PointIndex p = 0; p < v; ++p) parent[find(p)] = find(row[p]);
  }
  for (std::size_t p = 0; p < v; ++p) report.orbit_count += find(p) == p ? 1 : 0;
  return report;
}

PointAction generate_group(const std::vector<std::vector<PointIndex>>& generators, std::size_t num_points) {
  std::vector<PointIndex> id(num_points);
  std::iota(id.begin(), id.end(), 0);
  PointAction out;
  std::set<std::vector<PointIndex>> seen{id};
  std::deque<std::vector<PointIndex>> queue{id};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      if (gen.size() != num_points) throw DomainError("generator has the wrong degree");
      std::vector<PointIndex> next(num_points);
      for (std::size_t p = 0; p < num_points; ++p) next[p] = gen[cur[p]];
      if (seen.insert(next).second) queue.push_back(next);
    }
    out.images.push_back(std::move(cur));
  }
  return out;
}

std::vector<FieldElement> Collineation::apply(const std::vector<FieldElement>& x) const {
  std::vector<FieldElement> twisted(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) twisted[k] = field.frobenius(x[k], frobenius);
  return mat_vec(GfArith{field}, matrix, twisted);
}

std::vector<PointIndex> collineation_permutation(const ProjectiveSpace& space, const Collineation& c) {
  if (c.matrix.n != space.m + 1) throw DomainError("matrix size does not match the space");
  if (!(c.field == space.field)) throw DomainError("collineation field does not match the space");
  std::vector<PointIndex> perm(space.points.size());
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    auto image = c.apply(space.points[p]);
    if (std::all_of(image.begin(), image.end(), [](FieldElement e) { return e.value == 0; })) {
      throw DomainError("matrix is singular");
    }
    perm[p] = space.index_of(image);
    if (hit[perm[p]]) throw DomainError("matrix is singular");
    hit[perm[p]] = true;
  }
  return perm;
}

std::vector<std::vector<FieldElement>> fixed_points_eigen(const Collineation& c) {
  if (c.frobenius % c.field.degree() != 0) throw PreconditionError("eigenvector route needs a linear map");
  GfArith ar{c.field};
  const auto& F = c.field;
  const auto n = c.matrix.n;
  if (ar.is_zero(determinant(ar, c.matrix))) throw DomainError("matrix is singular");
  std::set<std::vector<FieldElement>> points;
  for (auto rho : roots_in_field(F, char_poly(ar, c.matrix))) {
    auto shifted = c.matrix;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) = F.sub(shifted(i, i), rho);
    auto basis = nullspace(ar, shifted);
    std::vector<std::uint32_t> coeff(basis.size(), 0);
    while (true) {
      std::vector<FieldElement> w(n, F.zero());
      for (std::size_t b = 0; b < basis.size(); ++b) {
        for (std::size_t k = 0; k < n; ++k) w[k] = F.add(w[k], F.mul({coeff[b]}, basis[b][k]));
      }
      if (std::any_of(w.begin(), w.end(), [](FieldElement e) { return e.value != 0; })) {
        points.insert(normalize_projective(F, w));
      }
      std::size_t pos = 0;
      while (pos < coeff.size() && coeff[pos] + 1 == F.size()) coeff[pos++] = 0;
      if (pos == coeff.size()) break;
      ++coeff[pos];
    }
  }
  return {points.begin(), points.end()};
}

std::vector<std::vector<FieldElement>> fixed_points_scan(const Collineation& c) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& x : normalized_vectors(c.field, c.matrix.n)) {
    auto y = c.apply(x);
    if (std::all_of(y.begin(), y.end(), [](FieldElement e) { return e.value == 0; })) {
      throw DomainError("matrix is singular");
    }
    if (normalize_projective(c.field, y) == x) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<FieldElement>> fixed_points(const Collineation& c) {
  return c.frobenius % c.field.degree() == 0 ? fixed_points_eigen(c) : fixed_points_scan(c);
}

std::vector<RationalEigenspace> fixed_points_rational(const Matrix<Rational>& a) {
  RationalArith ar;
  if (determinant(ar, a) == Rational(0)) throw DomainError("matrix is singular");
  std::vector<RationalEigenspace> out;
  for (const auto& rho : rational_roots(char_poly(ar, a))) {
    auto shifted = a;
    for (std::size_t i = 0; i < a.n; ++i) shifted(i, i) -= rho;
    out.push_back({rho, nullspace(ar, shifted)});
  }
  return out;
}

namespace {

struct PairLines {
  std::vector<std::int64_t> table;  // n*n, -1 when no line
  bool unique = true;
  std::size_t n = 0;

  explicit PairLines(const IncidenceStructure& s) : table(s.num_points() * s.num_points(), -1), n(s.num_points()) {
    for (PointIndex p = 0; p < n; ++p) {
      for (PointIndex q = 0; q < n; ++q) {
        if (p == q) continue;
        auto both = s.lines_through(p) & s.lines_through(q);
        if (both.count() > 1) unique = false;
        auto l = both.find_first();
        if (l != boost::dynamic_bitset<>::npos) table[p * n + q] = static_cast<std::int64_t>(l);
      }
    }
  }
  std::int64_t at(PointIndex p, PointIndex q) const { return table[p * n + q]; }
};

std::vector<std::size_t> degree_profile(const IncidenceStructure& s, bool points) {
  std::vector<std::size_t> out;
  if (points) {
    for (PointIndex p = 0; p < s.num_points(); ++p) out.push_back(s.lines_through(p).count());
  } else {
    for (const auto& l : s.lines()) out.push_back(l.size());
  }
  return out;
}

}  // namespace

IsoResult isomorphic_planes(const IncidenceStructure& a, const IncidenceStructure& b, std::uint64_t node_cap) {
  IsoResult result;
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto deg_a = degree_profile(a, true);
  const auto deg_b = degree_profile(b, true);
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines() || sorted(deg_a) != sorted(deg_b) ||
      sorted(degree_profile(a, false)) != sorted(degree_profile(b, false))) {
    result.status = IsoStatus::not_isomorphic;
    return result;
  }
  const PairLines pa(a), pb(b);
  auto collinear = [](const IncidenceStructure& s, const PairLines& pl, PointIndex x, PointIndex y, PointIndex z) {
    if (pl.unique) {
      auto l = pl.at(x, y);
      return l >= 0 && s.incident(z, static_cast<std::size_t>(l));
    }
    return (s.lines_through(x) & s.lines_through(y) & s.lines_through(z)).any();
  };

  const auto v = static_cast<PointIndex>(a.num_points());
  std::vector<PointIndex> map(v);
  std::vector<bool> used(v, false);
  bool capped = false;

  auto lines_match = [&]() {
    for (const auto& line : a.lines()) {
      Line image;
      for (auto p : line) image.push_back(map[p]);
      std::sort(image.begin(), image.end());
      if (!b.find_line(image)) return false;
    }
    return true;
  };

  auto consistent = [&](PointIndex k, PointIndex c) {
    if (deg_a[k] != deg_b[c]) return false;
    for (PointIndex i = 0; i < k; ++i) {
      if ((pa.at(i, k) >= 0) != (pb.at(map[i], c) >= 0)) return false;
      for (PointIndex j = i + 1; j < k; ++j) {
        if (collinear(a, pa, i, j, k) != collinear(b, pb, map[i], map[j], c)) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, PointIndex k) -> bool {
    if (k == v) return lines_match();
    for (PointIndex c = 0; c < v; ++c) {
      if (used[c] || !consistent(k, c)) continue;
      if (++result.nodes > node_cap) {
        capped = true;
        return false;
      }
      map[k] = c;
      used[c] = true;
      if (self(self, k + 1)) return true;
      used[c] = false;
      if (capped) return false;
    }
    return false;
  };

  if (search(search, 0)) {
    result.status = IsoStatus::isomorphic;
    result.map = map;
  } else {
    result.status = capped ? IsoStatus::indeterminate : IsoStatus::not_isomorphic;
  }
  return result;
}

}  // namespace singer
