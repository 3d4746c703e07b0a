#include "singer/cayley.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "singer/errors.hpp"
#include "singer/finite_field.hpp"

namespace singer {

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

}  // namespace

CayleyTable::CayleyTable(std::vector<std::vector<std::uint32_t>> mul) : mul_(std::move(mul)) {
  const auto n = static_cast<std::uint32_t>(mul_.size());
  if (n == 0) throw DomainError("a group needs at least one element");
  for (const auto& row : mul_) {
    if (row.size() != n) throw DomainError("multiplication table is not square");
    for (auto v : row) {
      if (v >= n) throw DomainError("multiplication table entry out of range");
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (mul_[0][x] != x || mul_[x][0] != x) throw DomainError("element 0 is not the identity");
  }
  inv_.assign(n, kNone);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (mul_[x][y] == 0) {
        if (mul_[y][x] != 0) throw DomainError("one-sided inverse in multiplication table");
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] == kNone) throw DomainError("element without inverse in multiplication table");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = mul_[a][b];
      for (std::uint32_t c = 0; c < n; ++c) {
        if (mul_[ab][c] != mul_[a][mul_[b][c]]) throw DomainError("multiplication table is not associative");
      }
    }
  }
  order_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t k = 1;
    for (auto y = x; y != 0; y = mul_[y][x]) ++k;
    order_[x] = k;
  }
}

CayleyTable CayleyTable::cyclic(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::from_group(const GroupHandle& group) {
  if (!group.is_finite()) throw UnsupportedError("Cayley table needs a finite group");
  const auto n = *group.order();
  if (n > 5000) throw RangeError("group too large for a multiplication table");
  auto elements = group.enumerate(n);
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      mul[a][b] = static_cast<std::uint32_t>(group.index_of(group.mul(elements[a], elements[b])));
    }
  }
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::direct_product(const CayleyTable& a, const CayleyTable& b) {
  const auto na = a.size(), nb = b.size();
  std::vector<std::vector<std::uint32_t>> mul(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::uint32_t x = 0; x < na * nb; ++x) {
    for (std::uint32_t y = 0; y < na * nb; ++y) mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return CayleyTable(std::move(mul));
}

std::uint32_t CayleyTable::power(std::uint32_t a, std::int64_t k) const {
  const auto o = static_cast<std::int64_t>(order_[a]);
  auto e = ((k % o) + o) % o;
  std::uint32_t r = 0;
  for (std::int64_t i = 0; i < e; ++i) r = mul_[r][a];
  return r;
}

bool CayleyTable::is_abelian() const {
  for (std::uint32_t a = 0; a < size(); ++a) {
    for (std::uint32_t b = a + 1; b < size(); ++b) {
      if (mul_[a][b] != mul_[b][a]) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> CayleyTable::generated(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> seen(size(), false);
  std::vector<std::uint32_t> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto g : gens) {
      auto y = mul_[out[k]][g];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> CayleyTable::generators() const {
  std::vector<std::uint32_t> gens;
  std::vector<bool> in_span(size(), false);
  in_span[0] = true;
  for (std::uint32_t x = 1; x < size(); ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    for (auto y : generated(gens)) in_span[y] = true;
  }
  return gens;
}

PermRep permutation_group(const std::vector<Perm>& generators, std::size_t degree) {
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<Perm> elements{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  auto compose = [&](const Perm& first, const Perm& second) {
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = second[first[x]];
    return r;
  };
  for (const auto& g : generators) {
    if (g.size() != degree) throw DomainError("generator has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw DomainError("generator is not a permutation");
      hit[v] = true;
    }
  }
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : generators) {
      auto p = compose(elements[k], g);
      if (index.emplace(p, static_cast<std::uint32_t>(elements.size())).second) {
        elements.push_back(std::move(p));
        if (elements.size() > 5000) throw RangeError("permutation group too large");
      }
    }
  }
  const auto n = elements.size();
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));
  }
  return {CayleyTable(std::move(mul)), std::move(elements)};
}

namespace {

// Map on the subgroup generated by gens; kNone elsewhere. Empty on conflict.
std::vector<std::uint32_t> extend_partial(const CayleyTable& a, const CayleyTable& b,
                                          const std::vector<std::uint32_t>& gens,
                                          const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> map(a.size(), kNone);
  map[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto x = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = a.mul(x, gens[i]);
      const auto v = b.mul(map[x], images[i]);
      if (map[y] == kNone) {
        map[y] = v;
        queue.push_back(y);
      } else if (map[y] != v) {
        return {};
      }
    }
  }
  return map;
}

bool injective_on_domain(const std::vector<std::uint32_t>& map, std::uint32_t codomain) {
  std::vector<bool> hit(codomain, false);
  for (auto v : map) {
    if (v == kNone) continue;
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

using Signature = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Signature signature(const CayleyTable& g) {
  Signature sig;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    std::uint32_t centralizer = 0;
    for (std::uint32_t y = 0; y < g.size(); ++y) centralizer += g.mul(x, y) == g.mul(y, x) ? 1 : 0;
    sig.emplace_back(g.order_of(x), centralizer);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Enumerates bijective homomorphisms a -> b; stops when visit returns false.
template <class Visit>
void for_each_isomorphism(const CayleyTable& a, const CayleyTable& b, Visit&& visit) {
  if (a.size() != b.size()) return;
  const auto gens = a.generators();
  std::vector<std::uint32_t> images(gens.size(), 0);
  bool stop = false;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      auto map = extend_partial(a, b, gens, images);
      if (map.empty() || std::find(map.begin(), map.end(), kNone) != map.end()) return;
      if (!injective_on_domain(map, b.size())) return;
      if (!visit(map)) stop = true;
      return;
    }
    for (std::uint32_t y = 0; y < b.size() && !stop; ++y) {
      if (b.order_of(y) != a.order_of(gens[depth])) continue;
      images[depth] = y;
      std::vector<std::uint32_t> prefix_gens(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
      std::vector<std::uint32_t> prefix_images(images.begin(), images.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
      auto partial = extend_partial(a, b, prefix_gens, prefix_images);
      if (partial.empty() || !injective_on_domain(partial, b.size())) continue;
      self(self, depth + 1);
    }
  };
  search(search, 0);
}

}  // namespace

std::optional<std::vector<std::uint32_t>> extend_hom(const CayleyTable& a, const CayleyTable& b,
                                                     const std::vector<std::uint32_t>& gens,
                                                     const std::vector<std::uint32_t>& images) {
  if (gens.size() != images.size()) throw DomainError("generator and image lists differ in length");
  auto map = extend_partial(a, b, gens, images);
  if (map.empty() || std::find(map.begin(), map.end(), kNone) != map.end()) return std::nullopt;
  return map;
}

std::optional<std::vector<std::uint32_t>> find_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  if (a.size() != b.size() || signature(a) != signature(b)) return std::nullopt;
  std::optional<std::vector<std::uint32_t>> found;
  for_each_isomorphism(a, b, [&](const std::vector<std::uint32_t>& map) {
    found = map;
    return false;
  });
  return found;
}

std::vector<std::vector<std::uint32_t>> automorphisms(const CayleyTable& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_isomorphism(g, g, [&](const std::vector<std::uint32_t>& map) {
    out.push_back(map);
    return true;
  });
  return out;
}

namespace {

std::vector<CayleyTable> build_groups_of_order(std::uint32_t n) {
  if (n == 1) return {CayleyTable::cyclic(1)};
  std::vector<CayleyTable> found;
  std::vector<Signature> sigs;
  auto offer = [&](CayleyTable g) {
    auto sig = signature(g);
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (sigs[i] == sig && find_isomorphism(found[i], g)) return;
    }
    found.push_back(std::move(g));
    sigs.push_back(std::move(sig));
  };
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (n % p != 0 || !is_prime(p)) continue;
    for (const auto& k : groups_of_order(n / p)) {
      const auto m = k.size();
      for (const auto& alpha : automorphisms(k)) {
        // alpha^i for i < p, and alpha^p
        std::vector<std::vector<std::uint32_t>> powers{std::vector<std::uint32_t>(m)};
        for (std::uint32_t x = 0; x < m; ++x) powers[0][x] = x;
        for (std::uint32_t i = 1; i <= p; ++i) {
          std::vector<std::uint32_t> next(m);
          for (std::uint32_t x = 0; x < m; ++x) next[x] = alpha[powers.back()[x]];
          powers.push_back(std::move(next));
        }
        for (std::uint32_t k0 = 0; k0 < m; ++k0) {
          if (alpha[k0] != k0) continue;
          bool inner = true;
          for (std::uint32_t x = 0; x < m && inner; ++x) {
            inner = powers[p][x] == k.mul(k.mul(k0, x), k.inverse(k0));
          }
          if (!inner) continue;
          // element (x, i) = x t^i at index i*m + x; t y t^-1 = alpha(y), t^p = k0
          std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
          for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
              const auto i = a / m, j = b / m;
              auto z = k.mul(a % m, powers[i][b % m]);
              auto e = i + j;
              if (e >= p) {
                z = k.mul(z, k0);
                e -= p;
              }
              mul[a][b] = e * m + z;
            }
          }
          offer(CayleyTable(std::move(mul)));
        }
      }
    }
  }
  return found;
}

}  // namespace

const std::vector<CayleyTable>& groups_of_order(std::uint32_t n) {
  if (n == 0 || n > 30) throw RangeError("groups_of_order supports 1 <= n <= 30");
  static std::recursive_mutex mutex;
  static std::map<std::uint32_t, std::vector<CayleyTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_groups_of_order(n)).first;
  return it->second;
}

}  // namespace singer
