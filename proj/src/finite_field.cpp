#include "singer/finite_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "singer/errors.hpp"

namespace singer {

namespace {

using IntPoly = std::vector<std::uint32_t>;  // over GF(p), low-to-high

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    auto q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// a mod f, f nonzero.
IntPoly poly_mod(IntPoly a, const IntPoly& f, std::uint32_t p) {
  trim(a);
  const auto df = f.size() - 1;
  const auto lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    auto c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    auto shift = a.size() - 1 - df;
    for (std::size_t k = 0; k <= df; ++k) {
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - c * f[k] % p) % p);
    }
    trim(a);
  }
  return a;
}

IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

IntPoly poly_powmod(IntPoly base, std::uint64_t e, const IntPoly& f, std::uint32_t p) {
  IntPoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

IntPoly poly_sub(IntPoly a, const IntPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

IntPoly poly_gcd(IntPoly a, IntPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1u);
  unsigned n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, n);
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  IntPoly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const auto n = f.size() - 1;
  if (n > 1 && f[0] % p == 0) return false;  // divisible by x
  const IntPoly x{0, 1};
  // x^{p^k} mod f for k = 0..n
  std::vector<IntPoly> frob{poly_mod(x, f, p)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (poly_sub(frob[n], poly_mod(x, f, p), p) != IntPoly{}) return false;
  for (auto r : prime_factors(n)) {
    auto g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint32_t size = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> weight;  // p^i
  std::vector<std::uint32_t> exp;     // primitive^k, k in [0, size-1)
  std::vector<std::uint32_t> log;
  std::uint32_t primitive = 1;

  std::uint32_t digit(std::uint32_t v, unsigned i) const { return (v / weight[i]) % p; }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return binary_mul(a, b);
    // n <= 20 since p^n fits the table cap
    std::array<std::uint64_t, 64> prod{};
    std::array<std::uint32_t, 32> da{}, db{};
    for (unsigned i = 0; i < n; ++i, a /= p, b /= p) {
      da[i] = a % p;
      db[i] = b % p;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (unsigned d = 2 * n - 1; d >= n; --d) {
      auto c = prod[d] % p;
      if (c == 0) continue;
      for (unsigned k = 0; k < n; ++k) prod[d - n + k] += (p - c) * modulus[k];
    }
    std::uint32_t v = 0;
    for (unsigned i = 0; i < n; ++i) v += static_cast<std::uint32_t>(prod[i] % p) * weight[i];
    return v;
  }

  // Carry-less product mod the modulus, bit i = coefficient of x^i.
  std::uint32_t binary_mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < n; ++i) {
      if ((a >> i) & 1) prod ^= static_cast<std::uint64_t>(b) << i;
    }
    std::uint64_t mod = 0;
    for (unsigned k = 0; k <= n; ++k) mod |= static_cast<std::uint64_t>(modulus[k]) << k;
    for (unsigned d = 2 * n - 1; d >= n; --d) {
      if ((prod >> d) & 1) prod ^= mod << (d - n);
    }
    return static_cast<std::uint32_t>(prod);
  }
};

Field Field::make(std::uint64_t p, unsigned n, std::uint64_t cap) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("field degree must be at least 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > cap) throw RangeError("field size " + std::to_string(p) + "^" + std::to_string(n) + " exceeds cap");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->n = n;
  impl->size = static_cast<std::uint32_t>(size);
  impl->weight.resize(n);
  for (unsigned i = 0; i < n; ++i) impl->weight[i] = i == 0 ? 1 : impl->weight[i - 1] * impl->p;

  // Odometer over (c0, ..., c_{n-1}) with c0 most significant.
  std::vector<std::uint32_t> coeffs(n + 1, 0);
  coeffs[n] = 1;
  // Every tuple with c0 = 0 is divisible by x, so start at (1, 0, ..., 0).
  if (n > 1) coeffs[0] = 1;
  while (true) {
    if (is_irreducible(impl->p, coeffs)) break;
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && coeffs[pos] == impl->p - 1) coeffs[pos--] = 0;
    if (pos < 0) throw DomainError("no irreducible polynomial found");  // unreachable
    ++coeffs[pos];
  }
  impl->modulus = coeffs;

  const std::uint32_t group_order = impl->size - 1;
  const auto factors = prime_factors(group_order);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = impl->slow_mul(r, a);
      a = impl->slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 1; g < impl->size; ++g) {
    bool ok = slow_pow(g, group_order) == 1;
    for (auto r : factors) ok = ok && slow_pow(g, group_order / r) != 1;
    if (ok) {
      impl->primitive = g;
      break;
    }
  }
  impl->exp.resize(group_order);
  impl->log.assign(impl->size, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t k = 0; k < group_order; ++k) {
    impl->exp[k] = cur;
    impl->log[cur] = k;
    cur = impl->slow_mul(cur, impl->primitive);
  }
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->n; }
std::uint32_t Field::size() const noexcept { return impl_->size; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

FieldElement Field::from_int(std::int64_t k) const {
  auto p = static_cast<std::int64_t>(impl_->p);
  auto r = k % p;
  return {static_cast<std::uint32_t>(r < 0 ? r + p : r)};
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > impl_->n) throw DomainError("too many coefficients for field element");
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += (coeffs[i] % impl_->p) * impl_->weight[i];
  return {v};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(impl_->n);
  for (unsigned i = 0; i < impl_->n; ++i) out[i] = impl_->digit(a.value, i);
  return out;
}

FieldElement Field::element(std::uint32_t value) const {
  if (value >= impl_->size) throw DomainError("field element value out of range");
  return {value};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (impl_->p == 2) return {a.value ^ b.value};
  std::uint32_t v = 0;
  for (unsigned i = 0; i < impl_->n; ++i) {
    v += ((impl_->digit(a.value, i) + impl_->digit(b.value, i)) % impl_->p) * impl_->weight[i];
  }
  return {v};
}

FieldElement Field::neg(FieldElement a) const {
  if (impl_->p == 2) return a;
  std::uint32_t v = 0;
  for (unsigned i = 0; i < impl_->n; ++i) v += ((impl_->p - impl_->digit(a.value, i)) % impl_->p) * impl_->weight[i];
  return {v};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return {0};
  const auto order = impl_->size - 1;
  auto k = impl_->log[a.value] + impl_->log[b.value];
  if (k >= order) k -= order;
  return {impl_->exp[k]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.value == 0) throw DomainError("inverse of zero");
  const auto order = impl_->size - 1;
  auto k = impl_->log[a.value];
  return {impl_->exp[k == 0 ? 0 : order - k]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
  if (a.value == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return {k == 0 ? 1u : 0u};
  }
  return exp(static_cast<std::int64_t>(impl_->log[a.value]) * (k % static_cast<std::int64_t>(impl_->size - 1)));
}

FieldElement Field::frobenius(FieldElement a, unsigned k) const {
  if (a.value == 0) return a;
  const std::uint64_t order = impl_->size - 1;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e = e * impl_->p % order;
  return {impl_->exp[impl_->log[a.value] * e % order]};
}

FieldElement Field::primitive() const noexcept { return {impl_->primitive}; }

std::uint32_t Field::log(FieldElement a) const {
  if (a.value == 0) throw DomainError("log of zero");
  return impl_->log[a.value];
}

FieldElement Field::exp(std::int64_t k) const {
  const auto order = static_cast<std::int64_t>(impl_->size - 1);
  auto r = k % order;
  return {impl_->exp[static_cast<std::size_t>(r < 0 ? r + order : r)]};
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  const auto order = impl_->size - 1;
  return order / std::gcd(log(a), order);
}

std::string Field::format(FieldElement a) const {
  if (impl_->n == 1) return std::to_string(a.value);
  if (a.value == 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (unsigned i = impl_->n; i-- > 0;) {
    auto c = impl_->digit(a.value, i);
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

FieldElement poly_eval(const Field& field, const FieldPoly& f, FieldElement x) {
  FieldElement acc = field.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

std::vector<FieldElement> roots_in_field(const Field& field, const FieldPoly& f) {
  if (std::all_of(f.begin(), f.end(), [](FieldElement c) { return c.value == 0; })) {
    throw DomainError("roots of the zero polynomial are undefined");
  }
  std::vector<FieldElement> roots;
  for (std::uint32_t v = 0; v < field.size(); ++v) {
    if (poly_eval(field, f, {v}).value == 0) roots.push_back({v});
  }
  return roots;
}

std::vector<Rational> rational_roots(const RationalPoly& input) {
  RationalPoly f = input;
  while (!f.empty() && f.back() == Rational(0)) f.pop_back();
  if (f.empty()) throw DomainError("roots of the zero polynomial are undefined");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (f[low] == Rational(0)) ++low;
  if (low > 0) roots.push_back(0);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  if (f.size() == 1) return roots;

  std::int64_t lcm = 1;
  for (const auto& c : f) lcm = std::lcm(lcm, c.denominator());
  std::vector<std::int64_t> ints;
  for (const auto& c : f) ints.push_back((c * lcm).numerator());
  auto eval = [&](Rational x) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto abs64 = [](std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  std::set<Rational> found;
  for (auto num : divisors(abs64(ints.front()))) {
    for (auto den : divisors(abs64(ints.back()))) {
      for (int sign : {1, -1}) {
        Rational x(sign * static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
        if (eval(x) == Rational(0)) found.insert(x);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldElement> subfield_embedding(const Field& small, const Field& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
    throw PreconditionError("GF(p^i) embeds in GF(p^j) only when the characteristics agree and i | j");
  }
  FieldPoly lifted;
  for (auto c : small.modulus()) lifted.push_back(big.from_int(c));
  auto roots = roots_in_field(big, lifted);
  if (roots.empty()) throw DomainError("subfield modulus has no root in the extension");  // unreachable for i | j
  const auto r = roots.front();
  std::vector<FieldElement> image(small.size());
  for (std::uint32_t v = 0; v < small.size(); ++v) {
    auto coeffs = small.coefficients({v});
    FieldElement acc = big.zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = big.add(big.mul(acc, r), big.from_int(coeffs[k]));
    image[v] = acc;
  }
  return image;
}

bool singer_divisibility(std::uint64_t p, std::uint64_t i, std::uint64_t j) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (i == 0 || j == 0 || j % i != 0) throw PreconditionError("singer_divisibility requires 1 <= i with i | j");
  if (static_cast<double>(j) * std::log2(static_cast<double>(p)) > 100000) throw RangeError("p^j too large");
  using boost::multiprecision::cpp_int;
  const cpp_int pi = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(i));
  const cpp_int pj = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(j));
  return (pj * pj + pj + 1) % (pi * pi + pi + 1) == 0;
}

}  // namespace singer
