#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace singer {

bool is_prime(std::uint64_t n);

/// (p, n) with q = p^n, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Rabin's test for a monic polynomial over GF(p); coefficients low-to-high.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Element of GF(p^n), encoded as the base-p integer of its coefficient
/// vector (coefficient of x^i is digit i). Enumeration order is value order.
struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^n) with log/antilog tables. Cheap to copy (tables are shared).
class Field {
 public:
  static constexpr std::uint64_t default_cap = 1ULL << 20;

  /// The modulus is the least monic irreducible of degree n, ordering
  /// coefficient tuples (c0, c1, ..., c_{n-1}) lexicographically.
  static Field make(std::uint64_t p, unsigned n, std::uint64_t cap = default_cap);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint32_t size() const noexcept;
  const std::vector<std::uint32_t>& modulus() const noexcept;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(std::int64_t k) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement element(std::uint32_t value) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::int64_t k) const;
  /// a^(p^k)
  FieldElement frobenius(FieldElement a, unsigned k = 1) const;

  /// Least element (in value order) of multiplicative order size()-1.
  FieldElement primitive() const noexcept;
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  FieldElement exp(std::int64_t k) const;
  std::uint32_t multiplicative_order(FieldElement a) const;

  std::string format(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

using FieldPoly = std::vector<FieldElement>;

FieldElement poly_eval(const Field& field, const FieldPoly& f, FieldElement x);

/// All roots of f in the field, ascending, each verified by evaluation.
std::vector<FieldElement> roots_in_field(const Field& field, const FieldPoly& f);

using Rational = boost::rational<std::int64_t>;
using RationalPoly = std::vector<Rational>;

/// All rational roots (rational root theorem), ascending and distinct.
std::vector<Rational> rational_roots(const RationalPoly& f);

/// Image of every element of `small` under the embedding GF(p^i) -> GF(p^j)
/// that sends x to the least root of small's modulus in `big`.
std::vector<FieldElement> subfield_embedding(const Field& small, const Field& big);

/// True iff (p^{2i}+p^i+1) divides (p^{2j}+p^j+1). Requires i | j.
bool singer_divisibility(std::uint64_t p, std::uint64_t i, std::uint64_t j);

}  // namespace singer
