#pragma once

#include <cstddef>
#include <vector>

#include "singer/errors.hpp"
#include "singer/finite_field.hpp"

namespace singer {

/// Arithmetic over GF(p^n) for the generic routines below.
struct GfArith {
  using value_type = FieldElement;
  Field field;

  value_type zero() const { return field.zero(); }
  value_type one() const { return field.one(); }
  value_type add(value_type a, value_type b) const { return field.add(a, b); }
  value_type sub(value_type a, value_type b) const { return field.sub(a, b); }
  value_type mul(value_type a, value_type b) const { return field.mul(a, b); }
  value_type inv(value_type a) const { return field.inv(a); }
  bool is_zero(value_type a) const { return a.value == 0; }
};

struct RationalArith {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type sub(value_type a, value_type b) const { return a - b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  value_type inv(value_type a) const {
    if (a == Rational(0)) throw DomainError("inverse of zero");
    return 1 / a;
  }
  bool is_zero(value_type a) const { return a == Rational(0); }
};

/// Square matrix, row-major.
template <class T>
struct Matrix {
  std::size_t n = 0;
  std::vector<T> entries;

  Matrix() = default;
  Matrix(std::size_t size, T fill) : n(size), entries(size * size, fill) {}

  T& operator()(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
};

template <class Arith>
Matrix<typename Arith::value_type> identity_matrix(const Arith& ar, std::size_t n) {
  Matrix<typename Arith::value_type> m(n, ar.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ar.one();
  return m;
}

template <class Arith>
std::vector<typename Arith::value_type> mat_vec(const Arith& ar, const Matrix<typename Arith::value_type>& a,
                                                const std::vector<typename Arith::value_type>& v) {
  std::vector<typename Arith::value_type> out(a.n, ar.zero());
  for (std::size_t r = 0; r < a.n; ++r) {
    for (std::size_t c = 0; c < a.n; ++c) out[r] = ar.add(out[r], ar.mul(a(r, c), v[c]));
  }
  return out;
}

template <class Arith>
Matrix<typename Arith::value_type> mat_mul(const Arith& ar, const Matrix<typename Arith::value_type>& a,
                                           const Matrix<typename Arith::value_type>& b) {
  Matrix<typename Arith::value_type> out(a.n, ar.zero());
  for (std::size_t r = 0; r < a.n; ++r) {
    for (std::size_t k = 0; k < a.n; ++k) {
      if (ar.is_zero(a(r, k))) continue;
      for (std::size_t c = 0; c < a.n; ++c) out(r, c) = ar.add(out(r, c), ar.mul(a(r, k), b(k, c)));
    }
  }
  return out;
}

template <class Arith>
typename Arith::value_type determinant(const Arith& ar, Matrix<typename Arith::value_type> m) {
  auto det = ar.one();
  for (std::size_t col = 0; col < m.n; ++col) {
    std::size_t pivot = col;
    while (pivot < m.n && ar.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.n) return ar.zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < m.n; ++c) std::swap(m(pivot, c), m(col, c));
      det = ar.sub(ar.zero(), det);
    }
    det = ar.mul(det, m(col, col));
    const auto pinv = ar.inv(m(col, col));
    for (std::size_t r = col + 1; r < m.n; ++r) {
      const auto f = ar.mul(m(r, col), pinv);
      if (ar.is_zero(f)) continue;
      for (std::size_t c = col; c < m.n; ++c) m(r, c) = ar.sub(m(r, c), ar.mul(f, m(col, c)));
    }
  }
  return det;
}

namespace detail {

template <class Arith>
using Poly = std::vector<typename Arith::value_type>;

template <class Arith>
Poly<Arith> poly_mul(const Arith& ar, const Poly<Arith>& a, const Poly<Arith>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Arith> out(a.size() + b.size() - 1, ar.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ar.add(out[i + j], ar.mul(a[i], b[j]));
  }
  return out;
}

template <class Arith>
void poly_acc(const Arith& ar, Poly<Arith>& acc, const Poly<Arith>& term, bool negate) {
  if (acc.size() < term.size()) acc.resize(term.size(), ar.zero());
  for (std::size_t i = 0; i < term.size(); ++i) acc[i] = negate ? ar.sub(acc[i], term[i]) : ar.add(acc[i], term[i]);
}

// Laplace expansion along the first remaining row.
template <class Arith>
Poly<Arith> poly_det(const Arith& ar, const std::vector<Poly<Arith>>& m, std::size_t n, std::vector<std::size_t>& cols,
                     std::size_t row) {
  if (row == n) return {ar.one()};
  Poly<Arith> acc;
  bool negate = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto c = cols[k];
    const auto& entry = m[row * n + c];
    if (!entry.empty()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      auto minor = poly_det(ar, m, n, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      poly_acc(ar, acc, poly_mul(ar, entry, minor), negate);
    }
    negate = !negate;
  }
  return acc;
}

}  // namespace detail

/// det(xI - A), coefficients low-to-high (monic, degree n).
template <class Arith>
std::vector<typename Arith::value_type> char_poly(const Arith& ar, const Matrix<typename Arith::value_type>& a) {
  using P = detail::Poly<Arith>;
  std::vector<P> m(a.n * a.n);
  for (std::size_t r = 0; r < a.n; ++r) {
    for (std::size_t c = 0; c < a.n; ++c) {
      auto neg = ar.sub(ar.zero(), a(r, c));
      if (r == c) {
        m[r * a.n + c] = {neg, ar.one()};
      } else if (!ar.is_zero(neg)) {
        m[r * a.n + c] = {neg};
      }
    }
  }
  std::vector<std::size_t> cols(a.n);
  for (std::size_t i = 0; i < a.n; ++i) cols[i] = i;
  auto p = detail::poly_det(ar, m, a.n, cols, 0);
  p.resize(a.n + 1, ar.zero());
  return p;
}

/// Basis of { v : M v = 0 }, from the reduced row echelon form.
template <class Arith>
std::vector<std::vector<typename Arith::value_type>> nullspace(const Arith& ar, Matrix<typename Arith::value_type> m) {
  const auto n = m.n;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && ar.is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(row, c));
    const auto pinv = ar.inv(m(row, col));
    for (std::size_t c = 0; c < n; ++c) m(row, c) = ar.mul(m(row, c), pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || ar.is_zero(m(r, col))) continue;
      const auto f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) m(r, c) = ar.sub(m(r, c), ar.mul(f, m(row, c)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename Arith::value_type>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<typename Arith::value_type> v(n, ar.zero());
    v[free_col] = ar.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = ar.sub(ar.zero(), m(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace singer
