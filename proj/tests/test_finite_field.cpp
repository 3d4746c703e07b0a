#include <gtest/gtest.h>

#include <numeric>

#include "singer/errors.hpp"
#include "singer/finite_field.hpp"
#include "oracle_values.hpp"

using namespace singer;

namespace {

std::vector<std::uint32_t> modulus(std::uint64_t p, unsigned n) { return Field::make(p, n).modulus(); }

// Trial division of f (low-to-high) by x - a over GF(p); true if the remainder is zero.
bool divisible_by_linear(const Field& f, const FieldPoly& poly, FieldElement a) {
  FieldElement carry = f.zero();
  for (std::size_t k = poly.size(); k-- > 0;) carry = f.add(f.mul(carry, a), poly[k]);
  return carry == f.zero();
}

}  // namespace

TEST(Primes, SmallCases) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
  EXPECT_EQ(prime_power(9), std::make_pair(std::uint64_t{3}, 2u));
  EXPECT_EQ(prime_power(64), std::make_pair(std::uint64_t{2}, 6u));
  EXPECT_FALSE(prime_power(6).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
}

TEST(FieldMake, ModulusExamples) {
  EXPECT_EQ(modulus(2, 1), (std::vector<std::uint32_t>{0, 1}));     // x
  EXPECT_EQ(modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));  // x^2+x+1
  EXPECT_EQ(modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));  // x^2+1
  // (c0, c1, c2) = (1, 0, 1) precedes (1, 1, 0): x^3+x^2+1
  EXPECT_EQ(modulus(2, 3), (std::vector<std::uint32_t>{1, 0, 1, 1}));
}

TEST(FieldMake, Errors) {
  EXPECT_THROW(Field::make(4, 1), DomainError);
  EXPECT_THROW(Field::make(2, 0), DomainError);
  EXPECT_THROW(Field::make(2, 21), RangeError);
  EXPECT_NO_THROW(Field::make(2, 20));
}

TEST(FieldOps, Examples) {
  auto f4 = Field::make(2, 2);
  const auto w = f4.element(2);  // x
  EXPECT_EQ(f4.format(f4.mul(w, w)), "x+1");
  auto f3 = Field::make(3, 1);
  EXPECT_EQ(f3.inv(f3.element(2)), f3.element(2));
  EXPECT_THROW(f3.inv(f3.zero()), DomainError);
  for (std::uint32_t v = 0; v < f4.size(); ++v) EXPECT_EQ(f4.mul(f4.element(v), f4.one()), f4.element(v));
}

TEST(FieldOps, Primitive) {
  EXPECT_EQ(Field::make(7, 1).primitive().value, 3u);
  EXPECT_EQ(Field::make(2, 2).primitive().value, 2u);
  EXPECT_EQ(Field::make(2, 1).primitive().value, 1u);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(FieldAxioms, Exhaustive) {
  const auto [p, n] = GetParam();
  const auto F = Field::make(p, n);
  const auto q = F.size();
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto x = F.element(a);
    EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
    if (a != 0) {
      EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
      EXPECT_EQ(F.exp(F.log(x)), x);
      EXPECT_EQ((q - 1) % F.multiplicative_order(x), 0u);
    }
    EXPECT_EQ(F.pow(x, q), x);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto y = F.element(b);
      EXPECT_EQ(F.add(x, y), F.add(y, x));
      EXPECT_EQ(F.mul(x, y), F.mul(y, x));
      EXPECT_EQ(F.sub(F.add(x, y), y), x);
      // Frobenius is additive and multiplicative
      EXPECT_EQ(F.frobenius(F.add(x, y)), F.add(F.frobenius(x), F.frobenius(y)));
      EXPECT_EQ(F.frobenius(F.mul(x, y)), F.mul(F.frobenius(x), F.frobenius(y)));
    }
  }
  EXPECT_EQ(F.multiplicative_order(F.primitive()), q - 1);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::make_pair(2ULL, 1u), std::make_pair(2ULL, 2u), std::make_pair(2ULL, 3u),
                                           std::make_pair(3ULL, 2u), std::make_pair(5ULL, 2u),
                                           std::make_pair(7ULL, 2u), std::make_pair(2ULL, 6u),
                                           std::make_pair(3ULL, 4u), std::make_pair(11ULL, 1u)));

TEST(Frobenius, BijectiveUpTo4096) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 12}, {3, 7}, {5, 5}, {7, 4}, {13, 3}, {31, 2}, {61, 2}, {4093, 1}}) {
    const auto F = Field::make(p, n);
    std::vector<bool> hit(F.size(), false);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      const auto fa = F.frobenius(F.element(a));
      ASSERT_FALSE(hit[fa.value]) << p << "^" << n;
      hit[fa.value] = true;
    }
    // sampled homomorphism check on the larger fields
    for (std::uint32_t a = 1; a < F.size(); a += 37) {
      for (std::uint32_t b = 0; b < F.size(); b += 101) {
        const auto x = F.element(a), y = F.element(b);
        ASSERT_EQ(F.frobenius(F.mul(x, y)), F.mul(F.frobenius(x), F.frobenius(y)));
        ASSERT_EQ(F.frobenius(F.add(x, y)), F.add(F.frobenius(x), F.frobenius(y)));
      }
    }
    EXPECT_EQ(F.frobenius(F.primitive(), n), F.primitive());
  }
}

TEST(Roots, Examples) {
  auto f5 = Field::make(5, 1);
  // x^2 - x - 1 has the double root 3 over GF(5)
  FieldPoly f{f5.from_int(-1), f5.from_int(-1), f5.one()};
  EXPECT_EQ(roots_in_field(f5, f), std::vector<FieldElement>{f5.element(3)});
  auto f3 = Field::make(3, 1);
  EXPECT_TRUE(roots_in_field(f3, {f3.one(), f3.zero(), f3.one()}).empty());
  auto f9 = Field::make(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) {
    EXPECT_EQ(roots_in_field(f9, {f9.neg(f9.element(a)), f9.one()}), std::vector<FieldElement>{f9.element(a)});
  }
  EXPECT_THROW(roots_in_field(f9, {f9.zero(), f9.zero()}), DomainError);
}

TEST(Roots, AgreeWithTrialDivision) {
  // every monic cubic over GF(5) and GF(4)
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {2, 2}}) {
    const auto F = Field::make(p, n);
    const auto q = F.size();
    for (std::uint32_t c = 0; c < q * q * q; ++c) {
      FieldPoly f{F.element(c % q), F.element((c / q) % q), F.element(c / (q * q)), F.one()};
      const auto roots = roots_in_field(F, f);
      std::vector<FieldElement> expect;
      for (std::uint32_t a = 0; a < q; ++a) {
        if (divisible_by_linear(F, f, F.element(a))) expect.push_back(F.element(a));
      }
      ASSERT_EQ(roots, expect);
    }
  }
}

TEST(Roots, Rational) {
  // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
  EXPECT_EQ(rational_roots({Rational(1), Rational(-3), Rational(2)}),
            (std::vector<Rational>{Rational(1, 2), Rational(1)}));
  // x^3 - x = x(x-1)(x+1)
  EXPECT_EQ(rational_roots({Rational(0), Rational(-1), Rational(0), Rational(1)}),
            (std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}));
  EXPECT_TRUE(rational_roots({Rational(-2), Rational(0), Rational(1)}).empty());  // x^2 - 2
  EXPECT_EQ(rational_roots({Rational(-1, 3), Rational(1)}), std::vector<Rational>{Rational(1, 3)});
}

TEST(SubfieldEmbedding, PreservesOperations) {
  for (auto [p, i, j] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 1, 4}, {2, 2, 4}, {2, 2, 6}, {2, 3, 6}, {2, 4, 12}, {2, 6, 12}, {3, 1, 2}, {3, 2, 4}, {5, 1, 3},
           {3, 1, 7}, {7, 2, 4}}) {
    const auto small = Field::make(p, i);
    const auto big = Field::make(p, j);
    const auto phi = subfield_embedding(small, big);
    ASSERT_EQ(phi.size(), small.size());
    for (std::uint32_t a = 0; a < small.size(); ++a) {
      for (std::uint32_t b = 0; b < small.size(); ++b) {
        const auto x = small.element(a), y = small.element(b);
        ASSERT_EQ(phi[small.add(x, y).value], big.add(phi[a], phi[b]));
        ASSERT_EQ(phi[small.mul(x, y).value], big.mul(phi[a], phi[b]));
      }
    }
  }
  EXPECT_THROW(subfield_embedding(Field::make(2, 2), Field::make(2, 3)), PreconditionError);
}

TEST(Divisibility, Examples) {
  EXPECT_TRUE(singer_divisibility(2, 1, 2));
  EXPECT_TRUE(singer_divisibility(2, 1, 4));
  EXPECT_FALSE(singer_divisibility(2, 1, 3));
  EXPECT_THROW(singer_divisibility(2, 2, 3), PreconditionError);
  EXPECT_THROW(singer_divisibility(4, 1, 2), DomainError);
}

TEST(Divisibility, AssertedDirection) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t i = 1; i <= 12; ++i) {
      for (std::uint64_t j = i; j <= 12; j += i) {
        if (std::gcd(j / i, std::uint64_t{3}) == 1) EXPECT_TRUE(singer_divisibility(p, i, j)) << p << " " << i << " " << j;
      }
    }
  }
}

TEST(Divisibility, CountsMatchOracle) {
  for (const auto& [p, expected] : oracle::kLemmaDividing) {
    std::size_t dividing = 0;
    for (std::uint64_t i = 1; i <= 12; ++i) {
      for (std::uint64_t j = i; j <= 12; j += i) dividing += singer_divisibility(p, i, j);
    }
    EXPECT_EQ(dividing, expected) << p;
  }
}
