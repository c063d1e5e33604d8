#include <gtest/gtest.h>

#include <random>

#include "qmh/laurent.hpp"
#include "qmh/modp.hpp"

namespace qmh {
namespace {

const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly qi = LaurentPoly::q_power(-1);

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), len(0, 4);
  std::vector<LaurentPoly::Term> t;
  for (int k = len(rng); k > 0; --k) t.emplace_back(e(rng), Rational(c(rng), 1 + (c(rng) + 5) % 3));
  return LaurentPoly::from_terms(t);
}

TEST(Laurent, ProductExamples) {
  EXPECT_EQ(lp_mul(qi - q, q), LaurentPoly(1) - q * q);
  EXPECT_TRUE(lp_mul(q + LaurentPoly(3), LaurentPoly()).is_zero());
  EXPECT_EQ(lp_mul(LaurentPoly(1) + q, LaurentPoly(1) - q), LaurentPoly(1) - q * q);
}

TEST(Laurent, CanonicalForm) {
  const LaurentPoly z = (q + qi) - (qi + q);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.term_count(), 0u);
  const LaurentPoly p = LaurentPoly::from_terms({{2, Rational(1)}, {2, Rational(-1)}, {0, Rational(3)}});
  EXPECT_EQ(p, LaurentPoly(3));
  EXPECT_EQ(q_inv_minus_q(), qi - q);
}

TEST(Laurent, TextForm) {
  EXPECT_EQ((q - qi).to_string(), "q - q^-1");
  EXPECT_EQ((-qi).to_string(), "-q^-1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((LaurentPoly(2) * q * q + LaurentPoly(Rational(1, 2))).to_string(), "2*q^2 + 1/2");
}

TEST(Laurent, EvalExamples) {
  EXPECT_EQ(lp_eval(q * q - LaurentPoly(1), Rational(2)), Rational(3));
  const LaurentPoly a = LaurentPoly::from_terms({{-2, Rational(3)}, {1, Rational(-7, 2)}, {5, Rational(4)}});
  EXPECT_EQ(lp_eval(a, Rational(1)), Rational(3) - Rational(7, 2) + Rational(4));
  EXPECT_EQ(lp_eval(qi, Rational(1, 2)), Rational(2));
  EXPECT_THROW(lp_eval(q, Rational(0)), std::domain_error);
}

TEST(Laurent, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  const PrimeField f(kMersenne61);
  for (int t = 0; t < 200; ++t) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    const Rational x(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1);
    EXPECT_EQ(lp_eval(a * b, x), lp_eval(a, x) * lp_eval(b, x));
    EXPECT_EQ(lp_eval(a + b, x), lp_eval(a, x) + lp_eval(b, x));
    const std::uint64_t q0 = rng() % (f.p() - 1) + 1;
    EXPECT_EQ(lp_eval(a * b, f, q0), f.mul(lp_eval(a, f, q0), lp_eval(b, f, q0)));
    EXPECT_EQ(lp_eval(a + b, f, q0), f.add(lp_eval(a, f, q0), lp_eval(b, f, q0)));
  }
}

TEST(Laurent, RingAxiomsRandomized) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Laurent, ExactDivision) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(q, LaurentPoly()), std::domain_error);
}

TEST(Laurent, Units) {
  EXPECT_TRUE(qi.is_unit());
  EXPECT_TRUE((LaurentPoly(-2) * q).is_unit());
  EXPECT_FALSE((q + LaurentPoly(1)).is_unit());
  EXPECT_EQ(q.shifted(-1), LaurentPoly(1));
  EXPECT_EQ((q - qi).min_exponent(), -1);
  EXPECT_EQ((q - qi).max_exponent(), 1);
}

TEST(PrimeField, Arithmetic) {
  for (std::uint64_t p : {kMersenne61, kPrime32}) {
    const PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 100; ++t) {
      const std::uint64_t a = rng() % (p - 1) + 1;
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.pow(a, -3), f.inv(f.mul(a, f.mul(a, a))));
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    }
    EXPECT_EQ(f.from_rational(Rational(1, 2)), f.inv(2));
    EXPECT_EQ(f.from_integer(mpz_class(-1)), p - 1);
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

}  // namespace
}  // namespace qmh
