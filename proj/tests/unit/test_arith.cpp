#include <gtest/gtest.h>

#include "generators.hpp"
#include "intpts/arith.hpp"
#include "intpts/error.hpp"

using namespace intpts;

TEST(Arith, Valuations) {
  EXPECT_EQ(valuation(BigInt(40), BigInt(2)), 3u);
  EXPECT_EQ(valuation(BigInt(-81), BigInt(3)), 4u);
  EXPECT_EQ(valuation(BigInt(7), BigInt(5)), 0u);
  EXPECT_EQ(valuation(Rational(3, 8), BigInt(2)), -3);
  EXPECT_EQ(valuation(Rational(50, 3), BigInt(5)), 2);
}

TEST(Arith, FactorSmallAndRho) {
  Factorization f = factor(BigInt(-360));
  EXPECT_EQ(f, (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factor(BigInt(1)).empty());

  BigInt semi = BigInt(1000000007) * BigInt(998244353);
  Factorization g = factor(semi);
  EXPECT_EQ(g, (Factorization{{BigInt(998244353), 1}, {BigInt(1000000007), 1}}));
}

TEST(Arith, FactorProductProperty) {
  fuzz::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    BigInt n = BigInt(gen.integer(1, 1'000'000'000)) * BigInt(gen.integer(1, 1'000'000));
    BigInt back = 1;
    for (const auto& [p, e] : factor(n)) {
      EXPECT_TRUE(is_prime(p));
      back *= ipow(p, e);
    }
    EXPECT_EQ(back, n);
  }
}

TEST(Arith, StripAndDivisors) {
  EXPECT_EQ(strip_primes(BigInt(360), {2, 3}), 5);
  EXPECT_EQ(strip_primes(BigInt(-49), {7}), 1);
  std::vector<BigInt> want{1, 2, 3, 4, 6, 12};
  EXPECT_EQ(divisors(factor(BigInt(12))), want);
  EXPECT_EQ(divisors({}), std::vector<BigInt>{1});
}

TEST(Arith, OrdersAndRoots) {
  EXPECT_EQ(multiplicative_order(BigInt(2), BigInt(7)), 3);
  EXPECT_EQ(multiplicative_order(BigInt(3), BigInt(1)), 1);
  Rational r;
  ASSERT_TRUE(rational_sqrt(Rational(9, 4), r));
  EXPECT_EQ(r, Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
  EXPECT_FALSE(rational_sqrt(Rational(-4), r));
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
  EXPECT_EQ(ipow(BigInt(-2), 5), -32);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
}

TEST(Arith, ErrorNames) {
  EXPECT_EQ(to_string(ErrorCode::UnitsFinite), "UnitsFinite");
  Error e(ErrorCode::OnSubscheme, "x");
  EXPECT_EQ(e.code(), ErrorCode::OnSubscheme);
}
