#include <gtest/gtest.h>

#include "circperm/series.hpp"

using circperm::BigInt;
using circperm::TruncatedSeries;

TEST(Series, GeometricAndInverse) {
  const auto g = TruncatedSeries::geometric(10, 2);
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(g[i], circperm::pow2(static_cast<long>(i)));
  const auto one_minus_2t = TruncatedSeries::polynomial(10, {1, -2});
  EXPECT_EQ(one_minus_2t.inverse(), g);
  EXPECT_EQ(g * one_minus_2t, TruncatedSeries::constant(10, 1));
}

TEST(Series, FibonacciFromRationalFunction) {
  // 1/(1-t-t^2) has coefficients F(n) with F(0) = F(1) = 1.
  const auto f = TruncatedSeries::polynomial(20, {1, -1, -1}).inverse();
  for (std::size_t i = 0; i <= 20; ++i) EXPECT_EQ(f[i], circperm::fibonacci(static_cast<long>(i)));
}

TEST(Series, TOverOneMinusTPowers) {
  // (t/(1-t))^k has coefficient C(n-1, k-1) at t^n.
  const auto y = TruncatedSeries::t_over_one_minus_t(15);
  const auto y3 = y.pow(3);
  for (std::size_t n = 0; n <= 15; ++n) EXPECT_EQ(y3[n], n == 0 ? BigInt(0) : circperm::binomial(static_cast<long>(n) - 1, 2));
}

TEST(Series, ShiftAndDivision) {
  const auto x = TruncatedSeries::monomial(8, 3, 2);
  EXPECT_EQ(x.shifted(3)[5], 3);
  EXPECT_EQ(x.shifted(7)[8], 0);
  const auto a = TruncatedSeries::polynomial(8, {1, 1});
  const auto b = TruncatedSeries::polynomial(8, {1, -1});
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(TruncatedSeries::polynomial(8, {2, 1}).inverse(), std::domain_error);
  EXPECT_EQ(TruncatedSeries::polynomial(3, {1, 2}).to_string(), "1 2 0 0");
}

TEST(Series, MismatchedOrdersRejected) {
  EXPECT_THROW(TruncatedSeries(3) + TruncatedSeries(4), std::invalid_argument);
}

TEST(BigIntHelpers, Binomial) {
  EXPECT_EQ(circperm::binomial(5, 2), 10);
  EXPECT_EQ(circperm::binomial(5, 7), 0);
  EXPECT_EQ(circperm::binomial(5, -1), 0);
  EXPECT_EQ(circperm::binomial(-1, 0), 1);
  EXPECT_EQ(circperm::binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(circperm::fibonacci(6), 13);
  EXPECT_EQ(circperm::fibonacci(-1), 0);
}
