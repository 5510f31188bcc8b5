#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "circperm/bigint.hpp"

namespace circperm {

// Power series with exact integer coefficients, truncated after t^order.
//
// All arithmetic is exact.  Division is supported whenever the divisor
// has constant term +1 or -1, which covers every rational generating
// function of the form P(t)/Q(t) with Q(0) = 1 used in this library.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients);

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
  static TruncatedSeries constant(std::size_t order, const BigInt& c);
  // c * t^k
  static TruncatedSeries monomial(std::size_t order, const BigInt& c, std::size_t k);
  static TruncatedSeries polynomial(std::size_t order, std::initializer_list<long long> coeffs);
  // t/(1-t), the building block for a non-empty run of letters
  static TruncatedSeries t_over_one_minus_t(std::size_t order);
  // 1/(1 - c t^k)
  static TruncatedSeries geometric(std::size_t order, const BigInt& c, std::size_t k = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigInt& c);
  TruncatedSeries& operator/=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& c) { return a *= c; }
  friend TruncatedSeries operator*(const BigInt& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator/(TruncatedSeries a, const TruncatedSeries& b) { return a /= b; }
  TruncatedSeries operator-() const;

  // Multiplicative inverse; throws std::domain_error unless the constant
  // term is +1 or -1.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned e) const;
  // Multiply by t^k.
  TruncatedSeries shifted(std::size_t k) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  void require_same_order(const TruncatedSeries& o) const;
  std::vector<BigInt> coeffs_;
};

}  // namespace circperm
