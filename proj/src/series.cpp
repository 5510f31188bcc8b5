#include "circperm/series.hpp"

#include <sstream>
#include <stdexcept>

namespace circperm {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    if (n == -1 && k == 0) return 1;
    if (n == -1) return 0;
    throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt fibonacci(std::int64_t n) {
  if (n < 0) return 0;
  BigInt a = 1, b = 1;  // F(0), F(1)
  for (std::int64_t i = 1; i <= n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const BigInt& c) {
  return monomial(order, c, 0);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, const BigInt& c, std::size_t k) {
  TruncatedSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::size_t order, std::initializer_list<long long> coeffs) {
  TruncatedSeries s(order);
  std::size_t i = 0;
  for (long long c : coeffs) {
    if (i > order) break;
    s.coeffs_[i++] = c;
  }
  return s;
}

TruncatedSeries TruncatedSeries::t_over_one_minus_t(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 1; i <= order; ++i) s.coeffs_[i] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order, const BigInt& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("geometric: k must be positive");
  TruncatedSeries s(order);
  BigInt p = 1;
  for (std::size_t i = 0; i <= order; i += k) {
    s.coeffs_[i] = p;
    p *= c;
  }
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
  if (o.order() != order()) throw std::invalid_argument("TruncatedSeries: order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_same_order(o);
  std::vector<BigInt> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      if (o.coeffs_[j] != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator/=(const TruncatedSeries& o) {
  return *this *= o.inverse();
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error("TruncatedSeries::inverse: constant term must be +1 or -1");
  }
  TruncatedSeries r(order());
  r.coeffs_[0] = c0;  // 1/c0 == c0 for c0 in {1, -1}
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = -acc * c0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = constant(order(), 1);
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries r(order());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i];
  }
  return os.str();
}

}  // namespace circperm
