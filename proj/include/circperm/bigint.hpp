#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace circperm {

// Exact integer used for every count and series coefficient.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with the usual combinatorial conventions:
// C(n, k) = 0 for k < 0 or k > n >= 0, and C(-1, 0) = 1 (compositions
// of 0 into 0 parts).  Other negative n are rejected.
BigInt binomial(std::int64_t n, std::int64_t k);

// Fibonacci numbers indexed so that F(0) = F(1) = 1, i.e. F(n) is the
// number of compositions of n into 1s and 2s.
BigInt fibonacci(std::int64_t n);

BigInt pow2(std::int64_t e);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace circperm
