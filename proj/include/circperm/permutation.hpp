#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"

namespace circperm {

class LinearPermutation {
 public:
  LinearPermutation() = default;
  // Throws std::invalid_argument unless word is a permutation of 1..n, n >= 1.
  explicit LinearPermutation(std::vector<int> word);

  static LinearPermutation identity(int n);
  // Accepts "2413", "[2413]" or space separated values ("8 9 10 1 ...").
  static LinearPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator[](std::size_t i) const { return word_[i]; }
  const std::vector<int>& word() const { return word_; }

  LinearPermutation inverse() const;
  std::string to_string() const;

  friend auto operator<=>(const LinearPermutation&, const LinearPermutation&) = default;

 private:
  std::vector<int> word_;
};

// A permutation up to rotation, stored as the rotation that starts with 1.
class CircularPermutation {
 public:
  CircularPermutation() = default;
  // Any rotation is accepted; the canonical rotation is stored.
  explicit CircularPermutation(const LinearPermutation& p);
  explicit CircularPermutation(std::vector<int> word);

  static CircularPermutation identity(int n);
  static CircularPermutation parse(std::string_view text);

  int size() const { return linear_.size(); }
  int operator[](std::size_t i) const { return linear_[i]; }
  const std::vector<int>& word() const { return linear_.word(); }
  const LinearPermutation& linear() const { return linear_; }

  // The rotation whose last entry is n.
  std::vector<int> rotation_ending_with_max() const;
  std::vector<int> rotation(int start) const;

  // "[1342]", or "[1 3 10 2 ...]" once a value has two digits.
  std::string to_string() const;

  friend auto operator<=>(const CircularPermutation&, const CircularPermutation&) = default;

 private:
  LinearPermutation linear_;
};

CircularPermutation canonicalize(const std::vector<int>& word);

bool contains_linear(const LinearPermutation& sigma, const LinearPermutation& pi);
bool contains_circular(const CircularPermutation& sigma, const CircularPermutation& pi);

CircularPermutation reverse(const CircularPermutation& sigma);
CircularPermutation complement(const CircularPermutation& sigma);
CircularPermutation reverse_complement(const CircularPermutation& sigma);

// 1-based positions i with sigma_i > sigma_{i+1}, indices taken mod n.
// The size-1 permutation has no cyclic descents.
std::vector<int> cyclic_descent_set(const CircularPermutation& sigma);
int cdes(const CircularPermutation& sigma);

// Longest increasing subsequence over all rotations.
int circular_lis(const CircularPermutation& sigma);

// A set of circular patterns kept in reduced form: sorted, deduplicated,
// and with every member that contains another member removed.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<CircularPermutation> patterns);
  // Comma separated list of patterns, e.g. "1342,12345" or "[1324],[15234]".
  static PatternSet parse(std::string_view text);

  const std::vector<CircularPermutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  bool avoided_by(const CircularPermutation& sigma) const;
  // Stable textual key, e.g. "1342,12345".
  std::string key() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<CircularPermutation> patterns_;
};

// Canonical circular permutations of size n in lexicographic order.
void for_each_circular(int n, const std::function<void(const CircularPermutation&)>& visit);
std::vector<CircularPermutation> enumerate_circular(int n);
std::vector<CircularPermutation> avoiders(int n, const PatternSet& ps);

// Exhaustive counts; the scan is split across hardware threads.
BigInt avoid_count_oracle(int n, const PatternSet& ps);
// Coefficient j is the number of avoiders with j cyclic descents.
std::vector<BigInt> descent_polynomial_oracle(int n, const PatternSet& ps);

}  // namespace circperm
