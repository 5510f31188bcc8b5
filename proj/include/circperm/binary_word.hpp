#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"

namespace circperm {

class BinaryWord {
 public:
  BinaryWord() = default;
  // bits is a string over {'0','1'}.
  explicit BinaryWord(std::string bits);

  // Accepts plain bits ("0001011"), run notation ("0^3 1 0 1^2"),
  // superscript run notation ("0³101²") and "" or "e" for the empty word.
  static BinaryWord parse(std::string_view text);
  static BinaryWord from_runs(int first_bit, const std::vector<int>& runs);
  // B(n1, n2, ...) = 0^n1 1^n2 0^n3 ...
  static BinaryWord B(const std::vector<int>& runs) { return from_runs(0, runs); }
  static BinaryWord repeat(int bit, int count);
  // 0101... of the given length.
  static BinaryWord alternating(int length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }
  int first_bit() const { return bits_.empty() ? -1 : bits_[0] - '0'; }
  int last_bit() const { return bits_.empty() ? -1 : bits_.back() - '0'; }
  const std::string& bits() const { return bits_; }

  std::vector<int> run_lengths() const;
  int run_count() const;
  int count(int bit) const;

  BinaryWord complement() const;
  BinaryWord reversed() const;
  BinaryWord substr(std::size_t pos, std::size_t len = std::string::npos) const;
  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) { return BinaryWord(a.bits_ + b.bits_); }

  std::string to_string() const { return bits_; }
  // Run notation, e.g. "0^3 1 0 1^2"; the empty word prints as "e".
  std::string to_compact() const;

  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

// True when p is a (not necessarily contiguous) subsequence of w.
bool is_subsequence(const BinaryWord& w, const BinaryWord& p);

struct WordFilter {
  int first_bit = -1;  // -1: any
  int min_runs = 0;
  int max_runs = -1;   // -1: unbounded
};

// Number of binary words of the given length that satisfy the filter and
// contain none of the patterns as a subsequence.  Runs a DP whose state is
// the greedy match progress of every pattern plus the run statistics.
BigInt count_words_avoiding(int length, const std::vector<BinaryWord>& patterns, const WordFilter& filter = {});

// All words of a given length in lexicographic order (0 < 1).
std::vector<BinaryWord> all_words(int length);

}  // namespace circperm
