#include "circperm/binary_word.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace circperm {

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word may only contain 0 and 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  const std::string_view s = text;
  auto trimmed = s.find_first_not_of(" \t");
  if (trimmed == std::string_view::npos || s.substr(trimmed) == "e" || s.substr(trimmed) == "ε") return {};
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c != '0' && c != '1') throw std::invalid_argument("bad character in binary word '" + std::string(text) + "'");
    ++i;
    const long rep = detail::read_exponent(s, i);
    if (rep < 0) throw std::invalid_argument("missing exponent in '" + std::string(text) + "'");
    out.append(static_cast<std::size_t>(rep), c);
  }
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::from_runs(int first_bit, const std::vector<int>& runs) {
  std::string s;
  int bit = first_bit;
  for (int r : runs) {
    if (r < 0) throw std::invalid_argument("negative run length");
    s.append(static_cast<std::size_t>(r), static_cast<char>('0' + bit));
    bit ^= 1;
  }
  return BinaryWord(std::move(s));
}

BinaryWord BinaryWord::repeat(int bit, int count) {
  return BinaryWord(std::string(static_cast<std::size_t>(std::max(count, 0)), static_cast<char>('0' + bit)));
}

BinaryWord BinaryWord::alternating(int length) {
  std::string s;
  for (int i = 0; i < length; ++i) s += static_cast<char>('0' + (i & 1));
  return BinaryWord(std::move(s));
}

std::vector<int> BinaryWord::run_lengths() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i == 0 || bits_[i] != bits_[i - 1]) out.push_back(0);
    ++out.back();
  }
  return out;
}

int BinaryWord::run_count() const {
  int r = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) r += (i == 0 || bits_[i] != bits_[i - 1]);
  return r;
}

int BinaryWord::count(int bit) const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), static_cast<char>('0' + bit)));
}

BinaryWord BinaryWord::complement() const {
  std::string s = bits_;
  for (char& c : s) c = c == '0' ? '1' : '0';
  return BinaryWord(std::move(s));
}

BinaryWord BinaryWord::reversed() const { return BinaryWord(std::string(bits_.rbegin(), bits_.rend())); }

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const { return BinaryWord(bits_.substr(pos, len)); }

std::string BinaryWord::to_compact() const {
  if (bits_.empty()) return "e";
  std::string s;
  int bit = first_bit();
  for (int r : run_lengths()) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('0' + bit);
    if (r > 1) s += "^" + std::to_string(r);
    bit ^= 1;
  }
  return s;
}

bool is_subsequence(const BinaryWord& w, const BinaryWord& p) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < p.size(); ++i) {
    if (w.bits()[i] == p.bits()[j]) ++j;
  }
  return j == p.size();
}

BigInt count_words_avoiding(int length, const std::vector<BinaryWord>& patterns, const WordFilter& filter) {
  if (length < 0) return 0;
  for (const auto& p : patterns) {
    if (p.empty()) return 0;
  }
  const int cap = std::max(filter.min_runs, filter.max_runs + 1);
  auto accepts_runs = [&](int runs) {
    return runs >= filter.min_runs && (filter.max_runs < 0 || runs <= filter.max_runs);
  };
  if (length == 0) return (filter.first_bit < 0 && accepts_runs(0)) ? 1 : 0;

  // state: [progress per pattern..., last bit, capped run count]
  using State = std::vector<int>;
  std::map<State, BigInt> cur;
  const std::size_t k = patterns.size();
  for (int b = 0; b <= 1; ++b) {
    if (filter.first_bit >= 0 && b != filter.first_bit) continue;
    State s(k + 2);
    bool dead = false;
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = patterns[i][0] == b ? 1 : 0;
      dead |= s[i] == static_cast<int>(patterns[i].size());
    }
    if (dead) continue;
    s[k] = b;
    s[k + 1] = std::min(1, cap);
    cur[s] += 1;
  }
  for (int pos = 1; pos < length; ++pos) {
    std::map<State, BigInt> next;
    for (const auto& [s, ways] : cur) {
      for (int b = 0; b <= 1; ++b) {
        State t = s;
        bool dead = false;
        for (std::size_t i = 0; i < k; ++i) {
          if (t[i] < static_cast<int>(patterns[i].size()) && patterns[i][t[i]] == b) ++t[i];
          dead |= t[i] == static_cast<int>(patterns[i].size());
        }
        if (dead) continue;
        if (b != s[k]) t[k + 1] = std::min(s[k + 1] + 1, cap);
        t[k] = b;
        if (filter.max_runs >= 0 && t[k + 1] > filter.max_runs) continue;
        next[t] += ways;
      }
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [s, ways] : cur) {
    if (accepts_runs(s[k + 1])) total += ways;
  }
  return total;
}

std::vector<BinaryWord> all_words(int length) {
  std::vector<BinaryWord> out;
  if (length < 0 || length > 30) throw std::invalid_argument("all_words: length out of range");
  for (unsigned long long m = 0; m < (1ull << length); ++m) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) {
      if (m >> (length - 1 - i) & 1ull) s[i] = '1';
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

}  // namespace circperm
