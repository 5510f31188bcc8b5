#include "circperm/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace circperm {

namespace {

// Bounds for matching pattern position j: the chosen text value must lie
// strictly between the values chosen for positions lo[j] and hi[j].
struct PatternPlan {
  explicit PatternPlan(const std::vector<int>& p) : k(static_cast<int>(p.size())), lo(k, -1), hi(k, -1) {
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        if (p[i] < p[j] && (lo[j] < 0 || p[i] > p[lo[j]])) lo[j] = i;
        if (p[i] > p[j] && (hi[j] < 0 || p[i] < p[hi[j]])) hi[j] = i;
      }
    }
  }
  int k;
  std::vector<int> lo, hi;
};

bool match_from(const PatternPlan& plan, const int* text, int len, int j, int pos, int* chosen) {
  if (j == plan.k) return true;
  const int lo = plan.lo[j] >= 0 ? chosen[plan.lo[j]] : 0;
  const int hi = plan.hi[j] >= 0 ? chosen[plan.hi[j]] : INT32_MAX;
  for (int i = pos; i <= len - (plan.k - j); ++i) {
    const int v = text[i];
    if (v <= lo || v >= hi) continue;
    chosen[j] = v;
    if (match_from(plan, text, len, j + 1, i + 1, chosen)) return true;
  }
  return false;
}

bool circular_match(const std::vector<int>& sigma, const PatternPlan& plan) {
  const int n = static_cast<int>(sigma.size());
  if (plan.k > n) return false;
  std::vector<int> dbl(2 * n);
  for (int i = 0; i < n; ++i) dbl[i] = dbl[i + n] = sigma[i];
  std::vector<int> chosen(plan.k);
  // A canonical pattern starts with its minimum, so pin it to the first
  // entry of each rotation.
  for (int s = 0; s < n; ++s) {
    chosen[0] = dbl[s];
    if (match_from(plan, dbl.data() + s, n, 1, 1, chosen.data())) return true;
  }
  return false;
}

std::vector<int> parse_values(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty permutation");
  s = s.substr(first, last - first + 1);
  if (s.front() == '[' || s.front() == '(') {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  if (s.find_first_of(" \t") == std::string::npos) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
  } else {
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("bad token '" + tok + "' in permutation");
      }
      out.push_back(std::stoi(tok));
    }
  }
  return out;
}

std::vector<int> rotate_to_one(std::vector<int> w) {
  auto it = std::find(w.begin(), w.end(), 1);
  std::rotate(w.begin(), it, w.end());
  return w;
}

}  // namespace

LinearPermutation::LinearPermutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

LinearPermutation LinearPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return LinearPermutation(std::move(w));
}

LinearPermutation LinearPermutation::parse(std::string_view text) {
  return LinearPermutation(parse_values(text));
}

LinearPermutation LinearPermutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
  return LinearPermutation(std::move(inv));
}

std::string LinearPermutation::to_string() const {
  std::string s;
  const bool spaced = size() >= 10;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (spaced && i) s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

CircularPermutation::CircularPermutation(const LinearPermutation& p)
    : linear_(rotate_to_one(p.word())) {}

CircularPermutation::CircularPermutation(std::vector<int> word)
    : CircularPermutation(LinearPermutation(std::move(word))) {}

CircularPermutation CircularPermutation::identity(int n) {
  return CircularPermutation(LinearPermutation::identity(n));
}

CircularPermutation CircularPermutation::parse(std::string_view text) {
  return CircularPermutation(LinearPermutation::parse(text));
}

std::vector<int> CircularPermutation::rotation(int start) const {
  std::vector<int> w = word();
  std::rotate(w.begin(), w.begin() + (start % size()), w.end());
  return w;
}

std::vector<int> CircularPermutation::rotation_ending_with_max() const {
  const auto& w = word();
  const int pos = static_cast<int>(std::find(w.begin(), w.end(), size()) - w.begin());
  return rotation((pos + 1) % size());
}

std::string CircularPermutation::to_string() const {
  return "[" + linear_.to_string() + "]";
}

CircularPermutation canonicalize(const std::vector<int>& word) { return CircularPermutation(word); }

bool contains_linear(const LinearPermutation& sigma, const LinearPermutation& pi) {
  if (pi.size() > sigma.size()) return false;
  PatternPlan plan(pi.word());
  std::vector<int> chosen(plan.k);
  return match_from(plan, sigma.word().data(), sigma.size(), 0, 0, chosen.data());
}

bool contains_circular(const CircularPermutation& sigma, const CircularPermutation& pi) {
  if (pi.size() > sigma.size()) return false;
  return circular_match(sigma.word(), PatternPlan(pi.word()));
}

CircularPermutation reverse(const CircularPermutation& sigma) {
  std::vector<int> w(sigma.word().rbegin(), sigma.word().rend());
  return CircularPermutation(std::move(w));
}

CircularPermutation complement(const CircularPermutation& sigma) {
  std::vector<int> w = sigma.word();
  for (int& v : w) v = sigma.size() + 1 - v;
  return CircularPermutation(std::move(w));
}

CircularPermutation reverse_complement(const CircularPermutation& sigma) {
  return complement(reverse(sigma));
}

std::vector<int> cyclic_descent_set(const CircularPermutation& sigma) {
  std::vector<int> out;
  const int n = sigma.size();
  if (n < 2) return out;
  for (int i = 0; i < n; ++i) {
    if (sigma[i] > sigma[(i + 1) % n]) out.push_back(i + 1);
  }
  return out;
}

int cdes(const CircularPermutation& sigma) {
  return static_cast<int>(cyclic_descent_set(sigma).size());
}

int circular_lis(const CircularPermutation& sigma) {
  const int n = sigma.size();
  int best = 0;
  std::vector<int> tails;
  for (int s = 0; s < n; ++s) {
    tails.clear();
    for (int i = 0; i < n; ++i) {
      const int v = sigma[(s + i) % n];
      auto it = std::lower_bound(tails.begin(), tails.end(), v);
      if (it == tails.end()) tails.push_back(v);
      else *it = v;
    }
    best = std::max(best, static_cast<int>(tails.size()));
  }
  return best;
}

PatternSet::PatternSet(std::vector<CircularPermutation> patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  for (const auto& p : patterns) {
    const bool redundant = std::any_of(patterns_.begin(), patterns_.end(),
                                       [&](const CircularPermutation& q) { return contains_circular(p, q); });
    if (!redundant) patterns_.push_back(p);
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<CircularPermutation> ps;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    if (tok.find_first_not_of(" \t") != std::string::npos) ps.push_back(CircularPermutation::parse(tok));
    start = comma + 1;
  }
  if (ps.empty()) throw std::invalid_argument("no patterns given");
  return PatternSet(std::move(ps));
}

bool PatternSet::avoided_by(const CircularPermutation& sigma) const {
  return std::none_of(patterns_.begin(), patterns_.end(),
                      [&](const CircularPermutation& p) { return contains_circular(sigma, p); });
}

std::string PatternSet::key() const {
  std::string k;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) k += ',';
    const auto& w = patterns_[i].word();
    if (patterns_[i].size() >= 10) {
      k += patterns_[i].to_string();
    } else {
      for (int v : w) k += static_cast<char>('0' + v);
    }
  }
  return k;
}

void for_each_circular(int n, const std::function<void(const CircularPermutation&)>& visit) {
  if (n < 1) return;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(CircularPermutation(LinearPermutation(w)));
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

std::vector<CircularPermutation> enumerate_circular(int n) {
  std::vector<CircularPermutation> out;
  for_each_circular(n, [&](const CircularPermutation& c) { out.push_back(c); });
  return out;
}

std::vector<CircularPermutation> avoiders(int n, const PatternSet& ps) {
  std::vector<CircularPermutation> out;
  for_each_circular(n, [&](const CircularPermutation& c) {
    if (ps.avoided_by(c)) out.push_back(c);
  });
  return out;
}

namespace {

// Scans all canonical words of size n, split by the value in position 2,
// and tallies avoiders by cyclic descent count.
std::vector<BigInt> scan_by_descents(int n, const PatternSet& ps) {
  std::vector<BigInt> total(std::max(n, 1));
  if (n <= 2) {
    for_each_circular(n, [&](const CircularPermutation& c) {
      if (ps.avoided_by(c)) total[cdes(c)] += 1;
    });
    return total;
  }
  std::vector<PatternPlan> plans;
  for (const auto& p : ps.patterns()) plans.emplace_back(p.word());

  const int tasks = n - 1;  // second value ranges over 2..n
  std::vector<std::vector<long long>> partial(tasks, std::vector<long long>(n, 0));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < tasks;) {
      std::vector<int> w{1, t + 2};
      for (int v = 2; v <= n; ++v) {
        if (v != t + 2) w.push_back(v);
      }
      do {
        bool ok = true;
        for (const auto& plan : plans) {
          if (circular_match(w, plan)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        int d = 0;
        for (int i = 0; i < n; ++i) d += w[i] > w[(i + 1) % n];
        ++partial[t][d];
      } while (std::next_permutation(w.begin() + 2, w.end()));
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int nthreads = static_cast<int>(std::min<unsigned>(hw, tasks));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& row : partial) {
    for (int d = 0; d < n; ++d) total[d] += row[d];
  }
  return total;
}

}  // namespace

BigInt avoid_count_oracle(int n, const PatternSet& ps) {
  if (n < 1) return 0;
  BigInt sum = 0;
  for (const auto& c : scan_by_descents(n, ps)) sum += c;
  return sum;
}

std::vector<BigInt> descent_polynomial_oracle(int n, const PatternSet& ps) {
  if (n < 1) return {};
  return scan_by_descents(n, ps);
}

}  // namespace circperm
