#include "circperm/words1342.hpp"

#include <stdexcept>

namespace circperm::w1342 {

LinearPermutation sigma_of_word(const BinaryWord& w) {
  const int n = static_cast<int>(w.size()) + 1;
  std::vector<int> out;
  out.reserve(n);
  int lo = 1, hi = n;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[i] ? hi-- : lo++);
  out.push_back(lo);
  return LinearPermutation(std::move(out));
}

bool has_twin(const BinaryWord& w) { return !w.empty() && w.run_count() <= 2; }

bool is_exceptional(const BinaryWord& w) { return has_twin(w) && w.first_bit() == 0; }

bool is_canonical(const BinaryWord& w) { return !has_twin(w) || w.first_bit() == 0; }

BinaryWord canonical_word(const BinaryWord& w) {
  if (!has_twin(w) || w.first_bit() == 0) return w;
  // 1^{b+1} 0^a  ->  0^{a+1} 1^b
  const int ones = w.count(1);
  const int zeros = w.count(0);
  return BinaryWord::B({zeros + 1, ones - 1});
}

std::pair<BinaryWord, BinaryWord> exceptional_pair(const BinaryWord& w) {
  if (!has_twin(w)) throw std::invalid_argument("exceptional_pair: word has more than two runs");
  const BinaryWord p = canonical_word(w);
  const int a = p.count(0) - 1;
  const int b = p.count(1);
  return {p, BinaryWord::from_runs(1, {b + 1, a})};
}

BinaryWord word_of_perm(const CircularPermutation& sigma) {
  const int n = sigma.size();
  if (n == 1) return {};
  for (int s = 0; s < n; ++s) {
    std::string bits;
    int lo = 1, hi = n;
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) {
      const int v = sigma[(s + i) % n];
      if (v == lo) {
        bits += '0';
        ++lo;
      } else if (v == hi) {
        bits += '1';
        --hi;
      } else {
        ok = false;
      }
    }
    if (ok) return canonical_word(BinaryWord(std::move(bits)));
  }
  throw std::domain_error("word_of_perm: " + sigma.to_string() + " contains [1342]");
}

bool word_contains(const BinaryWord& w, const BinaryWord& p) {
  if (p.empty()) return true;
  if (!has_twin(p)) return is_subsequence(w, p);
  const auto [P, Q] = exceptional_pair(p);
  return is_subsequence(w, P) || is_subsequence(w, Q);
}

std::vector<BinaryWord> enumerate_av1342(int n) {
  std::vector<BinaryWord> out;
  if (n < 1) return out;
  for (auto& w : all_words(n - 1)) {
    if (is_canonical(w)) out.push_back(std::move(w));
  }
  return out;
}

BigInt count_pair_1342(int n, const BinaryWord& p) {
  if (n < 1) return 0;
  const int len = n - 1;
  std::vector<BinaryWord> forbidden;
  if (has_twin(p)) {
    const auto [P, Q] = exceptional_pair(p);
    forbidden = {P, Q};
  } else {
    forbidden = {p};
  }
  BigInt all = count_words_avoiding(len, forbidden);
  // Each exceptional class was counted twice above, once per twin.
  BigInt doubled = 0;
  for (int a = 1; a <= len; ++a) {
    if (!word_contains(BinaryWord::B({a, len - a}), p)) doubled += 1;
  }
  return all - doubled;
}

BigInt closed_iota_1342(int n, int k) {
  if (k < 1 || n - 1 < k) return count_pair_1342(n, BinaryWord::repeat(0, k));
  BigInt r = binomial(n - 2, k - 2) - (k - 1);
  for (int i = 0; i <= k - 2; ++i) r += binomial(n - 1, i);
  return r;
}

BigInt closed_nonexceptional_1342(int n, int k) {
  if (k < 3) throw std::invalid_argument("closed_nonexceptional_1342: non-exceptional words have length >= 3");
  if (n - 1 < k) return count_pair_1342(n, BinaryWord::alternating(k));
  BigInt r = 1;
  for (int i = 2; i <= k - 1; ++i) r += binomial(n - 1, i);
  return r;
}

namespace {

TruncatedSeries binomial_poly(std::size_t order, int top_lo, int count, int lower, bool lower_is_i) {
  // sum_{i=0}^{count} C(i + top_lo, lower_is_i ? i : lower) t^i
  TruncatedSeries s(order);
  for (int i = 0; i <= count && static_cast<std::size_t>(i) <= order; ++i) {
    s[i] = binomial(i + top_lo, lower_is_i ? i : lower);
  }
  return s;
}

}  // namespace

TruncatedSeries gf_exceptional_1342(int a, int b, int order) {
  if (a < 0 || b < 0 || order < 1) throw std::invalid_argument("gf_exceptional_1342: need a, b >= 0 and order >= 1");
  const std::size_t N = static_cast<std::size_t>(order);
  const TruncatedSeries one = TruncatedSeries::constant(N, 1);
  const TruncatedSeries inv1mt = TruncatedSeries::geometric(N, 1);  // 1/(1-t)
  const TruncatedSeries y = TruncatedSeries::t_over_one_minus_t(N);

  // Words with at most b ones.
  TruncatedSeries g1 = (one - TruncatedSeries::monomial(N, 1, a + 1)) * inv1mt * y.pow(b);
  for (int k = 1; k <= b; ++k) g1 += inv1mt.pow(k).shifted(k - 1);

  // Words with b + k ones, 1 <= k <= b.
  TruncatedSeries g2(N);
  for (int k = 1; k <= b; ++k) {
    if (static_cast<std::size_t>(b + k) > N) break;
    g2 += (binomial_poly(N, k, a, k, false) * inv1mt.pow(b - k) * binomial_poly(N, k - 1, a - 1, 0, true))
              .shifted(b + k);
  }

  // Words with b + k ones, k > b.
  TruncatedSeries g3(N);
  for (int k = b + 1; static_cast<std::size_t>(b + k) <= N; ++k) {
    for (int j = 0; j <= a - 1; ++j) {
      if (static_cast<std::size_t>(b + k + j) > N) break;
      g3 += (binomial_poly(N, b, a - j, b, false) * binomial_poly(N, b - 1, a - j - 1, 0, true))
                .shifted(b + k + j) *
            binomial(k - b - 1 + j, j);
    }
  }

  TruncatedSeries e(N);
  for (std::size_t n = 1; n <= N; ++n) {
    e[n] = static_cast<long>(n) <= a + b + 1 ? BigInt(static_cast<long>(n) - 1) : BigInt(a + b);
  }
  return (g1 + g2 + g3).shifted(1) - e;
}

TruncatedSeries gf_nonexceptional_1342(int k, int order) {
  const std::size_t N = static_cast<std::size_t>(order);
  const TruncatedSeries y = TruncatedSeries::t_over_one_minus_t(N);
  const TruncatedSeries base = TruncatedSeries::geometric(N, 2).shifted(1);  // t/(1-2t)
  return base - y * y - y.pow(k) * base;
}

BigInt count_linear_triple(int n, const BinaryWord& p) {
  const int k = static_cast<int>(p.size());
  if (n < k) return count_words_avoiding(n, {p});
  BigInt r = 0;
  for (int i = 0; i <= k - 1; ++i) r += binomial(n, i);
  return r;
}

int cdes_from_word(const BinaryWord& w) {
  if (w.empty()) return 0;
  int ones = 0;
  for (std::size_t i = 1; i < w.size(); ++i) ones += w[i];
  return 1 + ones;
}

std::vector<BigInt> descent_poly_1342(int n) {
  if (n < 1) throw std::invalid_argument("descent_poly_1342: n >= 1");
  if (n == 1) return {1};
  // 2q(1+q)^{n-2} - q(1 + q + ... + q^{n-2})
  std::vector<BigInt> c(n, 0);
  for (int j = 0; j <= n - 2; ++j) c[j + 1] += 2 * binomial(n - 2, j) - 1;
  return c;
}

BinaryWord wilf_normal_form_1342(const BinaryWord& p) {
  if (p.empty()) return p;
  if (!has_twin(p)) return BinaryWord::alternating(static_cast<int>(p.size()));
  const BinaryWord c = canonical_word(p);
  const int a = c.count(0) - 1;
  const int b = c.count(1);
  return a >= b ? c : BinaryWord::B({b + 1, a});
}

BigInt size5_counts_1342(int n, const std::string& which) {
  if (which == "12345") {
    if (n < 5) return count_pair_1342(n, BinaryWord::repeat(0, 4));
    return BigInt(n - 3) + binomial(n - 1, 2) + binomial(n - 2, 2);
  }
  if (which == "12435") {
    if (n < 5) return count_pair_1342(n, BinaryWord::parse("0010"));
    return 1 + binomial(n - 1, 2) + binomial(n - 1, 3);
  }
  if (which == "12354") {
    if (n < 6) return count_pair_1342(n, BinaryWord::parse("0001"));
    return BigInt(3 * n - 1);
  }
  throw std::invalid_argument("size5_counts_1342: unknown selector '" + which + "'");
}

}  // namespace circperm::w1342
