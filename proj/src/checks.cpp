#include "circperm/checks.hpp"

#include <algorithm>
#include <set>

#include "circperm/circled1324.hpp"
#include "circperm/grass1432.hpp"
#include "circperm/words1342.hpp"

namespace circperm::checks {

namespace {

constexpr std::size_t kMaxSamples = 5;

const CircularPermutation& anchor(int a) {
  static const CircularPermutation p1342 = CircularPermutation::parse("1342");
  static const CircularPermutation p1324 = CircularPermutation::parse("1324");
  static const CircularPermutation p1432 = CircularPermutation::parse("1432");
  return a == 1342 ? p1342 : a == 1324 ? p1324 : p1432;
}

template <class T, class Perm>
void check_distinct_avoiders(CheckResult& r, int a, int n, const std::vector<T>& objs, Perm perm_of,
                             const BigInt& expected) {
  std::set<CircularPermutation> seen;
  for (const auto& o : objs) {
    const CircularPermutation p = perm_of(o);
    r.expect(seen.insert(p).second, "n=" + std::to_string(n) + ": " + p.to_string() + " encoded twice");
    r.expect(!contains_circular(p, anchor(a)), p.to_string() + " contains [" + std::to_string(a) + "]");
  }
  r.expect(BigInt(objs.size()) == expected, "n=" + std::to_string(n) + ": " + std::to_string(objs.size()) +
                                                 " encodings, expected " + expected.str());
}

}  // namespace

void CheckResult::expect(bool cond, const std::string& what) {
  ++checked;
  if (cond) return;
  ++failed;
  if (samples.size() < kMaxSamples) samples.push_back(what);
}

CheckResult base_counts(int n_lo, int n_hi) {
  CheckResult r{"base counts", 0, 0, {}};
  for (int n = n_lo; n <= n_hi; ++n) {
    const std::string at = " n=" + std::to_string(n);
    r.expect(avoid_count_oracle(n, PatternSet({anchor(1342)})) == pow2(n - 1) - (n - 1), "[1342]" + at);
    r.expect(avoid_count_oracle(n, PatternSet({anchor(1324)})) == (n == 1 ? BigInt(1) : fibonacci(2 * n - 4)),
             "[1324]" + at);
    r.expect(avoid_count_oracle(n, PatternSet({anchor(1432)})) == pow2(n) + 1 - 2 * n - binomial(n, 3), "[1432]" + at);
  }
  return r;
}

CheckResult faithfulness_1342(int max_host, int max_pattern) {
  CheckResult r{"faithfulness [1342]", 0, 0, {}};
  for (int h = 1; h <= max_host; ++h) {
    for (const auto& w : w1342::enumerate_av1342(h)) {
      const CircularPermutation host(w1342::sigma_of_word(w));
      for (int k = 1; k <= std::min(h, max_pattern); ++k) {
        for (const auto& p : w1342::enumerate_av1342(k)) {
          const CircularPermutation pat(w1342::sigma_of_word(p));
          r.expect(w1342::word_contains(w, p) == contains_circular(host, pat), w.to_compact() + " vs " + p.to_compact());
        }
      }
    }
  }
  return r;
}

CheckResult faithfulness_1324(int max_host, int max_pattern) {
  CheckResult r{"faithfulness [1324]", 0, 0, {}};
  for (int h = 2; h <= max_host; ++h) {
    for (const auto& x : c1324::enumerate_circled(h)) {
      const CircularPermutation host = c1324::comp_to_perm(x);
      for (int k = 2; k <= std::min(h, max_pattern); ++k) {
        for (const auto& y : c1324::enumerate_circled(k)) {
          r.expect(c1324::dominates(x, y) == contains_circular(host, c1324::comp_to_perm(y)),
                   x.to_string() + " vs " + y.to_string());
        }
      }
    }
  }
  return r;
}

CheckResult faithfulness_1432(int max_host, int max_pattern) {
  CheckResult r{"faithfulness [1432]", 0, 0, {}};
  for (int h = 1; h <= max_host; ++h) {
    for (const auto& c1 : g1432::enumerate_av1432(h)) {
      const CircularPermutation host = c1.perm();
      for (int k = 1; k <= std::min(h, max_pattern); ++k) {
        for (const auto& c2 : g1432::enumerate_av1432(k)) {
          r.expect(g1432::contains_1432(c1, c2) == contains_circular(host, c2.perm()),
                   c1.to_string() + " vs " + c2.to_string());
        }
      }
    }
  }
  return r;
}

CheckResult roundtrip_1342(int max_word_length, int oracle_n) {
  CheckResult r{"round trip [1342]", 0, 0, {}};
  for (int len = 0; len <= max_word_length; ++len) {
    const auto words = w1342::enumerate_av1342(len + 1);
    for (const auto& w : words) {
      const CircularPermutation p(w1342::sigma_of_word(w));
      r.expect(w1342::word_of_perm(p) == w, w.to_compact() + " -> " + p.to_string());
    }
    check_distinct_avoiders(r, 1342, len + 1, words,
                            [](const BinaryWord& w) { return CircularPermutation(w1342::sigma_of_word(w)); },
                            pow2(len) - len);
  }
  for (int n = 1; n <= oracle_n; ++n) {
    for (const auto& s : avoiders(n, PatternSet({anchor(1342)}))) {
      r.expect(CircularPermutation(w1342::sigma_of_word(w1342::word_of_perm(s))) == s, s.to_string());
    }
  }
  return r;
}

CheckResult roundtrip_1324(int max_total, int oracle_n) {
  CheckResult r{"round trip [1324]", 0, 0, {}};
  for (int n = 2; n <= max_total; ++n) {
    const auto comps = c1324::enumerate_circled(n);
    for (const auto& x : comps) r.expect(c1324::perm_to_comp(c1324::comp_to_perm(x)) == x, x.to_string());
    check_distinct_avoiders(r, 1324, n, comps, [](const c1324::CircledComposition& x) { return c1324::comp_to_perm(x); },
                            fibonacci(2 * n - 4));
  }
  for (int n = 2; n <= oracle_n; ++n) {
    for (const auto& s : avoiders(n, PatternSet({anchor(1324)}))) {
      r.expect(c1324::comp_to_perm(c1324::perm_to_comp(s)) == s, s.to_string());
    }
  }
  return r;
}

CheckResult roundtrip_1432(int max_size, int oracle_n) {
  CheckResult r{"round trip [1432]", 0, 0, {}};
  for (int n = 1; n <= max_size; ++n) {
    const auto codes = g1432::enumerate_av1432(n);
    for (const auto& c : codes) {
      r.expect(g1432::classify(c.perm()) == c, c.to_string());
      r.expect(g1432::GrassCode::parse(c.to_string()) == c, "parse " + c.to_string());
    }
    check_distinct_avoiders(r, 1432, n, codes, [](const g1432::GrassCode& c) { return c.perm(); },
                            pow2(n) + 1 - 2 * n - binomial(n, 3));
  }
  for (int n = 1; n <= oracle_n; ++n) {
    for (const auto& s : avoiders(n, PatternSet({anchor(1432)}))) r.expect(g1432::classify(s).perm() == s, s.to_string());
  }
  return r;
}

CheckResult descents(int max_n) {
  CheckResult r{"descent polynomials", 0, 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    const std::string at = " n=" + std::to_string(n);
    r.expect(descent_polynomial_oracle(n, PatternSet({anchor(1342)})) == w1342::descent_poly_1342(n), "[1342]" + at);
    r.expect(descent_polynomial_oracle(n, PatternSet({anchor(1324)})) == c1324::descent_poly_1324(n), "[1324]" + at);
    r.expect(descent_polynomial_oracle(n, PatternSet({anchor(1432)})) == g1432::descent_poly_1432(n), "[1432]" + at);
  }
  return r;
}

}  // namespace circperm::checks
