#include <gtest/gtest.h>

#include <set>

#include "circperm/circled1324.hpp"

using namespace circperm;
using namespace circperm::c1324;

namespace {
CircledComposition X(const char* s) { return CircledComposition::parse(s); }
const PatternSet kAnchor({CircularPermutation::parse("1324")});
}  // namespace

TEST(Circled1324, Parse) {
  const auto x = X("①^2 5 ① 1 ①^2 3 1 ①^3 2 1 ①^3");
  EXPECT_EQ(x.total(), 24);
  EXPECT_EQ(x.uncircled_count(), 6);
  EXPECT_EQ(x.leading_circled(), 2);
  EXPECT_EQ(x.trailing_circled(), 3);
  EXPECT_EQ(X("(1) 2 (1)").to_string(), "(1) 2 (1)");
  EXPECT_THROW(X("2 (1)"), std::invalid_argument);
  EXPECT_THROW(X("(1)"), std::invalid_argument);
}

TEST(Circled1324, ContiguousPermutation) {
  EXPECT_EQ(contiguous_perm({3, 1, 3, 2}).to_string(), "895674123");
  EXPECT_EQ(comp_to_linear(X("(1)^2 2 (1)^2 2 (1) ")).size(), 9);
}

TEST(Circled1324, EncodingIsABijection) {
  for (int n = 2; n <= 8; ++n) {
    const auto comps = enumerate_circled(n);
    std::set<CircularPermutation> seen;
    for (const auto& c : comps) {
      const auto s = comp_to_perm(c);
      EXPECT_TRUE(kAnchor.avoided_by(s));
      EXPECT_EQ(perm_to_comp(s), c);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), comps.size());
    EXPECT_EQ(BigInt(comps.size()), avoid_count_oracle(n, kAnchor));
  }
  EXPECT_THROW(perm_to_comp(CircularPermutation::parse("1324")), std::domain_error);
}

TEST(Circled1324, Domination) {
  EXPECT_TRUE(dominates(X("①^2 5 ① 1 ①^2 3 1 ①^3 2 1 ①^3"), X("①^8 2 ①^2 1 ①")));
  EXPECT_FALSE(dominates(X("① 1 ①"), X("① 2 ①")));
  for (int n = 2; n <= 6; ++n) {
    for (const auto& x : enumerate_circled(n)) {
      for (int m = 2; m <= n; ++m) {
        for (const auto& y : enumerate_circled(m)) EXPECT_EQ(dominates(x, y), contains_circular(comp_to_perm(x), comp_to_perm(y)));
      }
    }
  }
}

TEST(Circled1324, NormalForms) {
  const auto x = X("①^2 5 ① 1 ①^2 3 1 ①^3 2 1 ①^3");
  EXPECT_EQ(standard_form(x), X("①^3 5 3 2 1 1 ①^6 1 ①^2"));
  EXPECT_GT(reduced_shape(wilf_normal_form(x)), 0);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& y : enumerate_circled(n)) {
      const auto nf = wilf_normal_form(y);
      for (int m = 2; m <= 11; ++m) EXPECT_EQ(count_avoiders_1324(m, y), count_avoiders_1324(m, nf)) << y.to_string();
    }
  }
}

TEST(Circled1324, CountsAndGeneratingFunctions) {
  for (int n = 2; n <= 12; ++n) {
    BigInt total = 0;
    for (int i = 0; i <= n; ++i) total += count_by_uncircled(n, i);
    EXPECT_EQ(total, BigInt(enumerate_circled(n).size()));
  }
  const int order = 14;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& y : enumerate_circled(n)) {
      if (!y.has_uncircled()) continue;
      const auto gf = gf_dominators(y, order);
      for (int m = 2; m <= order; ++m) EXPECT_EQ(gf[m], count_dominators(m, y)) << y.to_string() << " n=" << m;
    }
  }
}

TEST(Circled1324, ClosedForms) {
  EXPECT_EQ(closed_delta_1324(5, 2), 7);
  // Pell recurrence.
  for (int n = 7; n <= 20; ++n) {
    EXPECT_EQ(size5_counts_1324(n, "15234"), 2 * size5_counts_1324(n - 1, "15234") + size5_counts_1324(n - 2, "15234"));
  }
  for (int k = 1; k <= 4; ++k) {
    const auto y = X(("(1) " + std::to_string(k) + " (1)").c_str());
    for (int n = 2; n <= 14; ++n) EXPECT_EQ(recur_1k1(n, k), count_avoiders_1324(n, y)) << k << " " << n;
  }
  for (const char* sel : {"15432", "15234", "12345", "12345:recurrence", "12354", "12354:closed", "13542"}) {
    std::string pat(sel);
    pat = pat.substr(0, 5);
    const PatternSet ps = PatternSet::parse("1324," + pat);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(size5_counts_1324(n, sel), avoid_count_oracle(n, ps)) << sel << " n=" << n;
  }
}

TEST(Circled1324, Descents) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(descent_poly_1324(n), descent_polynomial_oracle(n, kAnchor));
}
