#include <gtest/gtest.h>

#include <set>

#include "circperm/words1342.hpp"

using namespace circperm;
using namespace circperm::w1342;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }
const PatternSet kAnchor({CircularPermutation::parse("1342")});
}  // namespace

TEST(Words1342, SigmaOfWord) {
  EXPECT_EQ(sigma_of_word(W("0³101²")).to_string(), "12384765");
  EXPECT_EQ(CircularPermutation(sigma_of_word(W("1111"))).to_string(), "[15432]");
  EXPECT_EQ(sigma_of_word(W("e")).to_string(), "1");
  EXPECT_EQ(word_of_perm(CircularPermutation::parse("1234")).to_string(), "000");
  EXPECT_THROW(word_of_perm(CircularPermutation::parse("1342")), std::domain_error);
}

TEST(Words1342, ExceptionalTwins) {
  EXPECT_TRUE(has_twin(W("0011")));
  EXPECT_TRUE(has_twin(W("1100")));
  EXPECT_FALSE(has_twin(W("010")));
  EXPECT_TRUE(is_exceptional(W("0001")));
  EXPECT_FALSE(is_exceptional(W("1000")));
  EXPECT_EQ(canonical_word(W("1100")).to_string(), "0001");
  const auto [a, b] = exceptional_pair(W("001"));
  EXPECT_EQ(CircularPermutation(sigma_of_word(a)), CircularPermutation(sigma_of_word(b)));
}

TEST(Words1342, EncodingIsABijection) {
  for (int n = 1; n <= 8; ++n) {
    const auto words = enumerate_av1342(n);
    std::set<CircularPermutation> seen;
    for (const auto& w : words) {
      const CircularPermutation s(sigma_of_word(w));
      EXPECT_TRUE(kAnchor.avoided_by(s));
      EXPECT_EQ(word_of_perm(s), w);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), words.size());
    EXPECT_EQ(BigInt(words.size()), avoid_count_oracle(n, kAnchor));
  }
}

TEST(Words1342, ClosedForms) {
  EXPECT_EQ(closed_iota_1342(6, 4), 19);
  EXPECT_EQ(count_linear_triple(5, W("000")), 16);
  EXPECT_EQ(count_linear_triple(4, W("000")), 11);
  for (int k = 1; k <= 5; ++k) {
    for (int n = k + 1; n <= 12; ++n) EXPECT_EQ(closed_iota_1342(n, k), count_pair_1342(n, BinaryWord::repeat(0, k))) << n << " " << k;
  }
  for (int k = 3; k <= 5; ++k) {
    for (int n = k + 1; n <= 12; ++n) EXPECT_EQ(closed_nonexceptional_1342(n, k), count_pair_1342(n, BinaryWord::alternating(k)));
  }
}

TEST(Words1342, GeneratingFunctionsMatchDp) {
  const int order = 14;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto gf = gf_exceptional_1342(a, b, order);
      const auto p = BinaryWord::repeat(0, a + 1) + BinaryWord::repeat(1, b);
      for (int n = 1; n <= order; ++n) EXPECT_EQ(gf[n], count_pair_1342(n, p)) << a << "," << b << " n=" << n;
    }
  }
  for (int k = 3; k <= 6; ++k) {
    const auto gf = gf_nonexceptional_1342(k, order);
    for (int n = 1; n <= order; ++n) EXPECT_EQ(gf[n], count_pair_1342(n, BinaryWord::alternating(k)));
  }
}

TEST(Words1342, WilfNormalFormPreservesCounts) {
  for (int len = 1; len <= 5; ++len) {
    for (const auto& w : all_words(len)) {
      if (!is_canonical(w)) continue;
      const auto nf = wilf_normal_form_1342(w);
      for (int n = 1; n <= 10; ++n) EXPECT_EQ(count_pair_1342(n, w), count_pair_1342(n, nf)) << w.to_string();
    }
  }
}

TEST(Words1342, Descents) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& w : enumerate_av1342(n)) EXPECT_EQ(cdes_from_word(w), cdes(CircularPermutation(sigma_of_word(w))));
    EXPECT_EQ(descent_poly_1342(n), descent_polynomial_oracle(n, kAnchor));
  }
}

TEST(Words1342, Size5Counts) {
  for (const char* sel : {"12345", "12435", "12354"}) {
    const PatternSet ps = PatternSet::parse(std::string("1342,") + sel);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(size5_counts_1342(n, sel), avoid_count_oracle(n, ps)) << sel << " n=" << n;
  }
}
