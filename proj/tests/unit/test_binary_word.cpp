#include <gtest/gtest.h>

#include "circperm/binary_word.hpp"

using namespace circperm;

TEST(BinaryWord, ParseForms) {
  EXPECT_EQ(BinaryWord::parse("0001011").to_string(), "0001011");
  EXPECT_EQ(BinaryWord::parse("0^3 1 0 1^2").to_string(), "0001011");
  EXPECT_EQ(BinaryWord::parse("0³101²").to_string(), "0001011");
  EXPECT_TRUE(BinaryWord::parse("e").empty());
  EXPECT_TRUE(BinaryWord::parse("").empty());
  EXPECT_THROW(BinaryWord::parse("012"), std::invalid_argument);
  EXPECT_THROW(BinaryWord::parse("0^"), std::invalid_argument);
}

TEST(BinaryWord, Runs) {
  const auto w = BinaryWord::parse("0001011");
  EXPECT_EQ(w.run_lengths(), (std::vector<int>{3, 1, 1, 2}));
  EXPECT_EQ(w.run_count(), 4);
  EXPECT_EQ(w.to_compact(), "0^3 1 0 1^2");
  EXPECT_EQ(BinaryWord::B({3, 1, 1, 2}), w);
  EXPECT_EQ(BinaryWord::from_runs(1, {2, 1}).to_string(), "110");
  EXPECT_EQ(BinaryWord::alternating(5).to_string(), "01010");
  for (const auto& v : all_words(8)) EXPECT_EQ(BinaryWord::from_runs(v.first_bit(), v.run_lengths()), v);
}

TEST(BinaryWord, Transforms) {
  const auto w = BinaryWord::parse("0010");
  EXPECT_EQ(w.complement().to_string(), "1101");
  EXPECT_EQ(w.reversed().to_string(), "0100");
  EXPECT_EQ(w.count(1), 1);
  EXPECT_EQ((w + w).size(), 8u);
}

TEST(BinaryWord, Subsequence) {
  EXPECT_TRUE(is_subsequence(BinaryWord::parse("0101"), BinaryWord::parse("011")));
  EXPECT_TRUE(is_subsequence(BinaryWord::parse("01"), BinaryWord()));
  EXPECT_FALSE(is_subsequence(BinaryWord::parse("0011"), BinaryWord::parse("10")));
}

TEST(BinaryWord, AvoidanceDpMatchesScan) {
  const std::vector<std::vector<BinaryWord>> pattern_sets{
      {BinaryWord::parse("010")},
      {BinaryWord::parse("0011"), BinaryWord::parse("110")},
      {BinaryWord::parse("1"), BinaryWord::parse("00")},
  };
  const std::vector<WordFilter> filters{{}, {0, 3, -1}, {1, 0, 2}, {-1, 2, 4}};
  for (const auto& pats : pattern_sets) {
    for (const auto& f : filters) {
      for (int len = 0; len <= 10; ++len) {
        long expected = 0;
        for (const auto& w : all_words(len)) {
          if (f.first_bit >= 0 && w.first_bit() != f.first_bit) continue;
          const int r = w.run_count();
          if (r < f.min_runs || (f.max_runs >= 0 && r > f.max_runs)) continue;
          bool avoids = true;
          for (const auto& p : pats) avoids &= !is_subsequence(w, p);
          expected += avoids;
        }
        EXPECT_EQ(count_words_avoiding(len, pats, f), expected) << "len " << len;
      }
    }
  }
}
