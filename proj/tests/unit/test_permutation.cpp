#include <gtest/gtest.h>

#include <set>

#include "circperm/permutation.hpp"

using namespace circperm;

namespace {
CircularPermutation C(const char* s) { return CircularPermutation::parse(s); }
LinearPermutation L(const char* s) { return LinearPermutation::parse(s); }
}  // namespace

TEST(Permutation, ParseAndValidate) {
  EXPECT_EQ(L("[2413]").word(), (std::vector<int>{2, 4, 1, 3}));
  EXPECT_EQ(L("8 9 10 5 3 4 1 2 6 7 11").size(), 11);
  EXPECT_THROW(L("1224"), std::invalid_argument);
  EXPECT_THROW(L("1 3"), std::invalid_argument);
  EXPECT_EQ(L("8 9 10 5 3 4 1 2 6 7 11").to_string(), "8 9 10 5 3 4 1 2 6 7 11");
  EXPECT_EQ(L("2413").inverse().to_string(), "3142");
}

TEST(Permutation, Canonicalize) {
  EXPECT_EQ(canonicalize({4, 1, 2, 3}), C("1234"));
  EXPECT_EQ(canonicalize({3, 1, 4, 2}).to_string(), "[1423]");
  EXPECT_EQ(canonicalize({1}).to_string(), "[1]");
  EXPECT_EQ(C("(3412)").to_string(), "[1234]");
}

TEST(Permutation, LinearContainment) {
  EXPECT_TRUE(contains_linear(L("23145"), L("1234")));
  EXPECT_TRUE(contains_linear(L("1"), L("1")));
  EXPECT_FALSE(contains_linear(L("2413"), L("123")));
  EXPECT_FALSE(contains_linear(L("12"), L("123")));
}

TEST(Permutation, CircularContainment) {
  EXPECT_TRUE(contains_circular(C("14523"), C("1234")));
  EXPECT_TRUE(contains_circular(C("1"), C("1")));
  EXPECT_FALSE(contains_circular(C("1324"), C("1342")));
  EXPECT_FALSE(contains_circular(C("123"), C("1234")));
}

TEST(Permutation, CircularContainmentMatchesBruteForce) {
  // Brute force: some rotation of sigma contains pi linearly, checked by
  // trying every subset of positions.
  auto brute = [](const CircularPermutation& s, const CircularPermutation& p) {
    const int n = s.size(), k = p.size();
    for (int r = 0; r < n; ++r) {
      const auto rot = s.rotation(r);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> sub;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1u) sub.push_back(rot[i]);
        }
        bool same = true;
        for (int i = 0; i < k && same; ++i) {
          for (int j = 0; j < k && same; ++j) same = (sub[i] < sub[j]) == (p[i] < p[j]);
        }
        if (same) return true;
      }
    }
    return false;
  };
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_circular(n)) {
      for (int k = 1; k <= std::min(n, 4); ++k) {
        for (const auto& p : enumerate_circular(k)) ASSERT_EQ(contains_circular(s, p), brute(s, p)) << s.to_string() << p.to_string();
      }
    }
  }
}

TEST(Permutation, Symmetries) {
  EXPECT_EQ(reverse(C("1234")), C("1432"));
  EXPECT_EQ(reverse_complement(C("1")), C("1"));
  // complement: value i -> n+1-i, then canonical rotation.
  EXPECT_EQ(complement(C("1342")), canonicalize({4, 2, 1, 3}));
  for (const auto& s : enumerate_circular(6)) {
    EXPECT_EQ(reverse(reverse(s)), s);
    EXPECT_EQ(complement(complement(s)), s);
    EXPECT_EQ(reverse_complement(s), reverse(complement(s)));
  }
}

TEST(Permutation, CyclicDescents) {
  EXPECT_EQ(cyclic_descent_set(C("1234")), (std::vector<int>{4}));
  EXPECT_EQ(cyclic_descent_set(C("1432")), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(cyclic_descent_set(C("1324")), (std::vector<int>{2, 4}));
  EXPECT_EQ(cdes(C("1432")), 3);
  EXPECT_EQ(cdes(C("1")), 0);
}

TEST(Permutation, CircularLis) {
  EXPECT_EQ(circular_lis(C("12345")), 5);
  EXPECT_EQ(circular_lis(C("15432")), 2);
  EXPECT_EQ(circular_lis(C("1")), 1);
}

TEST(Permutation, Enumeration) {
  EXPECT_EQ(enumerate_circular(3), (std::vector<CircularPermutation>{C("123"), C("132")}));
  EXPECT_EQ(enumerate_circular(1).size(), 1u);
  long fact = 1;
  for (int n = 1; n <= 8; ++n) {
    if (n > 1) fact *= n - 1;
    const auto all = enumerate_circular(n);
    EXPECT_EQ(static_cast<long>(all.size()), fact);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<CircularPermutation>(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Permutation, PatternSetNormalization) {
  const auto ps = PatternSet::parse("12345,1342,[1342]");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps.key(), "1342,12345");
  // 12 is contained in every longer pattern.
  EXPECT_EQ(PatternSet::parse("1342,12").key(), "12");
  EXPECT_EQ(PatternSet::parse("[1 2 3 4 5 6 7 8 9 10]").key(), "[1 2 3 4 5 6 7 8 9 10]");
}

TEST(Oracle, Counts) {
  EXPECT_EQ(avoid_count_oracle(4, PatternSet({C("1342")})), 5);
  EXPECT_EQ(avoid_count_oracle(5, PatternSet({C("1324")})), 13);
  EXPECT_EQ(avoid_count_oracle(6, PatternSet()), 120);
  EXPECT_EQ(avoid_count_oracle(3, PatternSet({C("12")})), 0);
}

TEST(Oracle, TrivialWilfEquivalenceAcrossOrbits) {
  for (const auto& p : enumerate_circular(4)) {
    const std::vector<CircularPermutation> orbit{p, reverse(p), complement(p), reverse_complement(p)};
    for (int n = 1; n <= 8; ++n) {
      const BigInt base = avoid_count_oracle(n, PatternSet({p}));
      for (const auto& q : orbit) EXPECT_EQ(avoid_count_oracle(n, PatternSet({q})), base);
    }
  }
}

TEST(Oracle, DescentPolynomialSumsToCount) {
  EXPECT_EQ(descent_polynomial_oracle(2, PatternSet()), (std::vector<BigInt>{0, 1}));
  for (int n = 1; n <= 7; ++n) {
    for (const char* p : {"1342", "1324", "1432"}) {
      const PatternSet ps({C(p)});
      BigInt sum = 0;
      for (const auto& c : descent_polynomial_oracle(n, ps)) sum += c;
      EXPECT_EQ(sum, avoid_count_oracle(n, ps));
    }
  }
}
