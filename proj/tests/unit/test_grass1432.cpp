#include <gtest/gtest.h>

#include <map>
#include <set>

#include "circperm/grass1432.hpp"

using namespace circperm;
using namespace circperm::g1432;

namespace {
BinaryWord W(const char* s) { return BinaryWord::parse(s); }
CircularPermutation C(const char* s) { return CircularPermutation::parse(s); }
const PatternSet kAnchor({C("1432")});
}  // namespace

TEST(Grass1432, Grassmannian) {
  EXPECT_EQ(grassmannian(W("0011")), LinearPermutation::identity(4));
  EXPECT_EQ(grassmannian(W("010")).to_string(), "213");
  EXPECT_THROW(grassmannian(W("10")), std::invalid_argument);
  EXPECT_THROW(grassmannian(BinaryWord()), std::invalid_argument);
  for (int len = 3; len <= 8; ++len) {
    for (const auto& w : all_words(len)) {
      if (w.first_bit() != 0) continue;
      const auto g = grassmannian(w);
      EXPECT_EQ(inverse_grassmannian(w), g.inverse());
      const int r = w.run_count();
      if (r == 3 || r == 4) {
        EXPECT_EQ(CircularPermutation(g), CircularPermutation(inverse_grassmannian(gig_swap(w))));
      }
    }
  }
}

TEST(Grass1432, CodeParsing) {
  EXPECT_EQ(GrassCode::parse("I:5"), GrassCode::identity(5));
  const auto g = GrassCode::parse("G:0^2 1^2 0 1^3 0");
  EXPECT_EQ(g.flavor(), Flavor::G);
  EXPECT_EQ(GrassCode::parse(g.to_string()), g);
  const auto e = GrassCode::parse("E:0110");
  EXPECT_EQ(e.flavor(), Flavor::E);
  EXPECT_TRUE(e.g_form() && e.ig_form());
  EXPECT_FALSE(g.ig_form());
  EXPECT_EQ(GrassCode::parse("G:010").flavor(), Flavor::E);
  EXPECT_THROW(GrassCode::parse("E:01010"), std::invalid_argument);
  EXPECT_THROW(GrassCode::parse("X:01010"), std::invalid_argument);
  EXPECT_THROW(classify(C("1432")), std::domain_error);
}

TEST(Grass1432, EncodingIsABijection) {
  for (int n = 1; n <= 8; ++n) {
    const auto codes = enumerate_av1432(n);
    std::set<CircularPermutation> seen;
    for (const auto& c : codes) {
      const auto s = c.perm();
      EXPECT_TRUE(kAnchor.avoided_by(s));
      EXPECT_EQ(classify(s), c) << c.to_string();
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), codes.size());
    EXPECT_EQ(BigInt(codes.size()), avoid_count_oracle(n, kAnchor));
  }
}

TEST(Grass1432, TypeCounts) {
  for (int n = 3; n <= 9; ++n) {
    std::map<Flavor, long> by;
    for (const auto& c : enumerate_av1432(n)) ++by[c.flavor()];
    long e = 0, g = 0;
    for (const auto& w : all_words(n)) {
      if (w.first_bit() != 0) continue;
      const int r = w.run_count();
      if (r == 3 || r == 4) ++e;
      if (r >= 5) ++g;
    }
    EXPECT_EQ(by[Flavor::Identity], 1);
    EXPECT_EQ(by[Flavor::E], e);
    EXPECT_EQ(by[Flavor::G], g);
    EXPECT_EQ(by[Flavor::IG], g);
  }
}

TEST(Grass1432, Containment) {
  const auto host = W("01³010²1");
  EXPECT_TRUE(g_contains(host, W("01²0²")));
  EXPECT_TRUE(g_contains(host, W("0²1²0")));
  EXPECT_TRUE(ig_contains(host, W("01³0")));
  EXPECT_TRUE(ig_contains(host, W("0²10²")));
  for (int n = 3; n <= 7; ++n) {
    const auto hosts = enumerate_av1432(n);
    for (int k = 3; k <= std::min(n, 5); ++k) {
      for (const auto& p : enumerate_av1432(k)) {
        for (const auto& h : hosts) ASSERT_EQ(contains_1432(h, p), contains_circular(h.perm(), p.perm())) << h.to_string() << " " << p.to_string();
      }
    }
  }
}

TEST(Grass1432, InverseGrassmannianDescents) {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& c : enumerate_av1432(n)) {
      if (c.flavor() != Flavor::IG) continue;
      EXPECT_EQ(cdes(c.perm()), (c.word().run_count() + 1) / 2) << c.to_string();
    }
  }
}

TEST(Grass1432, PairCounts) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(count_pair_1432(n, classify(C("1324"))), 1 + binomial(n - 1, 2)) << n;
  }
  EXPECT_EQ(count_pair_1432(6, classify(C("15234"))), 23);
  EXPECT_EQ(count_pair_1432(7, classify(C("12534"))), 35);
  EXPECT_EQ(count_pair_1432(6, classify(C("12453"))), 24);
  EXPECT_EQ(count_pair_1432(5, classify(C("13524"))), 12);
  for (int k = 3; k <= 5; ++k) {
    const PatternSet ps({C("1432"), CircularPermutation::identity(k)});
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(count_pair_identity_1432(n, k), avoid_count_oracle(n, ps)) << k << " " << n;
    EXPECT_EQ(count_pair_identity_1432(2 * k - 2, k), 0);
  }
  for (int k = 5; k <= 8; ++k) {
    const auto p = GrassCode::from_g(BinaryWord::alternating(k));
    for (int n = 1; n <= 14; ++n) EXPECT_EQ(closed_alt_1432(n, k), count_pair_1432(n, p)) << k << " " << n;
  }
}

TEST(Grass1432, PairCountsMatchOracle) {
  for (int k = 4; k <= 5; ++k) {
    for (const auto& p : enumerate_av1432(k)) {
      const PatternSet ps({C("1432"), p.perm()});
      for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_pair_1432(n, p), avoid_count_oracle(n, ps)) << p.to_string() << " n=" << n;
    }
  }
}

TEST(Grass1432, GeneratingFunctionsMatchDp) {
  const int order = 14;
  auto check = [&](const std::string& sel, const std::vector<int>& params) {
    const auto gf = gf_1432_family(sel, params, order);
    const auto p = gf_1432_pattern(sel, params);
    for (int n = 1; n <= order; ++n) EXPECT_EQ(gf[n], count_pair_1432(n, p)) << sel << " n=" << n;
  };
  for (int m = 2; m <= 4; ++m) check("010m", {m});
  for (int m = 2; m <= 3; ++m) check("0101m", {m});
  check("big", {4, 2});
  check("big", {5, 2});
  check("big", {4, 3});
}

TEST(Grass1432, NormalForms) {
  for (int k = 5; k <= 7; ++k) {
    for (const auto& p : enumerate_av1432(k)) {
      if (p.flavor() == Flavor::Identity) continue;
      const auto nf = wilf_normal_form_1432(p);
      EXPECT_NE(reduced_shape_1432(nf), 0) << p.to_string();
      for (int n = 1; n <= 11; ++n) EXPECT_EQ(count_pair_1432(n, p), count_pair_1432(n, nf)) << p.to_string() << " -> " << nf.to_string();
    }
  }
}

TEST(Grass1432, Size5Counts) {
  for (const char* sel : {"12345", "13524", "13425", "15234", "12534", "12453", "12354"}) {
    const PatternSet ps = PatternSet::parse(std::string("1432,") + sel);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(size5_counts_1432(n, sel), avoid_count_oracle(n, ps)) << sel << " n=" << n;
    const auto p = classify(C(sel));
    for (int n = 10; n <= 16; ++n) EXPECT_EQ(size5_counts_1432(n, sel), count_pair_1432(n, p)) << sel << " n=" << n;
  }
  EXPECT_EQ(size5_counts_1432(12, "13542"), size5_counts_1432(12, "13524"));
}

TEST(Grass1432, Descents) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(descent_poly_1432(n), descent_polynomial_oracle(n, kAnchor));
  EXPECT_EQ(descent_poly_1432(6), (std::vector<BigInt>{0, 1, 26, 6, 0, 0}));
}
