#include <gtest/gtest.h>

#include "circperm/wilf.hpp"

using namespace circperm;

TEST(Wilf, MethodNames) {
  EXPECT_EQ(parse_method("formula"), Method::Formula);
  EXPECT_EQ(method_name(Method::Encoding), "encoding");
  EXPECT_THROW(parse_method("magic"), std::invalid_argument);
}

TEST(Wilf, AnchorOf) {
  const auto a = anchor_of(PatternSet::parse("1423,12345"));
  EXPECT_NE(a.anchor, 0);
  ASSERT_TRUE(a.partner.has_value());
  EXPECT_EQ(apply_symmetry(CircularPermutation::parse("1423"), a.symmetry).to_string(), "[" + std::to_string(a.anchor) + "]");
  EXPECT_FALSE(anchor_of(PatternSet::parse("1342")).partner);
  EXPECT_THROW(anchor_of(PatternSet::parse("12345")), UnsupportedError);
  EXPECT_THROW(anchor_of(PatternSet::parse("1342,12345,12354")), UnsupportedError);
}

TEST(Wilf, MethodsAgree) {
  for (const char* key : {"1342", "1324", "1432", "1342,12345", "1342,12354", "1324,15234", "1324,12345",
                          "1432,13524", "1432,12453", "1234,12345", "1423,13254"}) {
    const auto ps = PatternSet::parse(key);
    const auto oracle = avoidance_sequence(ps, 8, Method::Oracle).terms;
    EXPECT_EQ(avoidance_sequence(ps, 8, Method::Encoding).terms, oracle) << key;
    try {
      EXPECT_EQ(avoidance_sequence(ps, 8, Method::Formula).terms, oracle) << key;
    } catch (const UnsupportedError&) {
    }
  }
}

TEST(Wilf, FormulaCoversTableAndRejectsOthers) {
  for (const auto& [pair, oeis] : reference_pairs()) {
    const auto ps = PatternSet::parse(pair);
    EXPECT_EQ(avoidance_sequence(ps, 20, Method::Formula).terms, avoidance_sequence(ps, 20, Method::Encoding).terms) << pair;
  }
  EXPECT_THROW(avoidance_sequence(PatternSet::parse("12345"), 6, Method::Encoding), UnsupportedError);
  EXPECT_THROW(avoidance_sequence(PatternSet::parse("12345"), 6, Method::Formula), UnsupportedError);
}

TEST(Wilf, TrivialOrbits) {
  std::size_t total = 0;
  for (const auto& o : trivial_orbits(4)) total += o.size();
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(trivial_orbits(4).size(), 3u);
}

TEST(Wilf, Classification) {
  EXPECT_EQ(classify_pairs(CircularPermutation::parse("1342"), 5, 12).classes.size(), 3u);
  EXPECT_EQ(classify_pairs(CircularPermutation::parse("1324"), 5, 12).classes.size(), 5u);
  EXPECT_EQ(classify_pairs(CircularPermutation::parse("1432"), 5, 12).classes.size(), 7u);
  const auto all = classify_45_pairs(12);
  EXPECT_EQ(all.classes.size(), 14u);
  EXPECT_EQ(all.cross_anchor_merges, 1);
  for (const auto& c : all.classes) EXPECT_TRUE(c.proved);
  EXPECT_EQ(all.witnesses.size(), all.classes.size() * (all.classes.size() - 1) / 2);
}

TEST(Wilf, ReferenceData) {
  for (const auto& [pair, oeis] : reference_pairs()) {
    const auto r = oeis_reference_check(pair, 20);
    EXPECT_TRUE(r.ok()) << pair << " " << oeis;
    EXPECT_EQ(r.compared, 20);
  }
  EXPECT_THROW(oeis_reference_check("1342,1234", 5), std::invalid_argument);
}
