#include <gtest/gtest.h>

#include <fstream>

#include "circperm/sequence_cache.hpp"

using namespace circperm;
namespace fs = std::filesystem;

namespace {
fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("circperm_test_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(dir);
  return dir;
}
}  // namespace

TEST(Cache, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Cache, StoreAndLoad) {
  const auto dir = fresh_dir("store");
  SequenceCache cache(dir);
  const auto ps = PatternSet::parse("1342,12345");
  EXPECT_FALSE(cache.load(ps));
  cache.store(ps, {1, 1, 2, 5, 13});
  ASSERT_TRUE(cache.load(ps));
  EXPECT_EQ(*cache.load(ps), (std::vector<BigInt>{1, 1, 2, 5, 13}));
  cache.store(ps, {1, 1});
  EXPECT_EQ(cache.load(ps)->size(), 5u);
  cache.store(ps, {1, 1, 2, 5, 13, 31});
  EXPECT_EQ(cache.load(ps)->size(), 6u);
  EXPECT_FALSE(cache.load(PatternSet::parse("1324")));
  fs::remove_all(dir);
}

TEST(Cache, RejectsForeignKey) {
  const auto dir = fresh_dir("foreign");
  SequenceCache cache(dir);
  const auto ps = PatternSet::parse("1432");
  fs::create_directories(dir);
  std::ofstream(cache.path_for(ps)) << "# 1324\n1 1\n2 1\n";
  EXPECT_FALSE(cache.load(ps));
  fs::remove_all(dir);
}
