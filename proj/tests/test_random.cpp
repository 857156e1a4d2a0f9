#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <vector>

#include "pairclust/parallel.hpp"
#include "pairclust/random.hpp"

namespace pairclust {
namespace {

TEST(Rng, DeterministicPerSeed) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
}

TEST(Rng, UniformStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto x = rng.uniform(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) {
    EXPECT_GT(h, 850);
    EXPECT_LT(h, 1150);
  }
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform_real();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(derive_seed(5, s));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(Shuffle, IsAPermutation) {
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  Rng rng(9);
  shuffle(std::span<int>(v), rng);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<int> seen(1000, 0);
  parallel_for(seen.size(), [&](std::size_t i) { seen[i] += 1; }, 4);
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(
                   10, [](std::size_t i) {
                     if (i == 3) throw std::runtime_error("boom");
                   },
                   3),
               std::runtime_error);
}

}  // namespace
}  // namespace pairclust
