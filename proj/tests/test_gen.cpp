#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pairclust/error.hpp"
#include "pairclust/gen.hpp"
#include "pairclust/graph.hpp"
#include "pairclust/metrics.hpp"

namespace pairclust {
namespace {

TEST(Planted, SizesAndDeterminism) {
  std::vector<std::size_t> sizes{3, 2};
  Clustering c = planted_clustering(5, sizes, 1);
  EXPECT_EQ(c.sorted_sizes(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c, planted_clustering(5, sizes, 1));
  EXPECT_EQ(planted_clustering_balanced(9, 1, 4), Clustering::single_cluster(9));
  EXPECT_EQ(planted_clustering_balanced(10, 3, 4).sorted_sizes(), (std::vector<std::size_t>{3, 3, 4}));
  EXPECT_THROW(planted_clustering(6, sizes, 1), Error);
  EXPECT_THROW(planted_clustering_balanced(3, 4, 1), Error);
}

TEST(Planted, SeedsGiveDifferentAssignments) {
  std::set<std::vector<ClusterId>> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Clustering c = planted_clustering_balanced(30, 3, s);
    auto labels = c.labels();
    seen.insert({labels.begin(), labels.end()});
  }
  EXPECT_GT(seen.size(), 15u);
}

TEST(SampleTrainingSet, Examples) {
  Clustering d = planted_clustering_balanced(20, 4, 3);
  EXPECT_EQ(sample_training_set(d, 0, 1).size(), 0u);
  TrainingSet together = sample_training_set(Clustering::single_cluster(8), 200, 2);
  for (const auto& e : together.entries()) EXPECT_EQ(e.y, 1);
  TrainingSet apart = sample_training_set(Clustering::singletons(8), 500, 2);
  for (const auto& e : apart.entries()) EXPECT_EQ(e.y, e.v == e.w ? 1 : 0);
  TrainingSet s = sample_training_set(d, 1000, 5);
  EXPECT_EQ(s.size(), 1000u);
  EXPECT_EQ(s, sample_training_set(d, 1000, 5));
  for (const auto& e : s.entries()) EXPECT_EQ(e.y, d.label(e.v) == d.label(e.w) ? 1 : 0);
}

TEST(SampleTrainingSet, PairsAreUniformOverOrderedPairs) {
  const std::size_t n = 5, m = 250000;
  TrainingSet s = sample_training_set(Clustering::singletons(n), m, 77);
  std::vector<double> counts(n * n, 0);
  for (const auto& e : s.entries()) counts[e.v * n + e.w] += 1;
  const double expected = double(m) / double(n * n);
  double chi2 = 0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 52.6);  // chi-square with 24 dof, p = 0.999
}

TEST(Perturb, HammingIsTwiceTheFlips) {
  std::mt19937_64 rng(131);
  Clustering d = Clustering::from_clusters(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(perturb_similarity(d, 0, 9), clustering_to_similarity(d));
  EXPECT_EQ(hamming_distance(perturb_similarity(d, 3, 9), d), 6u);
  EXPECT_EQ(perturb_similarity(d, 3, 9), perturb_similarity(d, 3, 9));
  EXPECT_EQ(hamming_distance(perturb_similarity(d, 15, 9), d), 30u);
  EXPECT_THROW(perturb_similarity(d, 16, 9), Error);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    Clustering c = oracle::random_clustering(n, 1 + rng() % 6, rng);
    const std::uint64_t flips = rng() % (n * (n - 1) / 2 + 1);
    EXPECT_EQ(hamming_distance(perturb_similarity(c, flips, rng()), c), 2 * flips);
  }
}

TEST(AdversarialT2, HalvesEveryClusterWhenBudgetAllows) {
  Clustering d = Clustering::from_clusters(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  auto out = adversarial_t2_construction(d, 16);
  EXPECT_TRUE(out.halved_all);
  EXPECT_EQ(out.partition.sorted_sizes(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_EQ(hamming_distance(out.graph, d), 16u);
  EXPECT_THROW(adversarial_t2(d, 0), Error);
}

TEST(AdversarialT2, SmallBudgetSplitsOnlyTheSmallestCluster) {
  Clustering d = Clustering::from_clusters(18, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}});
  const std::uint64_t sigma = 17;  // below d_1^2 / 2 = 18
  auto out = adversarial_t2_construction(d, sigma);
  EXPECT_FALSE(out.halved_all);
  EXPECT_EQ(out.pivot, 0u);
  const std::uint64_t c = sigma / (2 * 6);
  EXPECT_EQ(out.split_size, c);
  EXPECT_EQ(hamming_distance(out.graph, d), 2 * c * (6 - c));
  EXPECT_LE(hamming_distance(out.graph, d), sigma);
  EXPECT_EQ(out.partition.sorted_sizes(), (std::vector<std::size_t>{1, 5, 12}));
}

TEST(AdversarialT2, BudgetAlwaysRespectedAndOutputIsAClustering) {
  std::mt19937_64 rng(137);
  int both_cases[2] = {0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    Clustering d = oracle::random_clustering(n, 1 + rng() % 6, rng);
    std::uint64_t square_sum = 0;
    for (std::size_t s : d.sizes()) square_sum += s * s;
    const std::uint64_t sigma = 1 + rng() % (square_sum / 2 + 10);
    auto out = adversarial_t2_construction(d, sigma);
    ++both_cases[out.halved_all ? 1 : 0];
    EXPECT_LE(hamming_distance(out.graph, d), sigma);
    auto back = similarity_is_clustering(out.graph);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, out.partition);
  }
  EXPECT_GT(both_cases[0], 0);
  EXPECT_GT(both_cases[1], 0);
}

TEST(AdversarialT4, InvariantsHold) {
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 20 + rng() % 100;
    SideInfoGraph g = random_connected_graph(n, 0.05, rng());
    const std::uint64_t b = 4 + rng() % (n - 4);
    const std::uint64_t k = 3 + rng() % 8;
    const std::uint64_t m = rng() % (n * n / 4);
    auto inst = adversarial_t4(g, b, k, m, rng());
    EXPECT_LE(inst.phi_r, static_cast<double>(b));
    EXPECT_NEAR(inst.phi_r, resistance_weighted_cut_size(g, inst.y), 1e-9);
    EXPECT_EQ(inst.v_b.size(), b / 2);
    EXPECT_LE(inst.z, (k - 1) / 2);
    EXPECT_GE(inst.z, 1u);
    EXPECT_EQ(inst.h_sets.size(), inst.z);
    EXPECT_LE(inst.y.cluster_count(), k);
    EXPECT_EQ(inst.s.size(), m);
    std::set<Item> seen;
    for (std::size_t j = 0; j < inst.h_sets.size(); ++j) {
      std::set<Item> h(inst.h_sets[j].begin(), inst.h_sets[j].end());
      for (Item v : h) {
        EXPECT_TRUE(seen.insert(v).second);
        EXPECT_TRUE(std::binary_search(inst.v_b.begin(), inst.v_b.end(), v));
      }
      for (const auto& e : inst.s.entries()) {
        EXPECT_FALSE(e.v != e.w && h.count(e.v) && h.count(e.w));
      }
    }
    // Items outside every H set share one class.
    std::set<ClusterId> outside;
    for (Item v = 0; v < n; ++v) {
      if (!seen.count(v)) outside.insert(inst.y.label(v));
    }
    EXPECT_LE(outside.size(), 1u);
    for (const auto& e : inst.s.entries()) EXPECT_EQ(e.y, inst.y.label(e.v) == inst.y.label(e.w) ? 1 : 0);
  }
}

TEST(AdversarialT4, ParameterChecks) {
  SideInfoGraph g = random_connected_graph(20, 0.1, 1);
  EXPECT_THROW(adversarial_t4(g, 3, 5, 10, 0), Error);
  EXPECT_THROW(adversarial_t4(g, 20, 5, 10, 0), Error);
  EXPECT_THROW(adversarial_t4(g, 8, 2, 10, 0), Error);
  EXPECT_THROW(adversarial_t4(g, 8, 5, 100, 0), Error);
  EXPECT_NO_THROW(adversarial_t4(g, 8, 5, 99, 0));
}

TEST(AdversarialT4, BlockCountFollowsTheFormula) {
  SideInfoGraph g = random_connected_graph(100, 0.02, 2);
  auto inst = adversarial_t4(g, 24, 9, 1000, 3);  // block size 5, two blocks fit
  EXPECT_EQ(inst.block_size, 5u);
  EXPECT_EQ(inst.z, 2u);
  EXPECT_EQ(inst.blocks.size(), 2u);
  for (const auto& block : inst.blocks) EXPECT_EQ(block.size(), 5u);
  auto capped = adversarial_t4(g, 24, 5, 2400, 3);  // floor(bm/n^2) = 5, capped by (k-1)/2 = 2
  EXPECT_EQ(capped.z, 2u);
  auto single = adversarial_t4(g, 8, 9, 100, 3);  // block size 50 exceeds floor(b/2) = 4
  EXPECT_EQ(single.z, 1u);
  EXPECT_EQ(single.blocks.front(), single.v_b);
}

TEST(AdversarialT4, BlocksAlwaysFitWithoutClamping) {
  // Under m < n^2/4, floor(bm/n^2) never exceeds floor(floor(b/2) / floor(n^2/2m)).
  for (std::uint64_t n = 8; n <= 60; n += 4) {
    SideInfoGraph g = random_connected_graph(n, 0.1, n);
    for (std::uint64_t b = 4; b < n; b += 3) {
      for (std::uint64_t m = 1; 4 * m < n * n; m += 1 + m / 3) {
        auto inst = adversarial_t4(g, b, 41, m, b * 1000 + m);
        const std::uint64_t formula =
            std::min<std::uint64_t>(std::max<std::uint64_t>(b * m / (n * n), 1), 20);
        EXPECT_FALSE(inst.z_clamped);
        if (b / 2 >= inst.block_size) {
          EXPECT_EQ(inst.z, formula);
        } else {
          EXPECT_EQ(inst.z, 1u);
        }
      }
    }
  }
}

TEST(AdversarialT4, IsolatedFractionOfABlockIsAtLeastOneOverE) {
  // Single-block regime with blocks of size floor(n^2 / 2m).
  const std::size_t n = 60;
  const std::uint64_t m = 90;  // block size 20
  SideInfoGraph g = random_connected_graph(n, 0.05, 4);
  double total = 0.0;
  const int seeds = 400;
  for (int s = 0; s < seeds; ++s) {
    auto inst = adversarial_t4(g, 44, 3, m, s);
    ASSERT_EQ(inst.block_size, 20u);
    for (const auto& h : inst.h_sets) total += static_cast<double>(h.size());
  }
  EXPECT_GE(total / seeds, 20.0 / std::exp(1.0) * 0.95);
}

TEST(ErdosRenyi, ExtremesAndDensity) {
  EXPECT_EQ(isolated_count(erdos_renyi(30, 0.0, 1)), 30u);
  EXPECT_EQ(isolated_count(erdos_renyi(30, 1.0, 1)), 0u);
  EXPECT_EQ(erdos_renyi(30, 1.0, 1).pair_count(), 435u);
  EXPECT_THROW(erdos_renyi(10, 1.5, 1), Error);
  const std::size_t n = 200;
  const double p = 0.1;
  const double pairs = n * (n - 1) / 2.0;
  SimilarityGraph g = erdos_renyi(n, p, 5);
  const double density = g.pair_count() / pairs;
  EXPECT_NEAR(density, p, 3 * std::sqrt(p * (1 - p) / pairs));
  EXPECT_EQ(g, erdos_renyi(n, p, 5));
}

TEST(RandomConnectedGraph, IsConnectedAndDeterministic) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    SideInfoGraph g = random_connected_graph(50, 0.0, s);
    EXPECT_EQ(g.edge_count(), 49u);
    EXPECT_EQ(g, random_connected_graph(50, 0.0, s));
  }
}

}  // namespace
}  // namespace pairclust
