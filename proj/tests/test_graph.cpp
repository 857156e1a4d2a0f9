#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pairclust/error.hpp"
#include "pairclust/gen.hpp"
#include "pairclust/graph.hpp"

namespace pairclust {
namespace {

SideInfoGraph path(std::size_t n) {
  std::vector<Pair> edges;
  for (Item v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return SideInfoGraph(n, edges);
}

SideInfoGraph triangle() { return SideInfoGraph(3, std::vector<Pair>{{0, 1}, {1, 2}, {0, 2}}); }

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (Item v = 0; v < n; ++v) {
    for (Item w = v + 1; w < n; ++w) out.push_back({v, w});
  }
  return out;
}

TEST(Resistance, Examples) {
  EXPECT_NEAR(effective_resistance(path(2), std::vector<Pair>{{0, 1}}).at(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(effective_resistance(path(3), std::vector<Pair>{{0, 2}}).at(2, 0), 2.0, 1e-12);
  auto k3 = effective_resistance(triangle(), std::vector<Pair>{{0, 1}, {1, 2}});
  EXPECT_NEAR(k3.at(0, 1), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(k3.at(1, 2), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(k3.at(1, 1), 0.0);
  EXPECT_THROW(k3.at(0, 2), Error);
}

TEST(Resistance, SingleNodeGraph) {
  SideInfoGraph g(1, std::vector<Pair>{});
  EXPECT_EQ(resistance_sum_check(g), 0.0);
  EXPECT_TRUE(edge_resistances(g).empty());
}

class ResistancePaths : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ResistancePaths, MatchPseudoInverseOracle) {
  ResistanceOptions options;
  options.dense_limit = GetParam();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    auto edges = oracle::random_connected_edges(n, 0.15, rng);
    SideInfoGraph g(n, edges);
    oracle::PseudoInverseResistance ref(n, edges);
    auto pairs = all_pairs(n);
    auto table = effective_resistance(g, pairs, options);
    for (const Pair& p : pairs) EXPECT_NEAR(table.at(p.u, p.v), ref(p.u, p.v), 1e-7);
  }
}

INSTANTIATE_TEST_SUITE_P(DenseAndIterative, ResistancePaths, ::testing::Values(std::size_t{2000}, std::size_t{0}));

TEST(Resistance, TreesGivePathLengths) {
  std::mt19937_64 rng(43);
  auto edges = oracle::random_tree_edges(30, rng);
  SideInfoGraph g(30, edges);
  // Path lengths by BFS from each source.
  auto pairs = all_pairs(30);
  auto table = effective_resistance(g, pairs);
  for (Item s = 0; s < 30; ++s) {
    std::vector<int> dist(30, -1);
    std::vector<Item> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Item w : g.neighbors(queue[head])) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[head]] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Item t = s + 1; t < 30; ++t) EXPECT_NEAR(table.at(s, t), dist[t], 1e-9);
  }
}

TEST(Resistance, BridgesAreExactlyOne) {
  // Triangle 0-1-2 with a pendant path 2-3-4 and a second triangle 4-5-6.
  SideInfoGraph g(7, std::vector<Pair>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  auto r = effective_resistance(g, std::vector<Pair>{{2, 3}, {3, 4}, {0, 1}, {4, 5}});
  EXPECT_EQ(r.at(2, 3), 1.0);
  EXPECT_EQ(r.at(3, 4), 1.0);
  EXPECT_NEAR(r.at(0, 1), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.at(4, 5), 2.0 / 3.0, 1e-12);
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    SideInfoGraph tree(n, oracle::random_tree_edges(n, rng));
    Clustering y = oracle::random_clustering(n, 1 + rng() % 6, rng);
    EXPECT_EQ(resistance_weighted_cut_size(tree, y), static_cast<double>(cut_size(tree, y)));
    EXPECT_EQ(resistance_sum_check(tree), static_cast<double>(n - 1));
  }
}

TEST(Resistance, SumIdentity) {
  EXPECT_NEAR(resistance_sum_check(triangle()), 2.0, 1e-12);
  EXPECT_NEAR(resistance_sum_check(path(10)), 9.0, 1e-12);
  SideInfoGraph er = random_connected_graph(200, 0.03, 5);
  EXPECT_NEAR(resistance_sum_check(er), 199.0, 1e-6);
  ResistanceOptions iterative;
  iterative.dense_limit = 0;
  EXPECT_NEAR(resistance_sum_check(er, iterative), 199.0, 1e-6);
}

TEST(Resistance, MetricAndRayleighMonotonicity) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5 + rng() % 25;
    auto edges = oracle::random_connected_edges(n, 0.1, rng);
    SideInfoGraph g(n, edges);
    auto pairs = all_pairs(n);
    auto r = effective_resistance(g, pairs);
    for (int t = 0; t < 50; ++t) {
      Item a = rng() % n, b = rng() % n, c = rng() % n;
      EXPECT_LE(r.at(a, c), r.at(a, b) + r.at(b, c) + 1e-9);
    }
    // Add one missing edge; no resistance may grow.
    std::set<Pair> present(edges.begin(), edges.end());
    for (const Pair& p : pairs) {
      if (!present.count(p)) {
        auto more = edges;
        more.push_back(p);
        auto r2 = effective_resistance(SideInfoGraph(n, more), pairs);
        for (const Pair& q : pairs) EXPECT_LE(r2.at(q.u, q.v), r.at(q.u, q.v) + 1e-9);
        break;
      }
    }
  }
}

TEST(CutSize, Examples) {
  SideInfoGraph p4 = path(4);
  EXPECT_EQ(cut_size(p4, Clustering::single_cluster(4)), 0u);
  EXPECT_EQ(cut_size(p4, Clustering::singletons(4)), 3u);
  Clustering halves = Clustering::from_clusters(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(cut_size(p4, halves), 1u);
  EXPECT_EQ(cut_size(p4, clustering_to_similarity(halves)), 1u);
  EXPECT_EQ(cut_edges(p4, halves), (std::vector<std::size_t>{1}));
  EXPECT_THROW(cut_size(p4, Clustering::singletons(3)), Error);
}

TEST(ResistanceWeightedCut, Examples) {
  EXPECT_NEAR(resistance_weighted_cut_size(triangle(), Clustering::from_clusters(3, {{0}, {1, 2}})), 4.0 / 3.0, 1e-12);
  EXPECT_EQ(resistance_weighted_cut_size(triangle(), Clustering::single_cluster(3)), 0.0);
}

TEST(ResistanceWeightedCut, EqualsCutSizeOnTreesAndStaysBelowNMinusOne) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    SideInfoGraph tree(n, oracle::random_tree_edges(n, rng));
    Clustering y = oracle::random_clustering(n, 1 + rng() % 5, rng);
    EXPECT_NEAR(resistance_weighted_cut_size(tree, y), static_cast<double>(cut_size(tree, y)), 1e-9);

    SideInfoGraph g(n, oracle::random_connected_edges(n, 0.2, rng));
    const double phi_r = resistance_weighted_cut_size(g, y);
    EXPECT_LE(phi_r, static_cast<double>(n - 1) + 1e-9);
    auto r = edge_resistances(g);
    EXPECT_NEAR(resistance_weighted_cut_size(g, y, r), phi_r, 1e-12);
  }
}

TEST(SpanningTree, IsASpanningTree) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    SideInfoGraph g(n, oracle::random_connected_edges(n, 0.2, rng));
    auto tree = sample_spanning_tree(g, rng());
    ASSERT_EQ(tree.size(), n - 1);
    for (const Pair& e : tree) EXPECT_TRUE(g.adjacency().contains(e.u, e.v));
    EXPECT_NO_THROW(SideInfoGraph(n, tree));  // connected with n-1 edges, hence a tree
    EXPECT_TRUE(std::is_sorted(tree.begin(), tree.end()));
  }
}

TEST(SpanningTree, TreeInputReturnsItself) {
  std::mt19937_64 rng(61);
  auto edges = oracle::random_tree_edges(25, rng);
  SideInfoGraph g(25, edges);
  EXPECT_EQ(sample_spanning_tree(g, 7), std::vector<Pair>(g.edges().begin(), g.edges().end()));
}

TEST(SpanningTree, TriangleTreesAreUniform) {
  std::map<std::vector<Pair>, int> counts;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) ++counts[sample_spanning_tree(triangle(), s)];
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [tree, count] : counts) EXPECT_NEAR(count / double(samples), 1.0 / 3.0, 0.02);
}

TEST(SpanningTree, DeterministicPerSeed) {
  SideInfoGraph g = random_connected_graph(40, 0.2, 3);
  EXPECT_EQ(sample_spanning_tree(g, 99), sample_spanning_tree(g, 99));
}

}  // namespace
}  // namespace pairclust
