#pragma once

// Instance generators. Every generator is a pure function of its parameters
// and a 64-bit seed.

#include <cstdint>
#include <span>
#include <vector>

#include "pairclust/core.hpp"
#include "pairclust/graph.hpp"

namespace pairclust {

/// Random assignment of items 0..sum(sizes)-1 to clusters of the given sizes.
Clustering planted_clustering(std::span<const std::size_t> sizes, std::uint64_t seed);
/// As above, but checks that the sizes sum to `n`.
Clustering planted_clustering(std::size_t n, std::span<const std::size_t> sizes, std::uint64_t seed);
/// k clusters whose sizes differ by at most one.
Clustering planted_clustering_balanced(std::size_t n, std::size_t k, std::uint64_t seed);

/// m i.i.d. ordered pairs drawn uniformly from V x V (self-pairs included),
/// labeled 1 iff both items share a cluster of `d`.
TrainingSet sample_training_set(const Clustering& d, std::uint64_t m, std::uint64_t seed);

/// The clique graph of `d` with exactly `flips` distinct unordered pairs
/// toggled, so that hamming_distance(result, d) == 2 * flips.
SimilarityGraph perturb_similarity(const Clustering& d, std::uint64_t flips, std::uint64_t seed);

/// Half-split lower-bound construction for consistent algorithms.
struct AdversarialT2 {
  Clustering partition;    // the adversarial clustering P
  SimilarityGraph graph;   // its clique graph
  bool halved_all = false; // first case: every cluster split in half
  std::size_t pivot = 0;   // second case: 0-based rank (ascending size) of the X/Y-split cluster
  std::uint64_t split_size = 0;  // second case: |X|
};

/// Clusters are ranked by ascending size (ties by cluster id). If
/// 2*sigma >= sum d_j^2 every cluster is split into halves (the larger half
/// gets ceil(d/2)); otherwise clusters below the pivot are halved, the pivot
/// cluster loses floor(omega / 2 d_pivot) items to a separate cluster X, and
/// larger clusters stay intact. hamming_distance(graph, d) <= sigma always.
AdversarialT2 adversarial_t2_construction(const Clustering& d, std::uint64_t sigma);
SimilarityGraph adversarial_t2(const Clustering& d, std::uint64_t sigma);

/// Randomized labeling against any learner, with bounded resistance-weighted
/// cut-size.
struct AdversarialInstanceT4 {
  Clustering y;
  TrainingSet s;
  std::vector<std::vector<Item>> h_sets;  // H_1..H_z, each sorted
  std::vector<std::vector<Item>> blocks;  // the blocks of V_b the H sets were drawn from
  std::vector<Item> v_b;                  // sorted
  std::size_t z = 0;
  std::uint64_t b = 0;
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t block_size = 0;  // floor(n^2 / 2m); 0 when m == 0
  bool z_clamped = false;        // z reduced so that z blocks fit in V_b
  double phi_r = 0.0;            // resistance-weighted cut-size of y
};

/// Requires 4 <= b <= n-1, k > 2 and 4m < n^2. Throws `Error` on violated
/// parameter ranges, and if any invariant of the construction fails to hold.
AdversarialInstanceT4 adversarial_t4(const SideInfoGraph& g, std::uint64_t b, std::uint64_t k, std::uint64_t m,
                                     std::uint64_t seed, const ResistanceOptions& options = {});

/// Each unordered pair present independently with probability p.
SimilarityGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
/// Number of degree-zero items.
std::size_t isolated_count(const SimilarityGraph& g);

/// Random recursive tree (each v >= 1 attaches to a uniform earlier vertex)
/// plus every remaining pair independently with probability `extra_p`.
/// Always connected.
SideInfoGraph random_connected_graph(std::size_t n, double extra_p, std::uint64_t seed);

}  // namespace pairclust
