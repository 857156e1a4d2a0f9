#pragma once

// Distances between sets, similarity graphs and clusterings, plus the
// b-anomaly diagnostic.

#include <cstdint>
#include <span>
#include <vector>

#include "pairclust/core.hpp"
#include "pairclust/rational.hpp"

namespace pairclust {

/// Numerator and denominator of the Jaccard distance (|A\B| + |B\A|) / |A u B|.
struct JaccardCounts {
  std::uint64_t symmetric_difference = 0;
  std::uint64_t union_size = 0;

  double value() const { return static_cast<double>(symmetric_difference) / static_cast<double>(union_size); }
  Rational exact() const;
};

/// Linear-merge counting on sorted, duplicate-free ranges. No emptiness
/// check; callers on the hot path guarantee a nonempty union.
JaccardCounts jaccard_counts_sorted(std::span<const Item> a, std::span<const Item> b);

/// Jaccard distance of two finite sets given in any order (duplicates
/// ignored). Throws `Error` when both sets are empty.
Rational jaccard_distance(std::span<const Item> a, std::span<const Item> b);

/// {v} together with v's neighbors, sorted ascending.
std::vector<Item> closed_neighborhood(const SimilarityGraph& g, Item v);

/// Ordered-pair Hamming distance: number of (v,w), v != w, on which the two
/// relations disagree. Each unordered mismatch therefore counts twice.
std::uint64_t hamming_distance(const SimilarityGraph& p, const SimilarityGraph& q);
/// Same as `hamming_distance(p, clustering_to_similarity(d))` without
/// materializing the clique graph.
std::uint64_t hamming_distance(const SimilarityGraph& p, const Clustering& d);

/// Minimum over bijections between the (empty-padded) cluster lists of the
/// number of items outside their matched cluster. Exact: n minus a
/// maximum-weight matching on the cluster overlap matrix.
std::uint64_t misclassification_error(const Clustering& c, const Clustering& d);

struct AnomalyReport {
  Rational b;
  std::vector<Item> anomalies;  // sorted ascending

  std::size_t count() const { return anomalies.size(); }
};

/// Items v whose closed neighborhood in `p` is Jaccard-far from v's own
/// cluster in `d`: dist(D_label(v), Gamma_v) >= 1 - b.
AnomalyReport count_anomalies(const SimilarityGraph& p, const Clustering& d, Rational b = Rational(5, 6));

}  // namespace pairclust
