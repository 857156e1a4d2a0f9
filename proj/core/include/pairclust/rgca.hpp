#pragma once

// Robust Greedy Clustering.
//
// Stage 1 replaces the input similarity graph P by a robustified graph Q:
// v and w are joined in Q when the Jaccard distance between their closed
// neighborhoods in P is at most 1 - a. Stage 2 repeatedly picks the
// unassigned item with the largest closed Q-neighborhood among unassigned
// items and emits that neighborhood as the next cluster.

#include <vector>

#include "pairclust/core.hpp"
#include "pairclust/rational.hpp"

namespace pairclust {

struct RobustGraph {
  SimilarityGraph q;
  Rational a;
};

struct RgcaOptions {
  /// Workers for the all-pairs stage (0 = `thread_count()`). Output does not
  /// depend on this value.
  std::size_t threads = 0;
};

/// Default distance parameter; the worst-case ER guarantee is stated for it.
inline const Rational kDefaultDistanceParameter{2, 3};

/// Throws `Error` unless 0 <= a <= 1. The boundary case dist == 1 - a is
/// included in Q.
RobustGraph build_robust_graph(const SimilarityGraph& p, Rational a, const RgcaOptions& options = {});

/// One extraction round: the selected center and the emitted cluster.
struct ExtractionStep {
  Item center = 0;
  std::vector<Item> members;  // sorted ascending
};

/// Greedy extraction with the full round-by-round trace. Ties in the argmax
/// go to the lowest item id.
std::vector<ExtractionStep> greedy_extract_trace(const SimilarityGraph& q);

Clustering greedy_extract(const RobustGraph& q);
Clustering greedy_extract(const SimilarityGraph& q);

Clustering rgca(const SimilarityGraph& p, Rational a = kDefaultDistanceParameter, const RgcaOptions& options = {});

}  // namespace pairclust
