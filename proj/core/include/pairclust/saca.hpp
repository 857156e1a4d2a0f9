#pragma once

// Simple Agglomerative Clustering: start from singletons and merge the
// clusters of v and w for every positively labeled training pair.

#include <vector>

#include "pairclust/core.hpp"

namespace pairclust {

/// Disjoint-set forest with union by rank and full path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  Item find(Item v);
  /// Merges the sets of a and b; returns false if they were already joined.
  bool unite(Item a, Item b);
  bool same(Item a, Item b) { return find(a) == find(b); }

  std::size_t size() const { return parent_.size(); }
  std::size_t component_count() const { return components_; }

  /// Current partition as a clustering.
  Clustering to_clustering();

 private:
  std::vector<Item> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

/// Throws `Error` if `s.item_count() != n`.
Clustering saca(std::size_t n, const TrainingSet& s);

/// Connected components of the positive training pairs by breadth-first
/// search. Independent of the union-find route; used as a cross-check.
Clustering positive_component_oracle(std::size_t n, const TrainingSet& s);

}  // namespace pairclust
