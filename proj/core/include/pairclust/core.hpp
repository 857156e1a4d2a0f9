#pragma once

// Domain types shared by every module: clusterings, similarity graphs,
// training sets and side-information graphs. Items are dense ids 0..n-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pairclust {

using Item = std::uint32_t;
using ClusterId = std::uint32_t;

/// Unordered pair of distinct items, stored with `u < v`.
struct Pair {
  Item u = 0;
  Item v = 0;

  static Pair make(Item a, Item b) { return a < b ? Pair{a, b} : Pair{b, a}; }
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Partition of items 0..n-1 into k >= 1 nonempty clusters.
///
/// Cluster ids are dense (0..k-1) and normalized so that clusters are
/// numbered in order of their smallest member. Two clusterings that describe
/// the same partition therefore compare equal.
class Clustering {
 public:
  /// Builds from arbitrary per-item labels; labels are renumbered.
  static Clustering from_labels(std::span<const std::uint64_t> labels);
  static Clustering from_labels(std::span<const std::uint32_t> labels);
  /// Builds from explicit member lists. Empty lists are skipped; every item
  /// 0..n-1 must appear exactly once.
  static Clustering from_clusters(std::size_t n, const std::vector<std::vector<Item>>& clusters);
  static Clustering singletons(std::size_t n);
  static Clustering single_cluster(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t cluster_count() const { return sizes_.size(); }
  ClusterId label(Item v) const { return labels_[v]; }
  std::span<const ClusterId> labels() const { return labels_; }
  std::span<const std::size_t> sizes() const { return sizes_; }
  std::size_t cluster_size(ClusterId c) const { return sizes_[c]; }

  /// Members of every cluster, each sorted ascending, indexed by cluster id.
  std::vector<std::vector<Item>> clusters() const;
  /// Cluster sizes sorted ascending (the d_1 <= ... <= d_k convention).
  std::vector<std::size_t> sorted_sizes() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  Clustering() = default;
  std::vector<ClusterId> labels_;
  std::vector<std::size_t> sizes_;
};

/// Symmetric similarity relation over item pairs, without the diagonal.
///
/// Stored as a compressed adjacency structure: each item's neighbors are a
/// sorted, duplicate-free slice. Self-pairs in the input are dropped.
class SimilarityGraph {
 public:
  SimilarityGraph() = default;
  SimilarityGraph(std::size_t n, std::span<const Pair> pairs);

  /// Takes ownership of per-item neighbor lists. Lists must already be
  /// symmetric; they are sorted and deduplicated here.
  static SimilarityGraph from_adjacency(std::vector<std::vector<Item>> adjacency);

  std::size_t size() const { return n_; }
  std::size_t pair_count() const { return neighbors_.size() / 2; }
  std::span<const Item> neighbors(Item v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Item v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(Item a, Item b) const;

  /// All pairs in lexicographic order.
  std::vector<Pair> pairs() const;

  friend bool operator==(const SimilarityGraph& a, const SimilarityGraph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Item> neighbors_;
};

/// One labeled training example: y = 1 means "v and w are similar".
struct LabeledPair {
  Item v = 0;
  Item w = 0;
  std::uint8_t y = 0;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

/// Ordered multiset of labeled pairs drawn from V x V. Duplicates and
/// self-pairs are legal.
class TrainingSet {
 public:
  TrainingSet() = default;
  TrainingSet(std::size_t n, std::vector<LabeledPair> entries);

  std::size_t item_count() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const LabeledPair> entries() const { return entries_; }

  friend bool operator==(const TrainingSet&, const TrainingSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LabeledPair> entries_;
};

/// Connected, undirected, unweighted graph carrying side information.
/// Construction throws `Error` if the graph is disconnected.
class SideInfoGraph {
 public:
  SideInfoGraph(std::size_t n, std::span<const Pair> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges in lexicographic order; other modules index per-edge data by
  /// position in this list.
  std::span<const Pair> edges() const { return edges_; }
  std::span<const Item> neighbors(Item v) const { return adjacency_.neighbors(v); }
  std::size_t degree(Item v) const { return adjacency_.degree(v); }
  const SimilarityGraph& adjacency() const { return adjacency_; }

  friend bool operator==(const SideInfoGraph& a, const SideInfoGraph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  SimilarityGraph adjacency_;
  std::vector<Pair> edges_;
};

/// Disjoint union of cliques: {v,w} is present iff v and w share a cluster.
SimilarityGraph clustering_to_similarity(const Clustering& c);

/// Returns the clustering whose clusters are the connected components of `g`
/// when every component is a clique (the relation is transitive).
std::optional<Clustering> similarity_is_clustering(const SimilarityGraph& g);

/// Connected components of an arbitrary similarity graph, as a clustering.
Clustering connected_components(const SimilarityGraph& g);

}  // namespace pairclust
