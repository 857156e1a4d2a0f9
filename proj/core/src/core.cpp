#include "pairclust/core.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "pairclust/error.hpp"

namespace pairclust {
namespace {

template <typename Label>
void normalize(std::span<const Label> raw, std::vector<ClusterId>& labels, std::vector<std::size_t>& sizes) {
  if (raw.empty()) throw Error("clustering must contain at least one item");
  if (raw.size() > std::numeric_limits<Item>::max()) throw Error("too many items");
  std::unordered_map<Label, ClusterId> remap;
  labels.resize(raw.size());
  sizes.clear();
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = remap.try_emplace(raw[v], static_cast<ClusterId>(sizes.size()));
    if (inserted) sizes.push_back(0);
    labels[v] = it->second;
    ++sizes[it->second];
  }
}

}  // namespace

Clustering Clustering::from_labels(std::span<const std::uint64_t> labels) {
  Clustering c;
  normalize(labels, c.labels_, c.sizes_);
  return c;
}

Clustering Clustering::from_labels(std::span<const std::uint32_t> labels) {
  Clustering c;
  normalize(labels, c.labels_, c.sizes_);
  return c;
}

Clustering Clustering::from_clusters(std::size_t n, const std::vector<std::vector<Item>>& clusters) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw(n, kUnset);
  std::uint32_t next = 0;
  for (const auto& members : clusters) {
    if (members.empty()) continue;
    for (Item v : members) {
      if (v >= n) throw Error("cluster member " + std::to_string(v) + " out of range");
      if (raw[v] != kUnset) throw Error("item " + std::to_string(v) + " appears in two clusters");
      raw[v] = next;
    }
    ++next;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (raw[v] == kUnset) throw Error("item " + std::to_string(v) + " is not assigned to any cluster");
  }
  return from_labels(std::span<const std::uint32_t>(raw));
}

Clustering Clustering::singletons(std::size_t n) {
  std::vector<std::uint32_t> raw(n);
  for (std::size_t v = 0; v < n; ++v) raw[v] = static_cast<std::uint32_t>(v);
  return from_labels(std::span<const std::uint32_t>(raw));
}

Clustering Clustering::single_cluster(std::size_t n) {
  std::vector<std::uint32_t> raw(n, 0);
  return from_labels(std::span<const std::uint32_t>(raw));
}

std::vector<std::vector<Item>> Clustering::clusters() const {
  std::vector<std::vector<Item>> out(sizes_.size());
  for (std::size_t c = 0; c < sizes_.size(); ++c) out[c].reserve(sizes_[c]);
  for (std::size_t v = 0; v < labels_.size(); ++v) out[labels_[v]].push_back(static_cast<Item>(v));
  return out;
}

std::vector<std::size_t> Clustering::sorted_sizes() const {
  std::vector<std::size_t> s(sizes_.begin(), sizes_.end());
  std::sort(s.begin(), s.end());
  return s;
}

SimilarityGraph::SimilarityGraph(std::size_t n, std::span<const Pair> pairs) : n_(n) {
  if (n > std::numeric_limits<Item>::max()) throw Error("too many items");
  std::vector<std::size_t> degree(n + 1, 0);
  for (const Pair& p : pairs) {
    if (p.u >= n || p.v >= n) {
      throw Error("pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ") out of range for n=" +
                  std::to_string(n));
    }
    if (p.u == p.v) continue;
    ++degree[p.u];
    ++degree[p.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Pair& p : pairs) {
    if (p.u == p.v) continue;
    neighbors_[cursor[p.u]++] = p.v;
    neighbors_[cursor[p.v]++] = p.u;
  }
  // Sort and deduplicate each slice, then compact.
  std::size_t write = 0;
  std::vector<std::size_t> new_offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) neighbors_[write++] = *it;
    new_offsets[v + 1] = write;
  }
  neighbors_.resize(write);
  neighbors_.shrink_to_fit();
  offsets_ = std::move(new_offsets);
}

SimilarityGraph SimilarityGraph::from_adjacency(std::vector<std::vector<Item>> adjacency) {
  SimilarityGraph g;
  g.n_ = adjacency.size();
  g.offsets_.assign(g.n_ + 1, 0);
  for (std::size_t v = 0; v < g.n_; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase(list, static_cast<Item>(v));
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.neighbors_.reserve(g.offsets_[g.n_]);
  for (std::size_t v = 0; v < g.n_; ++v) {
    for (Item w : adjacency[v]) {
      if (w >= g.n_) throw Error("neighbor id out of range");
      g.neighbors_.push_back(w);
    }
    std::vector<Item>().swap(adjacency[v]);
  }
  return g;
}

bool SimilarityGraph::contains(Item a, Item b) const {
  if (a >= n_ || b >= n_ || a == b) return false;
  auto nb = degree(a) <= degree(b) ? neighbors(a) : neighbors(b);
  Item target = degree(a) <= degree(b) ? b : a;
  return std::binary_search(nb.begin(), nb.end(), target);
}

std::vector<Pair> SimilarityGraph::pairs() const {
  std::vector<Pair> out;
  out.reserve(pair_count());
  for (Item v = 0; v < n_; ++v) {
    for (Item w : neighbors(v)) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

TrainingSet::TrainingSet(std::size_t n, std::vector<LabeledPair> entries) : n_(n), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.v >= n || e.w >= n) {
      throw Error("training pair (" + std::to_string(e.v) + "," + std::to_string(e.w) + ") out of range for n=" +
                  std::to_string(n));
    }
    if (e.y > 1) throw Error("training label must be 0 or 1");
  }
}

SideInfoGraph::SideInfoGraph(std::size_t n, std::span<const Pair> edges) : adjacency_(n, edges) {
  if (n == 0) throw Error("side-information graph must have at least one node");
  for (const Pair& e : edges) {
    if (e.u == e.v) throw Error("side-information graph may not contain self-loops");
  }
  edges_ = adjacency_.pairs();
  if (connected_components(adjacency_).cluster_count() != 1) {
    throw Error("side-information graph is not connected");
  }
}

SimilarityGraph clustering_to_similarity(const Clustering& c) {
  std::vector<std::vector<Item>> adjacency(c.size());
  auto clusters = c.clusters();
  for (const auto& members : clusters) {
    for (Item v : members) {
      auto& list = adjacency[v];
      list.reserve(members.size() - 1);
      for (Item w : members) {
        if (w != v) list.push_back(w);
      }
    }
  }
  return SimilarityGraph::from_adjacency(std::move(adjacency));
}

Clustering connected_components(const SimilarityGraph& g) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.size(), kUnset);
  std::vector<Item> stack;
  std::uint32_t next = 0;
  for (Item s = 0; s < g.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Item v = stack.back();
      stack.pop_back();
      for (Item w : g.neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return Clustering::from_labels(std::span<const std::uint32_t>(comp));
}

std::optional<Clustering> similarity_is_clustering(const SimilarityGraph& g) {
  Clustering comps = connected_components(g);
  // A component is a clique iff every member's degree is (size - 1).
  for (Item v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 != comps.cluster_size(comps.label(v))) return std::nullopt;
  }
  return comps;
}

}  // namespace pairclust
