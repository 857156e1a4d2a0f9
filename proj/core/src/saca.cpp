#include "pairclust/saca.hpp"

#include <deque>
#include <limits>
#include <numeric>

#include "pairclust/error.hpp"

namespace pairclust {
namespace {

void check_items(std::size_t n, const TrainingSet& s) {
  if (s.item_count() != n) {
    throw Error("training set is over " + std::to_string(s.item_count()) + " items, expected " + std::to_string(n));
  }
}

}  // namespace

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  if (n > std::numeric_limits<Item>::max()) throw Error("too many items");
  std::iota(parent_.begin(), parent_.end(), Item{0});
}

Item UnionFind::find(Item v) {
  Item root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    Item next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

bool UnionFind::unite(Item a, Item b) {
  Item ra = find(a);
  Item rb = find(b);
  if (ra == rb) return false;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  --components_;
  return true;
}

Clustering UnionFind::to_clustering() {
  std::vector<std::uint32_t> labels(parent_.size());
  for (std::size_t v = 0; v < parent_.size(); ++v) labels[v] = find(static_cast<Item>(v));
  return Clustering::from_labels(std::span<const std::uint32_t>(labels));
}

Clustering saca(std::size_t n, const TrainingSet& s) {
  check_items(n, s);
  UnionFind uf(n);
  for (const LabeledPair& e : s.entries()) {
    if (e.y == 1) uf.unite(e.v, e.w);
  }
  return uf.to_clustering();
}

Clustering positive_component_oracle(std::size_t n, const TrainingSet& s) {
  check_items(n, s);
  std::vector<std::vector<Item>> adjacency(n);
  for (const LabeledPair& e : s.entries()) {
    if (e.y != 1 || e.v == e.w) continue;
    adjacency[e.v].push_back(e.w);
    adjacency[e.w].push_back(e.v);
  }
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(n, kUnset);
  std::deque<Item> queue;
  std::uint32_t next = 0;
  for (Item start = 0; start < n; ++start) {
    if (comp[start] != kUnset) continue;
    comp[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      Item v = queue.front();
      queue.pop_front();
      for (Item w : adjacency[v]) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return Clustering::from_labels(std::span<const std::uint32_t>(comp));
}

}  // namespace pairclust
