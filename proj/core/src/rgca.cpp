#include "pairclust/rgca.hpp"

#include <algorithm>
#include <queue>

#include "int128.hpp"
#include "pairclust/error.hpp"
#include "pairclust/metrics.hpp"
#include "pairclust/parallel.hpp"

namespace pairclust {
namespace {

// Closed neighborhoods of P in compressed form.
struct Neighborhoods {
  std::vector<std::size_t> offsets;
  std::vector<Item> items;

  std::span<const Item> operator[](Item v) const {
    return {items.data() + offsets[v], items.data() + offsets[v + 1]};
  }
  std::size_t size_of(Item v) const { return offsets[v + 1] - offsets[v]; }
};

Neighborhoods closed_neighborhoods(const SimilarityGraph& p) {
  Neighborhoods gamma;
  const std::size_t n = p.size();
  gamma.offsets.resize(n + 1, 0);
  for (Item v = 0; v < n; ++v) gamma.offsets[v + 1] = gamma.offsets[v] + p.degree(v) + 1;
  gamma.items.reserve(gamma.offsets[n]);
  for (Item v = 0; v < n; ++v) {
    auto closed = closed_neighborhood(p, v);
    gamma.items.insert(gamma.items.end(), closed.begin(), closed.end());
  }
  return gamma;
}

}  // namespace

RobustGraph build_robust_graph(const SimilarityGraph& p, Rational a, const RgcaOptions& options) {
  if (a < Rational(0) || a > Rational(1)) throw Error("distance parameter a must lie in [0,1], got " + a.to_string());
  const std::size_t n = p.size();
  const auto num = static_cast<std::uint64_t>(a.num());
  const auto den = static_cast<std::uint64_t>(a.den());
  const Neighborhoods gamma = closed_neighborhoods(p);

  // rows[v] holds the Q-neighbors w > v.
  std::vector<std::vector<Item>> rows(n);
  parallel_for(
      n,
      [&](std::size_t vi) {
        const auto v = static_cast<Item>(vi);
        auto& row = rows[v];
        const auto gv = gamma[v];
        for (Item w = v + 1; w < n; ++w) {
          const auto gw = gamma[w];
          const std::uint64_t small = std::min(gv.size(), gw.size());
          const std::uint64_t large = std::max(gv.size(), gw.size());
          // dist >= 1 - small/large, so the pair fails whenever small/large < a.
          if (den * small < num * large) continue;
          const JaccardCounts jc = jaccard_counts_sorted(gv, gw);
          // dist <= 1 - a  <=>  den * sym <= (den - num) * union
          if (static_cast<detail::uint128>(den) * jc.symmetric_difference <=
              static_cast<detail::uint128>(den - num) * jc.union_size) {
            row.push_back(w);
          }
        }
      },
      options.threads);

  std::vector<std::vector<Item>> adjacency(n);
  for (Item v = 0; v < n; ++v) {
    for (Item w : rows[v]) {
      adjacency[v].push_back(w);
      adjacency[w].push_back(v);
    }
    std::vector<Item>().swap(rows[v]);
  }
  return {SimilarityGraph::from_adjacency(std::move(adjacency)), a};
}

std::vector<ExtractionStep> greedy_extract_trace(const SimilarityGraph& q) {
  const std::size_t n = q.size();
  // live[v] = |N_t(v)| = 1 + number of unassigned Q-neighbors.
  std::vector<std::size_t> live(n);
  std::vector<char> assigned(n, 0);

  // Max-heap on (count, -id) with lazy deletion: counts only decrease, so an
  // entry is current exactly when its count equals live[v].
  using Entry = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  for (Item v = 0; v < n; ++v) {
    live[v] = q.degree(v) + 1;
    heap.emplace(live[v], -static_cast<std::int64_t>(v));
  }

  std::vector<ExtractionStep> steps;
  std::size_t remaining = n;
  while (remaining > 0) {
    auto [count, neg_id] = heap.top();
    heap.pop();
    const auto center = static_cast<Item>(-neg_id);
    if (assigned[center] || count != live[center]) continue;

    ExtractionStep step;
    step.center = center;
    step.members.push_back(center);
    for (Item w : q.neighbors(center)) {
      if (!assigned[w]) step.members.push_back(w);
    }
    std::sort(step.members.begin(), step.members.end());
    for (Item x : step.members) assigned[x] = 1;
    remaining -= step.members.size();

    for (Item x : step.members) {
      for (Item y : q.neighbors(x)) {
        if (assigned[y]) continue;
        --live[y];
        heap.emplace(live[y], -static_cast<std::int64_t>(y));
      }
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

Clustering greedy_extract(const SimilarityGraph& q) {
  auto steps = greedy_extract_trace(q);
  std::vector<std::uint32_t> labels(q.size(), 0);
  for (std::size_t t = 0; t < steps.size(); ++t) {
    for (Item v : steps[t].members) labels[v] = static_cast<std::uint32_t>(t);
  }
  return Clustering::from_labels(std::span<const std::uint32_t>(labels));
}

Clustering greedy_extract(const RobustGraph& q) { return greedy_extract(q.q); }

Clustering rgca(const SimilarityGraph& p, Rational a, const RgcaOptions& options) {
  return greedy_extract(build_robust_graph(p, a, options));
}

}  // namespace pairclust
