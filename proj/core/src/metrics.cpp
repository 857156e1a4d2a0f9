#include "pairclust/metrics.hpp"

#include <algorithm>
#include <unordered_map>

#include "int128.hpp"
#include "pairclust/assignment.hpp"
#include "pairclust/error.hpp"

namespace pairclust {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(std::string(what) + ": item counts differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

std::vector<Item> sorted_unique(std::span<const Item> s) {
  std::vector<Item> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Counts of the closed neighborhood of v that fall inside / outside v's own
// cluster. The closed neighborhood always contains v itself.
struct NeighborhoodSplit {
  std::uint64_t inside = 0;   // including v
  std::uint64_t outside = 0;
};

NeighborhoodSplit split_neighborhood(const SimilarityGraph& p, const Clustering& d, Item v) {
  NeighborhoodSplit s{1, 0};
  const ClusterId own = d.label(v);
  for (Item w : p.neighbors(v)) {
    if (d.label(w) == own) {
      ++s.inside;
    } else {
      ++s.outside;
    }
  }
  return s;
}

}  // namespace

Rational JaccardCounts::exact() const {
  return Rational(static_cast<std::int64_t>(symmetric_difference), static_cast<std::int64_t>(union_size));
}

JaccardCounts jaccard_counts_sorted(std::span<const Item> a, std::span<const Item> b) {
  std::uint64_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::uint64_t union_size = a.size() + b.size() - common;
  return {union_size - common, union_size};
}

Rational jaccard_distance(std::span<const Item> a, std::span<const Item> b) {
  auto sa = sorted_unique(a);
  auto sb = sorted_unique(b);
  if (sa.empty() && sb.empty()) throw Error("jaccard distance is undefined for two empty sets");
  return jaccard_counts_sorted(sa, sb).exact();
}

std::vector<Item> closed_neighborhood(const SimilarityGraph& g, Item v) {
  auto nb = g.neighbors(v);
  std::vector<Item> out;
  out.reserve(nb.size() + 1);
  auto pos = std::lower_bound(nb.begin(), nb.end(), v);
  out.insert(out.end(), nb.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, nb.end());
  return out;
}

std::uint64_t hamming_distance(const SimilarityGraph& p, const SimilarityGraph& q) {
  require_same_size(p.size(), q.size(), "hamming_distance");
  std::uint64_t total = 0;
  for (Item v = 0; v < p.size(); ++v) {
    total += jaccard_counts_sorted(p.neighbors(v), q.neighbors(v)).symmetric_difference;
  }
  return total;
}

std::uint64_t hamming_distance(const SimilarityGraph& p, const Clustering& d) {
  require_same_size(p.size(), d.size(), "hamming_distance");
  std::uint64_t total = 0;
  for (Item v = 0; v < p.size(); ++v) {
    auto s = split_neighborhood(p, d, v);
    total += s.outside + (d.cluster_size(d.label(v)) - s.inside);
  }
  return total;
}

std::uint64_t misclassification_error(const Clustering& c, const Clustering& d) {
  require_same_size(c.size(), d.size(), "misclassification_error");
  // Sparse overlap counts; only columns that overlap some row matter, the
  // rest are equivalent to empty padding clusters.
  std::unordered_map<std::uint64_t, std::int64_t> overlap;
  overlap.reserve(std::min(c.size(), c.cluster_count() * d.cluster_count()));
  for (std::size_t v = 0; v < c.size(); ++v) {
    auto key = (static_cast<std::uint64_t>(d.label(static_cast<Item>(v))) << 32) | c.label(static_cast<Item>(v));
    ++overlap[key];
  }
  const std::size_t rows = d.cluster_count();
  const std::size_t cols = c.cluster_count();
  std::vector<std::vector<std::int64_t>> weight(rows, std::vector<std::int64_t>(cols, 0));
  for (const auto& [key, count] : overlap) weight[key >> 32][key & 0xffffffffULL] = count;
  const std::int64_t matched = max_weight_assignment(weight);
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(c.size()) - matched);
}

AnomalyReport count_anomalies(const SimilarityGraph& p, const Clustering& d, Rational b) {
  require_same_size(p.size(), d.size(), "count_anomalies");
  if (b < Rational(0) || b > Rational(1)) throw Error("anomaly threshold b must lie in [0,1]");
  AnomalyReport report{b, {}};
  // dist >= 1 - b  <=>  den * sym >= (den - num) * union
  const auto num = static_cast<detail::uint128>(b.num());
  const auto den = static_cast<detail::uint128>(b.den());
  for (Item v = 0; v < p.size(); ++v) {
    auto s = split_neighborhood(p, d, v);
    const std::uint64_t cluster = d.cluster_size(d.label(v));
    const std::uint64_t union_size = cluster + s.outside;
    const std::uint64_t sym = union_size - s.inside;
    if (den * sym >= (den - num) * union_size) report.anomalies.push_back(v);
  }
  return report;
}

}  // namespace pairclust
