#include "pairclust/graph.hpp"

#include "pairclust/error.hpp"

namespace pairclust {
namespace {

void require_same_size(const SideInfoGraph& g, std::size_t n) {
  if (g.size() != n) {
    throw Error("side-information graph has " + std::to_string(g.size()) + " nodes but labeling covers " +
                std::to_string(n) + " items");
  }
}

template <typename Similar>
std::vector<std::size_t> collect_cut_edges(const SideInfoGraph& g, Similar&& similar) {
  std::vector<std::size_t> out;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!similar(edges[i].u, edges[i].v)) out.push_back(i);
  }
  return out;
}

double weighted_sum(const SideInfoGraph& g, std::span<const std::size_t> cut, const ResistanceOptions& options) {
  if (cut.empty()) return 0.0;
  std::vector<Pair> pairs;
  pairs.reserve(cut.size());
  for (std::size_t i : cut) pairs.push_back(g.edges()[i]);
  auto table = effective_resistance(g, pairs, options);
  double total = 0.0;
  for (const Pair& p : pairs) total += table.at(p.u, p.v);
  return total;
}

}  // namespace

std::vector<std::size_t> cut_edges(const SideInfoGraph& g, const Clustering& y) {
  require_same_size(g, y.size());
  return collect_cut_edges(g, [&](Item a, Item b) { return y.label(a) == y.label(b); });
}

std::vector<std::size_t> cut_edges(const SideInfoGraph& g, const SimilarityGraph& y) {
  require_same_size(g, y.size());
  return collect_cut_edges(g, [&](Item a, Item b) { return y.contains(a, b); });
}

std::uint64_t cut_size(const SideInfoGraph& g, const Clustering& y) { return cut_edges(g, y).size(); }

std::uint64_t cut_size(const SideInfoGraph& g, const SimilarityGraph& y) { return cut_edges(g, y).size(); }

double resistance_weighted_cut_size(const SideInfoGraph& g, const Clustering& y, const ResistanceOptions& options) {
  return weighted_sum(g, cut_edges(g, y), options);
}

double resistance_weighted_cut_size(const SideInfoGraph& g, const SimilarityGraph& y,
                                    const ResistanceOptions& options) {
  return weighted_sum(g, cut_edges(g, y), options);
}

double resistance_weighted_cut_size(const SideInfoGraph& g, const Clustering& y, std::span<const double> edge_r) {
  if (edge_r.size() != g.edge_count()) throw Error("edge resistance vector does not match the edge list");
  double total = 0.0;
  for (std::size_t i : cut_edges(g, y)) total += edge_r[i];
  return total;
}

}  // namespace pairclust
