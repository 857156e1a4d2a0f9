#pragma once

// Side-information graph quantities: effective resistance, cut-size and
// resistance-weighted cut-size, and uniform spanning tree sampling.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pairclust/core.hpp"

namespace pairclust {

struct ResistanceOptions {
  /// Graphs with at most this many nodes use a dense Cholesky factorization
  /// of the grounded Laplacian; larger graphs use Jacobi-preconditioned
  /// conjugate gradients.
  std::size_t dense_limit = 2000;
  /// Relative residual bound for the iterative solver.
  double tolerance = 1e-10;
  /// Worker count for per-source solves (0 = `thread_count()`).
  std::size_t threads = 0;
};

/// Effective resistances for a set of queried pairs.
class ResistanceTable {
 public:
  ResistanceTable(std::map<Pair, double> values, double solver_tolerance)
      : values_(std::move(values)), solver_tolerance_(solver_tolerance) {}

  /// r(v, w); zero when v == w. Throws `Error` for pairs that were not queried.
  double at(Item v, Item w) const;
  std::size_t size() const { return values_.size(); }
  double solver_tolerance() const { return solver_tolerance_; }
  const std::map<Pair, double>& values() const { return values_; }

 private:
  std::map<Pair, double> values_;
  double solver_tolerance_;
};

/// r_G(v,w) = (e_v - e_w)^T L^+ (e_v - e_w) for each requested pair. One
/// grounded Laplacian solve is performed per distinct endpoint and shared by
/// every pair touching it.
ResistanceTable effective_resistance(const SideInfoGraph& g, std::span<const Pair> pairs,
                                     const ResistanceOptions& options = {});

/// Resistance of every edge, aligned with `g.edges()`.
std::vector<double> edge_resistances(const SideInfoGraph& g, const ResistanceOptions& options = {});

/// Sum of r_G over all edges; equals n - 1 up to solver accuracy.
double resistance_sum_check(const SideInfoGraph& g, const ResistanceOptions& options = {});

/// Number of edges whose endpoints are dissimilar under `y`.
std::uint64_t cut_size(const SideInfoGraph& g, const Clustering& y);
std::uint64_t cut_size(const SideInfoGraph& g, const SimilarityGraph& y);

/// Indices (into `g.edges()`) of the cut edges.
std::vector<std::size_t> cut_edges(const SideInfoGraph& g, const Clustering& y);
std::vector<std::size_t> cut_edges(const SideInfoGraph& g, const SimilarityGraph& y);

/// Sum of effective resistances over the cut edges.
double resistance_weighted_cut_size(const SideInfoGraph& g, const Clustering& y, const ResistanceOptions& options = {});
double resistance_weighted_cut_size(const SideInfoGraph& g, const SimilarityGraph& y,
                                    const ResistanceOptions& options = {});
/// Variant reusing precomputed `edge_resistances(g)`.
double resistance_weighted_cut_size(const SideInfoGraph& g, const Clustering& y, std::span<const double> edge_r);

/// Uniform random spanning tree via Wilson's loop-erased random walks,
/// rooted at vertex 0. Returns n - 1 edges in lexicographic order.
std::vector<Pair> sample_spanning_tree(const SideInfoGraph& g, std::uint64_t seed);

}  // namespace pairclust
