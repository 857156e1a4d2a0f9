#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>

#include "pairclust/error.hpp"
#include "pairclust/graph.hpp"
#include "pairclust/parallel.hpp"

namespace pairclust {
namespace {

// The Laplacian grounded at vertex 0: rows/columns of vertices 1..n-1. Its
// inverse G (padded with a zero row/column for vertex 0) satisfies
// r(v,w) = G_vv + G_ww - 2 G_vw.
Eigen::SparseMatrix<double> grounded_laplacian(const SideInfoGraph& g) {
  const auto dim = static_cast<Eigen::Index>(g.size() - 1);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(g.size() + 2 * g.edge_count());
  for (Item v = 1; v < g.size(); ++v) {
    triplets.emplace_back(v - 1, v - 1, static_cast<double>(g.degree(v)));
    for (Item w : g.neighbors(v)) {
      if (w != 0) triplets.emplace_back(v - 1, w - 1, -1.0);
    }
  }
  Eigen::SparseMatrix<double> lap(dim, dim);
  lap.setFromTriplets(triplets.begin(), triplets.end());
  return lap;
}

// Entries of G needed for a batch of pairs: the diagonal at every endpoint
// and the off-diagonal entry of every pair, taken from the column of the
// pair's first endpoint.
struct Needed {
  std::vector<Item> sources;                        // distinct endpoints, nonzero
  std::vector<std::vector<Item>> partners;          // per source: w with (source, w) queried
};

Needed plan(std::span<const Pair> pairs, std::size_t n) {
  std::vector<std::vector<Item>> by_source(n);
  std::vector<char> is_endpoint(n, 0);
  for (const Pair& p : pairs) {
    if (p.u >= n || p.v >= n) throw Error("resistance query out of range");
    if (p.u == p.v) continue;
    is_endpoint[p.u] = is_endpoint[p.v] = 1;
    by_source[p.u].push_back(p.v);
  }
  Needed out;
  for (Item v = 1; v < n; ++v) {
    if (!is_endpoint[v]) continue;
    out.sources.push_back(v);
    auto& list = by_source[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    out.partners.push_back(std::move(list));
  }
  return out;
}

struct SolvedColumn {
  double diagonal = 0.0;
  std::vector<double> partner_values;  // aligned with Needed::partners
};

std::vector<SolvedColumn> solve_dense(const SideInfoGraph& g, const Needed& need) {
  Eigen::MatrixXd lap = Eigen::MatrixXd(grounded_laplacian(g));
  Eigen::LLT<Eigen::MatrixXd> llt(lap);
  if (llt.info() != Eigen::Success) throw Error("grounded Laplacian factorization failed");
  const auto dim = lap.rows();
  const auto cols = static_cast<Eigen::Index>(need.sources.size());
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(dim, cols);
  for (Eigen::Index c = 0; c < cols; ++c) rhs(need.sources[c] - 1, c) = 1.0;
  Eigen::MatrixXd x = llt.solve(rhs);

  std::vector<SolvedColumn> out(need.sources.size());
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Item s = need.sources[c];
    out[c].diagonal = x(s - 1, c);
    for (Item w : need.partners[c]) out[c].partner_values.push_back(w == 0 ? 0.0 : x(w - 1, c));
  }
  return out;
}

std::vector<SolvedColumn> solve_iterative(const SideInfoGraph& g, const Needed& need,
                                          const ResistanceOptions& options) {
  const Eigen::SparseMatrix<double> lap = grounded_laplacian(g);
  std::vector<SolvedColumn> out(need.sources.size());
  parallel_for(
      need.sources.size(),
      [&](std::size_t c) {
        // Eigen's iterative solvers keep mutable statistics, so each
        // concurrent solve owns its own instance.
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                                 Eigen::DiagonalPreconditioner<double>>
            cg;
        cg.setTolerance(options.tolerance);
        cg.setMaxIterations(std::max<Eigen::Index>(1000, 10 * lap.rows()));
        cg.compute(lap);
        const Item s = need.sources[c];
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(lap.rows());
        rhs(s - 1) = 1.0;
        Eigen::VectorXd x = cg.solve(rhs);
        if (cg.info() != Eigen::Success) {
          throw Error("conjugate gradient did not reach tolerance for source " + std::to_string(s));
        }
        out[c].diagonal = x(s - 1);
        for (Item w : need.partners[c]) out[c].partner_values.push_back(w == 0 ? 0.0 : x(w - 1));
      },
      options.threads);
  return out;
}

// Bridges, by an iterative low-link search. A bridge carries the whole
// current between its sides, so its effective resistance is exactly 1.
std::vector<char> bridge_flags(const SideInfoGraph& g) {
  const std::size_t n = g.size();
  const auto edges = g.edges();
  std::vector<char> bridge(edges.size(), 0);
  if (n == 0) return bridge;
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> order(n, kUnseen), low(n, 0);
  std::vector<Item> parent(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Item> stack{0};
  std::uint32_t clock = 0;
  order[0] = low[0] = clock++;
  while (!stack.empty()) {
    const Item v = stack.back();
    const auto nbrs = g.neighbors(v);
    if (cursor[v] < nbrs.size()) {
      const Item w = nbrs[cursor[v]++];
      if (order[w] == kUnseen) {
        parent[w] = v;
        order[w] = low[w] = clock++;
        stack.push_back(w);
      } else if (!(v != 0 && w == parent[v])) {
        low[v] = std::min(low[v], order[w]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    const Item u = parent[v];
    low[u] = std::min(low[u], low[v]);
    if (low[v] > order[u]) {
      const Pair e = Pair::make(u, v);
      const auto pos = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
      bridge[static_cast<std::size_t>(pos)] = 1;
    }
  }
  return bridge;
}

}  // namespace

double ResistanceTable::at(Item v, Item w) const {
  if (v == w) return 0.0;
  auto it = values_.find(Pair::make(v, w));
  if (it == values_.end()) {
    throw Error("resistance for pair (" + std::to_string(v) + "," + std::to_string(w) + ") was not computed");
  }
  return it->second;
}

ResistanceTable effective_resistance(const SideInfoGraph& g, std::span<const Pair> pairs,
                                     const ResistanceOptions& options) {
  const std::size_t n = g.size();
  std::vector<Pair> normalized;
  normalized.reserve(pairs.size());
  for (const Pair& p : pairs) normalized.push_back(Pair::make(p.u, p.v));

  Needed need = plan(normalized, n);
  std::vector<SolvedColumn> columns;
  if (!need.sources.empty()) {
    columns = n <= options.dense_limit ? solve_dense(g, need) : solve_iterative(g, need, options);
  }

  std::vector<double> diagonal(n, 0.0);
  std::vector<std::size_t> column_of(n, SIZE_MAX);
  for (std::size_t c = 0; c < need.sources.size(); ++c) {
    diagonal[need.sources[c]] = columns[c].diagonal;
    column_of[need.sources[c]] = c;
  }

  const std::vector<char> bridge = bridge_flags(g);
  const auto edges = g.edges();
  std::map<Pair, double> values;
  for (const Pair& p : normalized) {
    if (p.u == p.v) {
      values[p] = 0.0;
      continue;
    }
    double off = 0.0;
    if (p.u != 0) {
      const std::size_t c = column_of[p.u];
      const auto& partners = need.partners[c];
      auto pos = std::lower_bound(partners.begin(), partners.end(), p.v) - partners.begin();
      off = columns[c].partner_values[static_cast<std::size_t>(pos)];
    }
    const auto edge = std::lower_bound(edges.begin(), edges.end(), p);
    if (edge != edges.end() && *edge == p && bridge[static_cast<std::size_t>(edge - edges.begin())]) {
      values[p] = 1.0;
    } else {
      values[p] = std::max(0.0, diagonal[p.u] + diagonal[p.v] - 2.0 * off);
    }
  }
  const double tol = n <= options.dense_limit ? 0.0 : options.tolerance;
  return ResistanceTable(std::move(values), tol);
}

std::vector<double> edge_resistances(const SideInfoGraph& g, const ResistanceOptions& options) {
  auto table = effective_resistance(g, g.edges(), options);
  std::vector<double> out;
  out.reserve(g.edge_count());
  for (const Pair& e : g.edges()) out.push_back(table.at(e.u, e.v));
  return out;
}

double resistance_sum_check(const SideInfoGraph& g, const ResistanceOptions& options) {
  auto r = edge_resistances(g, options);
  double total = 0.0;
  for (double x : r) total += x;
  return total;
}

}  // namespace pairclust
