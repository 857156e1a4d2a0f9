#include "pairclust/assignment.hpp"

#include <limits>

#include "pairclust/error.hpp"

namespace pairclust {
namespace {

// Shortest augmenting path Hungarian algorithm for rows <= cols, minimizing
// cost. Uses 1-based indexing internally; column 0 is a virtual source.
std::vector<std::size_t> solve_min_cost(const std::vector<std::vector<std::int64_t>>& cost, std::size_t rows,
                                        std::size_t cols) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<std::size_t> match(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = match[j0];
      std::size_t j1 = 0;
      std::int64_t delta = kInf;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (match[j] != 0) row_to_col[match[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weight,
                                   std::vector<std::size_t>* row_to_col) {
  const std::size_t rows = weight.size();
  const std::size_t cols = rows == 0 ? 0 : weight.front().size();
  for (const auto& row : weight) {
    if (row.size() != cols) throw Error("assignment matrix rows have unequal length");
  }
  if (rows == 0 || cols == 0) {
    if (row_to_col) row_to_col->clear();
    return 0;
  }

  const bool transpose = rows > cols;
  const std::size_t r = transpose ? cols : rows;
  const std::size_t c = transpose ? rows : cols;
  std::vector<std::vector<std::int64_t>> cost(r, std::vector<std::int64_t>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) cost[i][j] = -(transpose ? weight[j][i] : weight[i][j]);
  }
  auto assignment = solve_min_cost(cost, r, c);

  std::int64_t total = 0;
  for (std::size_t i = 0; i < r; ++i) total -= cost[i][assignment[i]];

  if (row_to_col) {
    if (!transpose) {
      *row_to_col = std::move(assignment);
    } else {
      // Rows of the original matrix outnumber columns; unmatched rows get
      // index `cols` (a padding column).
      row_to_col->assign(rows, cols);
      for (std::size_t i = 0; i < r; ++i) (*row_to_col)[assignment[i]] = i;
    }
  }
  return total;
}

}  // namespace pairclust
