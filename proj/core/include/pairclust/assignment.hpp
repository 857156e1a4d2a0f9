#pragma once

#include <cstdint>
#include <vector>

namespace pairclust {

/// Maximum-weight assignment on a dense rows x cols matrix (Hungarian method,
/// O(r^2 c) with r = min(rows, cols)). Every row of the smaller side is
/// matched to a distinct column of the larger side; unmatched columns behave
/// like zero-weight padding. Returns the total matched weight.
///
/// If `row_to_col` is non-null it receives, for every row, the matched column.
std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weight,
                                   std::vector<std::size_t>* row_to_col = nullptr);

}  // namespace pairclust
