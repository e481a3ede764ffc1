#pragma once

#include <cstddef>
#include <vector>

#include "arfbetti/homology.hpp"

namespace arfbetti::detail {

// Rank of the boundary out of dimension d with the columns flagged in
// `cleared_columns` skipped, and the pivot rows reported in `pivot_rows`.
//
// Columns are reduced left to right with the pivot at each column's last
// nonzero row. If a reduced column R of the boundary out of dimension d + 1
// has its pivot at face j, then boundary(R) = 0 writes column j of the
// boundary out of d as a combination of columns before j, all reduced before
// j is reached, so column j would reduce to zero and can be skipped. Passing
// the pivot rows of dimension d + 1 as `cleared_columns` therefore leaves
// the rank unchanged.
std::size_t rank_with_clearing(const BoundaryMatrix& M, const FieldSpec& field,
                               const std::vector<bool>& cleared_columns,
                               std::vector<bool>& pivot_rows);

/// boundary_matrix with the columns flagged in `skip` left empty.
BoundaryMatrix boundary_matrix_skipping(const FaceFamily& faces, int d,
                                        const std::vector<bool>& skip);

}  // namespace arfbetti::detail
