#ifndef CRMIN_LINALG_HPP
#define CRMIN_LINALG_HPP

#include <vector>

#include "crmin/rational.hpp"

namespace crmin {

// Row-major dense matrix over Q(i); only the exact desk-scale operations
// the rank and frame-inversion steps need.
using ScalarMatrix = std::vector<std::vector<GaussianRational>>;

ScalarMatrix identity_matrix(std::size_t n);

// Rank by fraction-free (Bareiss) elimination with full pivoting; every
// division is exact, so the yes/no span decisions carry no thresholds.
std::size_t rank(ScalarMatrix a);

// True iff appending `row` to `rows` raises the rank.
bool extends_row_space(const std::vector<std::vector<GaussianRational>>& rows,
                       const std::vector<GaussianRational>& row);

// Exact inverse via Gauss-Jordan; throws ValidationError when singular.
ScalarMatrix invert(ScalarMatrix a);

} // namespace crmin

#endif
