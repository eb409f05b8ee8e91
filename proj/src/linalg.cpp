#include "crmin/linalg.hpp"

#include "crmin/errors.hpp"

namespace crmin {

ScalarMatrix identity_matrix(std::size_t n) {
    ScalarMatrix a(n, std::vector<GaussianRational>(n, GaussianRational(0)));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = GaussianRational(1);
    return a;
}

std::size_t rank(ScalarMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    GaussianRational prev_pivot(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // First nonzero entry in the remaining column, for determinism.
        std::size_t pivot_row = r;
        while (pivot_row < rows && a[pivot_row][c].is_zero()) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[r], a[pivot_row]);
        const GaussianRational pivot = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][c] * a[r][j]) / prev_pivot;
            a[i][c] = GaussianRational(0);
        }
        prev_pivot = pivot;
        ++r;
    }
    return r;
}

bool extends_row_space(const std::vector<std::vector<GaussianRational>>& rows,
                       const std::vector<GaussianRational>& row) {
    ScalarMatrix stacked = rows;
    stacked.push_back(row);
    return rank(std::move(stacked)) > rows.size();
}

ScalarMatrix invert(ScalarMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw ValidationError("invert: matrix is not square");
    ScalarMatrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot_row = c;
        while (pivot_row < n && a[pivot_row][c].is_zero()) ++pivot_row;
        if (pivot_row == n) throw ValidationError("invert: singular matrix");
        std::swap(a[c], a[pivot_row]);
        std::swap(inv[c], inv[pivot_row]);
        const GaussianRational pivot = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = a[c][j] / pivot;
            inv[c][j] = inv[c][j] / pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const GaussianRational factor = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= factor * a[c][j];
                inv[i][j] -= factor * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace crmin
