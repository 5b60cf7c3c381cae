#include "lgft/linalg.hpp"

namespace lgft {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> eliminate(RatMatrix& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        Rat inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = eliminate(a);
    // Inconsistent if a pivot landed in the augmented column.
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols) return std::nullopt;
    for (size_t i = pivots.size(); i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<std::vector<Rat>> nullspace(RatMatrix a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<size_t> pivots = eliminate(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lgft
