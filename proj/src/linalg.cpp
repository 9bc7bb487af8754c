#include "umbra/linalg.hpp"

#include <stdexcept>

namespace umbra::detail {

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
    const size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve_exact: size mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();

    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        const Rational inv = a[rank][c].inv();
        for (size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    // Inconsistent if any zero row has a nonzero right-hand side.
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    // Underdetermined if some column has no pivot.
    if (rank < cols) return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace umbra::detail
