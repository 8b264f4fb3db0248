#pragma once

#include <vector>

#include "darboux/numeric.hpp"

namespace darboux {

struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> particular;            // free variables set to 0
    std::vector<std::vector<Rational>> nullspace; // basis, ordered by free column
    std::vector<int> pivot_cols;
};

/// Solve A x = b over Q. Forward elimination is fraction-free (Bareiss);
/// pivoting is deterministic: columns in order, first row with a nonzero
/// entry.
inline LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        if (row.size() != cols) throw std::domain_error("ragged matrix");
    if (b.size() != rows) throw std::domain_error("rhs size mismatch");

    LinearSolution out;
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t rank = 0;
    Rational prev(1);
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            std::swap(a[piv], a[rank]);
            std::swap(b[piv], b[rank]);
        }
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            b[r] = (a[rank][col] * b[r] - a[r][col] * b[rank]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        pivot_row_of_col[col] = static_cast<int>(rank);
        out.pivot_cols.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (b[r] != 0) { out.consistent = false; return out; }
    out.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (int c : out.pivot_cols) is_pivot[c] = true;

    auto back_substitute = [&](const std::vector<Rational>& free_vals, const std::vector<Rational>& rhs) {
        std::vector<Rational> x(cols, Rational(0));
        size_t fi = 0;
        for (size_t c = 0; c < cols; ++c)
            if (!is_pivot[c]) x[c] = free_vals[fi++];
        for (int pi = static_cast<int>(out.pivot_cols.size()) - 1; pi >= 0; --pi) {
            int pc = out.pivot_cols[pi];
            int pr = pivot_row_of_col[pc];
            Rational acc = rhs[pr];
            for (size_t c = pc + 1; c < cols; ++c)
                if (a[pr][c] != 0) acc -= a[pr][c] * x[c];
            x[pc] = acc / a[pr][pc];
        }
        return x;
    };

    size_t nfree = cols - rank;
    std::vector<Rational> zero_rhs(rows, Rational(0));
    out.particular = back_substitute(std::vector<Rational>(nfree, Rational(0)), b);
    for (size_t k = 0; k < nfree; ++k) {
        std::vector<Rational> fv(nfree, Rational(0));
        fv[k] = 1;
        out.nullspace.push_back(back_substitute(fv, zero_rhs));
    }
    return out;
}

} // namespace darboux
