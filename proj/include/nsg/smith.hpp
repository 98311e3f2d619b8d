#pragma once

#include <cstdlib>
#include <vector>

#include "nsg/bigint.hpp"

namespace nsg {

using Matrix = std::vector<std::vector<Int>>;

struct SmithResult {
    int rank = 0;
    std::vector<Int> divisors;  // invariant factors d1 | d2 | ..., all positive
};

// Smith normal form by repeated gcd pivoting.  Destroys its argument.
inline SmithResult smith_normal_form(Matrix m) {
    SmithResult res;
    if (m.empty() || m[0].empty()) return res;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t top = 0;

    auto swap_rows = [&](std::size_t a, std::size_t b) { std::swap(m[a], m[b]); };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    };

    while (top < rows && top < cols) {
        // Locate a nonzero entry of minimal magnitude in the lower-right block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = top; r < rows; ++r)
            for (std::size_t c = top; c < cols; ++c)
                if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;  // block is zero
        swap_rows(top, pr);
        swap_cols(top, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = top + 1; r < rows; ++r) {
                if (m[r][top] == 0) continue;
                Int q = m[r][top] / m[top][top];
                for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
                if (m[r][top] != 0) {  // remainder is smaller; make it the pivot
                    swap_rows(top, r);
                    clean = false;
                }
            }
            for (std::size_t c = top + 1; c < cols; ++c) {
                if (m[top][c] == 0) continue;
                Int q = m[top][c] / m[top][top];
                for (std::size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
                if (m[top][c] != 0) {
                    swap_cols(top, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide every remaining entry; fold in a bad row.
            for (std::size_t r = top + 1; r < rows && clean; ++r)
                for (std::size_t c = top + 1; c < cols && clean; ++c)
                    if (m[r][c] % m[top][top] != 0) {
                        for (std::size_t cc = top; cc < cols; ++cc) m[top][cc] += m[r][cc];
                        clean = false;
                    }
        }
        if (m[top][top] < 0)
            for (std::size_t c = top; c < cols; ++c) m[top][c] = -m[top][c];
        res.divisors.push_back(m[top][top]);
        ++top;
    }
    res.rank = static_cast<int>(res.divisors.size());
    return res;
}

inline int matrix_rank(const Matrix& m) { return smith_normal_form(m).rank; }

}  // namespace nsg
