#include "indexlab/fp_linalg.hpp"

#include "indexlab/errors.hpp"

namespace indexlab {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(FpRows& m, std::size_t cols, const Integer& p)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (auto& r : m)
        for (auto& x : r) x = mod_floor(x, p);
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), m[row][col].get_mpz_t(), p.get_mpz_t());
        for (auto& x : m[row]) x = mod_floor(x * inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Integer f = m[i][col];
            for (std::size_t c = 0; c < cols; ++c) m[i][c] = mod_floor(m[i][c] - f * m[row][c], p);
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

}  // namespace

FpRows left_kernel_mod(const FpRows& a, std::size_t cols, const Integer& p)
{
    // v * A = 0  <=>  A^T v^T = 0: right kernel of the transpose.
    const std::size_t n = a.size();
    FpRows t(cols, FpVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    }
    std::vector<std::size_t> pivots = rref(t, n, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    FpRows basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FpVector v(n, Integer(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_floor(-t[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_mod(FpRows rows, const Integer& p)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    return rref(rows, cols, p).size();
}

FpRows row_space_mod(FpRows rows, const Integer& p)
{
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    rref(rows, cols, p);
    return rows;
}

}  // namespace indexlab
