#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "indexlab/integer.hpp"

namespace indexlab {

/// Dense rectangular integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> row(std::size_t r) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Determinant of a square matrix (fraction-free Bareiss).
    Integer determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

/// Row-style Hermite normal form: H = U*M with U unimodular, H upper
/// triangular (echelon), positive pivots, entries above each pivot reduced
/// into [0, pivot). Throws RankDeficient unless M has full row rank.
HnfResult hnf(const IntMatrix& m);

/// HNF basis of the lattice spanned by the given generators (any number,
/// any rank); zero rows are dropped.
IntMatrix lattice_hnf(const std::vector<std::vector<Integer>>& generators, std::size_t cols);

}  // namespace indexlab
