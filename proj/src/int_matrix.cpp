#include "indexlab/int_matrix.hpp"

#include <sstream>

#include "indexlab/errors.hpp"

namespace indexlab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw Error(ErrorKind::InvalidInput, "ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Row operations shared by hnf() and lattice_hnf(). When `u` is non-null the
// same operations are mirrored onto it. Returns the number of pivots found.
std::size_t echelonize(IntMatrix& h, IntMatrix* u)
{
    const std::size_t rows = h.rows(), cols = h.cols();
    auto combine = [&](IntMatrix& m, std::size_t r1, std::size_t r2, const Integer& x, const Integer& y,
                       const Integer& a, const Integer& b) {
        // (r1, r2) <- (x*r1 + y*r2, -b*r1 + a*r2); determinant x*a + y*b = 1.
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Integer v1 = x * m(r1, c) + y * m(r2, c);
            Integer v2 = a * m(r2, c) - b * m(r1, c);
            m(r1, c) = std::move(v1);
            m(r2, c) = std::move(v2);
        }
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (h(i, col) == 0) continue;
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(row, col).get_mpz_t(), h(i, col).get_mpz_t());
            Integer a = h(row, col) / g, b = h(i, col) / g;
            combine(h, row, i, x, y, a, b);
            if (u) combine(*u, row, i, x, y, a, b);
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            for (std::size_t c = 0; c < cols; ++c) h(row, c) = -h(row, c);
            if (u)
                for (std::size_t c = 0; c < u->cols(); ++c) (*u)(row, c) = -(*u)(row, c);
        }
        for (std::size_t k = 0; k < row; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(k, col).get_mpz_t(), h(row, col).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) h(k, c) -= q * h(row, c);
            if (u)
                for (std::size_t c = 0; c < u->cols(); ++c) (*u)(k, c) -= q * (*u)(row, c);
        }
        ++row;
    }
    return row;
}

}  // namespace

HnfResult hnf(const IntMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorKind::InvalidInput, "empty matrix");
    HnfResult out{m, IntMatrix::identity(m.rows())};
    if (echelonize(out.h, &out.u) < m.rows())
        throw Error(ErrorKind::RankDeficient, "matrix does not have full row rank");
    return out;
}

IntMatrix lattice_hnf(const std::vector<std::vector<Integer>>& generators, std::size_t cols)
{
    IntMatrix h(generators.size(), cols);
    for (std::size_t r = 0; r < generators.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) h(r, c) = generators[r][c];
    std::size_t rank = echelonize(h, nullptr);
    IntMatrix out(rank, cols);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = h(r, c);
    return out;
}

}  // namespace indexlab
