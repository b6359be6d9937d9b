#include "orext/linalg.hpp"

#include "orext/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace orext {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::automorphism_matrix(const Permutation& p) {
    RatMatrix m(p.n(), p.n());
    for (int i = 1; i <= p.n(); ++i) m.at(i - 1, p.apply_inverse(i) - 1) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_)
        raise(Error::Code::DimensionMismatch,
              "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                  std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    RatMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        raise(Error::Code::DimensionMismatch, "matrix sum of unequal shapes");
    RatMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) += other.at(i, j);
    return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        raise(Error::Code::DimensionMismatch,
              "matrix-vector product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                  " * vector of size " + std::to_string(v.size()));
    std::vector<Rational> out(static_cast<size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

int reduced_row_echelon(RatMatrix& m) {
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                found = r;
                break;
            }
        if (found < 0) continue;
        if (found != pivot_row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
        const Rational inv = Rational(1) / m.at(pivot_row, col);
        for (int c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        ++pivot_row;
    }
    return pivot_row;
}

int rank(RatMatrix m) {
    return reduced_row_echelon(m);
}

std::vector<std::vector<Rational>> null_space(const RatMatrix& input) {
    RatMatrix m = input;
    const int r = reduced_row_echelon(m);

    std::vector<int> pivot_col_of_row(static_cast<size_t>(r), -1);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int row = 0, col = 0; row < r; ++row) {
        while (col < m.cols() && m.at(row, col) == 0) ++col;
        pivot_col_of_row[static_cast<size_t>(row)] = col;
        is_pivot[static_cast<size_t>(col)] = true;
    }

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols()), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (int row = 0; row < r; ++row)
            v[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(row)])] = -m.at(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

RatMatrix stack_rows(const std::vector<std::vector<Rational>>& a,
                     const std::vector<std::vector<Rational>>& b, int dim) {
    RatMatrix m(static_cast<int>(a.size() + b.size()), dim);
    int row = 0;
    for (const auto* family : {&a, &b})
        for (const auto& v : *family) {
            if (static_cast<int>(v.size()) != dim)
                raise(Error::Code::DimensionMismatch, "span vectors of unequal length");
            for (int j = 0; j < dim; ++j) m.at(row, j) = v[static_cast<size_t>(j)];
            ++row;
        }
    return m;
}

} // namespace

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b, int dim) {
    const int ra = rank(stack_rows(a, {}, dim));
    const int rb = rank(stack_rows(b, {}, dim));
    if (ra != rb) return false;
    return rank(stack_rows(a, b, dim)) == ra;
}

} // namespace orext
