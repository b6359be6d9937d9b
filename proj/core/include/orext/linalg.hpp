#pragma once

#include "orext/permutation.hpp"
#include "orext/rational.hpp"

#include <vector>

namespace orext {

// Dense matrix over Q. Row-major, 0-based indexing (this is the internal
// linear-algebra layer; the 1-based index convention lives above it).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0)) {}

    static RatMatrix identity(int n);

    // Matrix of the induced automorphism: (S f)(i) = f(sigma^{-1}(i)).
    static RatMatrix automorphism_matrix(const Permutation& p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator+(const RatMatrix& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_zero() const;
    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// In-place reduction to reduced row echelon form (pivot entries 1, pivot
// columns cleared). Exact arithmetic; deterministic: pivots are chosen as
// the first nonzero entry scanning down each column left to right. Returns
// the rank.
int reduced_row_echelon(RatMatrix& m);

int rank(RatMatrix m);

// Canonical basis of the null space {v : M v = 0}: one vector per free
// column, ascending; each has 1 at its free column, 0 at the other free
// columns. This is the unique reduced echelon basis of the kernel, so equal
// subspaces give byte-identical bases.
std::vector<std::vector<Rational>> null_space(const RatMatrix& m);

// Do two families of vectors (rows, all of length dim) span the same
// subspace? Decided by exact mutual rank containment.
bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b, int dim);

} // namespace orext
