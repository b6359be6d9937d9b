#include "orext/derivation.hpp"

#include "orext/error.hpp"

namespace orext {

DerivationMatrix::DerivationMatrix(Permutation p, RatMatrix entries)
    : perm_(std::move(p)), entries_(std::move(entries)) {}

DerivationMatrix DerivationMatrix::zero(Permutation p) {
    const int n = p.n();
    return DerivationMatrix(std::move(p), RatMatrix(n, n));
}

DerivationMatrix DerivationMatrix::from_diagonal(Permutation p, const std::vector<Rational>& diag) {
    const int n = p.n();
    if (static_cast<int>(diag.size()) != n)
        raise(Error::Code::DimensionMismatch,
              "diagonal has " + std::to_string(diag.size()) + " entries, permutation has n = " +
                  std::to_string(n));
    RatMatrix entries(n, n);
    for (int i = 1; i <= n; ++i) {
        const int j = p.apply(i);
        if (j == i) {
            if (diag[static_cast<size_t>(i) - 1] != 0)
                raise(Error::Code::FixedPointDiagonal,
                      "index " + std::to_string(i) +
                          " is a fixed point of sigma; no derivation has a nonzero diagonal there");
            continue;
        }
        entries.at(i - 1, i - 1) = diag[static_cast<size_t>(i) - 1];
        entries.at(j - 1, i - 1) = -diag[static_cast<size_t>(j) - 1];
    }
    return DerivationMatrix(std::move(p), std::move(entries));
}

DerivationMatrix DerivationMatrix::from_entries(Permutation p, RatMatrix entries) {
    if (entries.rows() != p.n() || entries.cols() != p.n())
        raise(Error::Code::DimensionMismatch, "derivation matrix shape does not match permutation");
    return DerivationMatrix(std::move(p), std::move(entries));
}

std::vector<Rational> DerivationMatrix::diagonal() const {
    std::vector<Rational> d;
    d.reserve(static_cast<size_t>(n()));
    for (int i = 1; i <= n(); ++i) d.push_back(entry(i, i));
    return d;
}

DerivationValidation DerivationMatrix::validate() const {
    // Columns scanned in order; within a column, rows in order. The first
    // violated (row, column, condition) is reported.
    for (int i = 1; i <= n(); ++i) {
        const int j = perm_.apply(i);
        for (int l = 1; l <= n(); ++l) {
            if (j == i) {
                if (entry(l, i) != 0)
                    return {false, DerivationViolation{l, i, "fixed_point_column"}};
                continue;
            }
            if (l != i && l != j && entry(l, i) != 0)
                return {false, DerivationViolation{l, i, "column_support"}};
            if (l == j && entry(j, i) != -entry(j, j))
                return {false, DerivationViolation{j, i, "offdiagonal_tie"}};
        }
    }
    return {};
}

FuncElem DerivationMatrix::apply(const FuncElem& f) const {
    if (f.n() != n())
        raise(Error::Code::DimensionMismatch, "derivation applied to element of wrong size");
    return FuncElem(entries_.apply(f.values()));
}

FuncElem DerivationMatrix::apply_power(int j, const FuncElem& f) const {
    if (j < 0) raise(Error::Code::InvalidArgument, "derivation power must be >= 0");
    FuncElem out = f;
    for (int step = 0; step < j; ++step) out = apply(out);
    return out;
}

std::optional<FuncElem> DerivationMatrix::inner_witness() const {
    const auto report = validate();
    if (!report.valid)
        raise(Error::Code::InvalidDerivation,
              "inner_witness requires a valid derivation matrix (violated " +
                  report.violation->condition + " at k_{" + std::to_string(report.violation->row) +
                  "," + std::to_string(report.violation->col) + "})");
    const FuncElem a{diagonal()};
    for (int i = 1; i <= n(); ++i) {
        const FuncElem e = FuncElem::basis(n(), i);
        if (!(apply(e) == a * e - apply_automorphism(perm_, e, 1) * a)) return std::nullopt;
    }
    return a;
}

} // namespace orext
