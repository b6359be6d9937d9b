#pragma once

#include "orext/func_elem.hpp"
#include "orext/linalg.hpp"
#include "orext/permutation.hpp"
#include "orext/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orext {

struct DerivationViolation {
    int row = 0; // 1-based, as in k_{row,col}
    int col = 0;
    std::string condition; // "column_support" | "offdiagonal_tie" | "fixed_point_column"
};

struct DerivationValidation {
    bool valid = true;
    std::optional<DerivationViolation> violation;
};

// The standard matrix [Delta] = [Delta(e_1) | ... | Delta(e_n)] of a
// sigma~-twisted derivation on A = Q^n. A valid matrix satisfies, per
// column i with j = sigma(i):
//   - k_{li} = 0 for l not in {i, j},
//   - k_{ji} = -k_{jj} when j != i,
//   - column i entirely zero when j == i (fixed points admit no derivation
//     component; forced by Delta(e_i) = Delta(e_i)(e_i + e_j) at j = i).
// Consequently a valid matrix is determined by its diagonal, which is the
// canonical construction path (from_diagonal).
class DerivationMatrix {
public:
    static DerivationMatrix zero(Permutation p);

    // Builds the unique valid matrix with the given diagonal: k_{ii} =
    // diag[i], k_{sigma(i),i} = -diag[sigma(i)]. Rejects a nonzero value at
    // a fixed point of sigma (no such derivation exists).
    static DerivationMatrix from_diagonal(Permutation p, const std::vector<Rational>& diag);

    // Wraps arbitrary entries for validation; no conditions are checked.
    static DerivationMatrix from_entries(Permutation p, RatMatrix entries);

    const Permutation& perm() const { return perm_; }
    int n() const { return perm_.n(); }
    const RatMatrix& entries() const { return entries_; }
    const Rational& entry(int row, int col) const { return entries_.at(row - 1, col - 1); } // 1-based
    std::vector<Rational> diagonal() const;
    bool is_zero() const { return entries_.is_zero(); }

    DerivationValidation validate() const;
    bool is_valid() const { return validate().valid; }

    // [Delta] f, exact. Linear in f; satisfies the twisted Leibniz law
    // Delta(fg) = sigma~(f) Delta(g) + Delta(f) g when the matrix is valid.
    FuncElem apply(const FuncElem& f) const;

    // Delta^j(f) by iteration; j = 0 is the identity.
    FuncElem apply_power(int j, const FuncElem& f) const;

    // An element a with Delta(r) = a r - sigma~(r) a for all r, checked on
    // the basis. The canonical candidate is a[i] = k_{ii}; nullopt if the
    // witness equation fails (not observed for any valid matrix). Requires a
    // valid matrix.
    std::optional<FuncElem> inner_witness() const;

    bool operator==(const DerivationMatrix& other) const {
        return perm_ == other.perm_ && entries_ == other.entries_;
    }

private:
    DerivationMatrix(Permutation p, RatMatrix entries);

    Permutation perm_;
    RatMatrix entries_;
};

} // namespace orext
