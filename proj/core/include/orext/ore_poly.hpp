#pragma once

#include "orext/derivation.hpp"
#include "orext/func_elem.hpp"
#include "orext/linalg.hpp"
#include "orext/permutation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace orext {

class OreContext;
using OreContextPtr = std::shared_ptr<const OreContext>;

// The data of A[x; sigma~, Delta]: the permutation, a validated derivation
// matrix, and a memo table of the pi coefficient maps. Shared immutably by
// every polynomial over the ring; the memo is the only mutable state and is
// guarded internally, so the observable behaviour is pure.
class OreContext {
public:
    static OreContextPtr make(DerivationMatrix delta);
    static OreContextPtr skew(Permutation sigma); // Delta = 0
    static OreContextPtr from_diagonal(Permutation sigma, const std::vector<Rational>& diag);

    int n() const { return delta_.n(); }
    const Permutation& sigma() const { return delta_.perm(); }
    const DerivationMatrix& delta() const { return delta_; }
    bool delta_is_zero() const { return delta_is_zero_; }

    FuncElem sigma_tilde(const FuncElem& f, long long power = 1) const {
        return apply_automorphism(sigma(), f, power);
    }
    FuncElem apply_delta(const FuncElem& f) const { return delta_.apply(f); }

    // Matrix of pi_m^k, the maps defined by pi_0^0 = id, pi_m^k = 0 for
    // m > k or a negative index, and otherwise
    //   pi_m^k = sigma~ o pi_{m-1}^{k-1} + Delta o pi_m^{k-1},
    // so that x^k g = sum_m pi_m^k(g) x^m. Memoized per context.
    const RatMatrix& pi_matrix(int m, int k) const;
    FuncElem pi(int m, int k, const FuncElem& g) const;

    bool same_as(const OreContext& other) const { return delta_ == other.delta_; }

private:
    explicit OreContext(DerivationMatrix delta);

    DerivationMatrix delta_;
    RatMatrix sigma_matrix_;
    bool delta_is_zero_;
    mutable std::map<std::pair<int, int>, RatMatrix> pi_memo_;
    mutable std::mutex pi_mutex_;
};

// Element of A[x; sigma~, Delta] in canonical left form sum_i f_i x^i:
// trailing zero coefficients stripped; the zero polynomial has no
// coefficients and degree() nullopt (the paper's deg(0) = -infinity).
class OrePoly {
public:
    OrePoly(OreContextPtr context, std::vector<FuncElem> coeffs);

    static OrePoly zero(OreContextPtr context);
    static OrePoly constant(OreContextPtr context, FuncElem f);
    static OrePoly monomial(OreContextPtr context, FuncElem f, int power); // f x^power
    static OrePoly x(OreContextPtr context);                               // 1 x

    const OreContextPtr& context() const { return context_; }
    int n() const { return context_->n(); }

    std::optional<int> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<FuncElem>& coeffs() const { return coeffs_; }
    FuncElem coeff(int k) const; // zero element beyond the degree
    FuncElem leading_coeff() const;

    bool operator==(const OrePoly& other) const;

private:
    OreContextPtr context_;
    std::vector<FuncElem> coeffs_;
};

OrePoly operator+(const OrePoly& p, const OrePoly& q);
OrePoly operator-(const OrePoly& p, const OrePoly& q);
OrePoly operator-(const OrePoly& p);
OrePoly operator*(const Rational& c, const OrePoly& p);
OrePoly operator*(const FuncElem& f, const OrePoly& p); // left coefficient action

// The Ore product driven by x r = sigma~(r) x + Delta(r), via the expansion
// x^k g = sum_m pi_m^k(g) x^m. Degree may drop below deg p + deg q since A
// has zero divisors.
OrePoly operator*(const OrePoly& p, const OrePoly& q);

// Does p commute with every element of A? Decided exactly by the
// coefficient conditions g f_k = sum_{j>=k} f_j pi_k^j(g) over the basis
// g = e_1..e_n (sufficient by linearity).
bool commutes_with_coefficient_algebra(const OrePoly& p);

} // namespace orext
