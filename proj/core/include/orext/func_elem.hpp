#pragma once

#include "orext/permutation.hpp"
#include "orext/rational.hpp"

#include <vector>

namespace orext {

// An element of the coefficient algebra A = Q^n: a function on {1..n} with
// pointwise operations. Value type; no operation mutates its inputs.
class FuncElem {
public:
    explicit FuncElem(int n);                       // zero element
    explicit FuncElem(std::vector<Rational> values);

    static FuncElem basis(int n, int i);            // e_i, 1-based
    static FuncElem constant(int n, const Rational& c);
    static FuncElem one(int n) { return constant(n, 1); }

    int n() const { return static_cast<int>(values_.size()); }
    const Rational& at(int i) const { return values_[static_cast<size_t>(i) - 1]; }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const;
    bool operator==(const FuncElem& other) const { return values_ == other.values_; }

private:
    std::vector<Rational> values_;
};

FuncElem operator+(const FuncElem& f, const FuncElem& g);
FuncElem operator-(const FuncElem& f, const FuncElem& g);
FuncElem operator-(const FuncElem& f);
FuncElem operator*(const FuncElem& f, const FuncElem& g);   // pointwise
FuncElem operator*(const Rational& c, const FuncElem& f);

// The induced automorphism power: sigma~^power(f) = f o sigma^{-power}.
// power 0 is the identity, negative powers invert exactly.
FuncElem apply_automorphism(const Permutation& p, const FuncElem& f, long long power);

} // namespace orext
