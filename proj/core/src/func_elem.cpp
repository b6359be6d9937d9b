#include "orext/func_elem.hpp"

#include "orext/error.hpp"

#include <algorithm>
#include <string>

namespace orext {

namespace {

void require_same_n(const FuncElem& f, const FuncElem& g) {
    if (f.n() != g.n())
        raise(Error::Code::DimensionMismatch,
              "function elements have sizes " + std::to_string(f.n()) + " and " + std::to_string(g.n()));
}

} // namespace

FuncElem::FuncElem(int n) {
    if (n < 1) raise(Error::Code::Schema, "function element must have n >= 1");
    values_.assign(static_cast<size_t>(n), Rational(0));
}

FuncElem::FuncElem(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) raise(Error::Code::Schema, "function element must have n >= 1");
}

FuncElem FuncElem::basis(int n, int i) {
    FuncElem e(n);
    e.values_[static_cast<size_t>(i) - 1] = 1;
    return e;
}

FuncElem FuncElem::constant(int n, const Rational& c) {
    FuncElem f(n);
    std::fill(f.values_.begin(), f.values_.end(), c);
    return f;
}

bool FuncElem::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v == 0; });
}

FuncElem operator+(const FuncElem& f, const FuncElem& g) {
    require_same_n(f, g);
    std::vector<Rational> out(f.values());
    for (size_t i = 0; i < out.size(); ++i) out[i] += g.values()[i];
    return FuncElem(std::move(out));
}

FuncElem operator-(const FuncElem& f, const FuncElem& g) {
    require_same_n(f, g);
    std::vector<Rational> out(f.values());
    for (size_t i = 0; i < out.size(); ++i) out[i] -= g.values()[i];
    return FuncElem(std::move(out));
}

FuncElem operator-(const FuncElem& f) {
    std::vector<Rational> out(f.values());
    for (auto& v : out) v = -v;
    return FuncElem(std::move(out));
}

FuncElem operator*(const FuncElem& f, const FuncElem& g) {
    require_same_n(f, g);
    std::vector<Rational> out(f.values());
    for (size_t i = 0; i < out.size(); ++i) out[i] *= g.values()[i];
    return FuncElem(std::move(out));
}

FuncElem operator*(const Rational& c, const FuncElem& f) {
    std::vector<Rational> out(f.values());
    for (auto& v : out) v *= c;
    return FuncElem(std::move(out));
}

FuncElem apply_automorphism(const Permutation& p, const FuncElem& f, long long power) {
    if (p.n() != f.n())
        raise(Error::Code::DimensionMismatch,
              "permutation on " + std::to_string(p.n()) + " points applied to element of size " +
                  std::to_string(f.n()));
    std::vector<Rational> out(static_cast<size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i)
        out[static_cast<size_t>(i) - 1] = f.at(p.apply_power(i, -power));
    return FuncElem(std::move(out));
}

} // namespace orext
