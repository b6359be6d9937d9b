#include "orext/ore_poly.hpp"

#include "orext/error.hpp"

#include <string>

namespace orext {

OreContext::OreContext(DerivationMatrix delta)
    : delta_(std::move(delta)),
      sigma_matrix_(RatMatrix::automorphism_matrix(delta_.perm())),
      delta_is_zero_(delta_.is_zero()) {}

OreContextPtr OreContext::make(DerivationMatrix delta) {
    const auto report = delta.validate();
    if (!report.valid)
        raise(Error::Code::InvalidDerivation,
              "context requires a valid derivation matrix (violated " + report.violation->condition +
                  " at k_{" + std::to_string(report.violation->row) + "," +
                  std::to_string(report.violation->col) + "})");
    return OreContextPtr(new OreContext(std::move(delta)));
}

OreContextPtr OreContext::skew(Permutation sigma) {
    return OreContextPtr(new OreContext(DerivationMatrix::zero(std::move(sigma))));
}

OreContextPtr OreContext::from_diagonal(Permutation sigma, const std::vector<Rational>& diag) {
    return OreContextPtr(new OreContext(DerivationMatrix::from_diagonal(std::move(sigma), diag)));
}

const RatMatrix& OreContext::pi_matrix(int m, int k) const {
    std::scoped_lock lock(pi_mutex_);
    const auto key = std::make_pair(m, k);
    if (auto it = pi_memo_.find(key); it != pi_memo_.end()) return it->second;

    // Filled bottom-up so the recursion below only ever hits memoized keys.
    for (int kk = 0; kk <= k; ++kk) {
        for (int mm = 0; mm <= kk; ++mm) {
            const auto sub = std::make_pair(mm, kk);
            if (pi_memo_.count(sub)) continue;
            RatMatrix value;
            if (mm == 0 && kk == 0) {
                value = RatMatrix::identity(n());
            } else {
                value = RatMatrix(n(), n());
                if (mm > 0) value = value + sigma_matrix_ * pi_memo_.at({mm - 1, kk - 1});
                if (mm <= kk - 1) value = value + delta_.entries() * pi_memo_.at({mm, kk - 1});
            }
            pi_memo_.emplace(sub, std::move(value));
        }
    }
    if (m < 0 || k < 0 || m > k)
        return pi_memo_.emplace(key, RatMatrix(n(), n())).first->second;
    return pi_memo_.at(key);
}

FuncElem OreContext::pi(int m, int k, const FuncElem& g) const {
    if (g.n() != n())
        raise(Error::Code::DimensionMismatch, "pi applied to element of wrong size");
    return FuncElem(pi_matrix(m, k).apply(g.values()));
}

namespace {

void require_same_context(const OrePoly& p, const OrePoly& q) {
    if (p.context() == q.context()) return;
    if (p.context() && q.context() && p.context()->same_as(*q.context())) return;
    raise(Error::Code::ContextMismatch, "polynomials belong to different Ore contexts");
}

std::vector<FuncElem> strip_trailing_zeros(std::vector<FuncElem> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

} // namespace

OrePoly::OrePoly(OreContextPtr context, std::vector<FuncElem> coeffs)
    : context_(std::move(context)), coeffs_(strip_trailing_zeros(std::move(coeffs))) {
    if (!context_) raise(Error::Code::InvalidArgument, "polynomial requires a context");
    for (const auto& c : coeffs_)
        if (c.n() != context_->n())
            raise(Error::Code::DimensionMismatch, "coefficient size does not match context");
}

OrePoly OrePoly::zero(OreContextPtr context) {
    return OrePoly(std::move(context), {});
}

OrePoly OrePoly::constant(OreContextPtr context, FuncElem f) {
    return OrePoly(std::move(context), {std::move(f)});
}

OrePoly OrePoly::monomial(OreContextPtr context, FuncElem f, int power) {
    if (power < 0) raise(Error::Code::InvalidArgument, "monomial power must be >= 0");
    const int n = context->n();
    std::vector<FuncElem> coeffs(static_cast<size_t>(power), FuncElem(n));
    coeffs.push_back(std::move(f));
    return OrePoly(std::move(context), std::move(coeffs));
}

OrePoly OrePoly::x(OreContextPtr context) {
    const int n = context->n();
    return monomial(std::move(context), FuncElem::one(n), 1);
}

std::optional<int> OrePoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

FuncElem OrePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return FuncElem(context_->n());
    return coeffs_[static_cast<size_t>(k)];
}

FuncElem OrePoly::leading_coeff() const {
    if (coeffs_.empty()) return FuncElem(context_->n());
    return coeffs_.back();
}

bool OrePoly::operator==(const OrePoly& other) const {
    if (!(context_ == other.context_ || context_->same_as(*other.context_))) return false;
    return coeffs_ == other.coeffs_;
}

OrePoly operator+(const OrePoly& p, const OrePoly& q) {
    require_same_context(p, q);
    const int deg = std::max(static_cast<int>(p.coeffs().size()), static_cast<int>(q.coeffs().size()));
    std::vector<FuncElem> out;
    out.reserve(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k) out.push_back(p.coeff(k) + q.coeff(k));
    return OrePoly(p.context(), std::move(out));
}

OrePoly operator-(const OrePoly& p, const OrePoly& q) {
    return p + (-q);
}

OrePoly operator-(const OrePoly& p) {
    std::vector<FuncElem> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(-c);
    return OrePoly(p.context(), std::move(out));
}

OrePoly operator*(const Rational& c, const OrePoly& p) {
    std::vector<FuncElem> out;
    out.reserve(p.coeffs().size());
    for (const auto& f : p.coeffs()) out.push_back(c * f);
    return OrePoly(p.context(), std::move(out));
}

OrePoly operator*(const FuncElem& f, const OrePoly& p) {
    std::vector<FuncElem> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(f * c);
    return OrePoly(p.context(), std::move(out));
}

OrePoly operator*(const OrePoly& p, const OrePoly& q) {
    require_same_context(p, q);
    const auto& ctx = *p.context();
    if (p.is_zero() || q.is_zero()) return OrePoly::zero(p.context());

    const int dp = *p.degree();
    const int dq = *q.degree();
    std::vector<FuncElem> out(static_cast<size_t>(dp + dq) + 1, FuncElem(ctx.n()));
    for (int k = 0; k <= dp; ++k) {
        const FuncElem& fk = p.coeff(k);
        if (fk.is_zero()) continue;
        for (int l = 0; l <= dq; ++l) {
            const FuncElem& gl = q.coeff(l);
            if (gl.is_zero()) continue;
            for (int m = 0; m <= k; ++m) {
                const FuncElem term = fk * ctx.pi(m, k, gl);
                if (!term.is_zero())
                    out[static_cast<size_t>(m + l)] = out[static_cast<size_t>(m + l)] + term;
            }
        }
    }
    return OrePoly(p.context(), std::move(out));
}

bool commutes_with_coefficient_algebra(const OrePoly& p) {
    if (p.is_zero()) return true;
    const auto& ctx = *p.context();
    const int m = *p.degree();
    for (int t = 1; t <= ctx.n(); ++t) {
        const FuncElem g = FuncElem::basis(ctx.n(), t);
        for (int k = 0; k <= m; ++k) {
            FuncElem rhs(ctx.n());
            for (int j = k; j <= m; ++j) rhs = rhs + p.coeff(j) * ctx.pi(k, j, g);
            if (!(g * p.coeff(k) == rhs)) return false;
        }
    }
    return true;
}

} // namespace orext
