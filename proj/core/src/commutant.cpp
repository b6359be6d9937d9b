#include "orext/commutant.hpp"

#include "orext/error.hpp"

namespace orext {

namespace {

void require_skew(const OreContext& ctx, const char* what) {
    if (!ctx.delta_is_zero())
        raise(Error::Code::NonzeroDelta,
              std::string(what) + " is only defined for Delta = 0 contexts");
}

void require_max_degree(int max_degree) {
    if (max_degree < 0) raise(Error::Code::InvalidArgument, "max_degree must be >= 0");
}

OrePoly poly_from_flat(const OreContextPtr& ctx, int max_degree, const std::vector<Rational>& v) {
    const int n = ctx->n();
    std::vector<FuncElem> coeffs;
    coeffs.reserve(static_cast<size_t>(max_degree) + 1);
    for (int k = 0; k <= max_degree; ++k) {
        std::vector<Rational> values(v.begin() + static_cast<long>(k) * n,
                                     v.begin() + static_cast<long>(k + 1) * n);
        coeffs.emplace_back(std::move(values));
    }
    return OrePoly(ctx, std::move(coeffs));
}

} // namespace

std::vector<std::vector<Rational>> stacked_coefficients(const SubspaceBasis& basis) {
    const int n = basis.context->n();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(basis.elements.size());
    for (const auto& p : basis.elements) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(n) * (static_cast<size_t>(basis.max_degree) + 1));
        for (int k = 0; k <= basis.max_degree; ++k) {
            const FuncElem c = p.coeff(k);
            row.insert(row.end(), c.values().begin(), c.values().end());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!a.context->same_as(*b.context) || a.max_degree != b.max_degree) return false;
    const int dim = a.context->n() * (a.max_degree + 1);
    return same_span(stacked_coefficients(a), stacked_coefficients(b), dim);
}

SubspaceBasis centralizer_closed_form(const OreContextPtr& context, int max_degree) {
    require_skew(*context, "centralizer_closed_form");
    require_max_degree(max_degree);
    SubspaceBasis basis{context, max_degree, {}};
    for (int k = 0; k <= max_degree; ++k) {
        const auto per = context->sigma().sep_per(k).second;
        for (int i : per)
            basis.elements.push_back(OrePoly::monomial(context, FuncElem::basis(context->n(), i), k));
    }
    return basis;
}

SubspaceBasis centralizer_solver(const OreContextPtr& context, int max_degree) {
    require_max_degree(max_degree);
    const int n = context->n();
    const int unknowns = n * (max_degree + 1); // column k*n + (i-1) holds f_k[i]

    // One block of n equations (components r) per basis function g = e_t and
    // per coefficient index k. Component r of g f_k - sum_j f_j pi_k^j(g):
    //   [r == t] f_k[r]  -  sum_{j=k}^M pi_k^j[r][t] f_j[r].
    RatMatrix system(n * n * (max_degree + 1), unknowns);
    int row = 0;
    for (int t = 1; t <= n; ++t) {
        for (int k = 0; k <= max_degree; ++k) {
            for (int r = 1; r <= n; ++r, ++row) {
                if (r == t) system.at(row, k * n + (r - 1)) += 1;
                for (int j = k; j <= max_degree; ++j) {
                    const Rational& c = context->pi_matrix(k, j).at(r - 1, t - 1);
                    if (c != 0) system.at(row, j * n + (r - 1)) -= c;
                }
            }
        }
    }

    SubspaceBasis basis{context, max_degree, {}};
    for (const auto& v : null_space(system))
        basis.elements.push_back(poly_from_flat(context, max_degree, v));
    return basis;
}

bool leading_coefficient_check(const SubspaceBasis& basis) {
    for (const auto& p : basis.elements) {
        if (p.is_zero()) continue;
        const FuncElem lead = p.leading_coeff();
        const auto sep = basis.context->sigma().sep_per(*p.degree()).first;
        for (int i : sep)
            if (lead.at(i) != 0) return false;
    }
    return true;
}

SubspaceBasis center_closed_form(const OreContextPtr& context, int max_degree) {
    require_skew(*context, "center_closed_form");
    require_max_degree(max_degree);
    SubspaceBasis basis{context, max_degree, {}};
    const auto& cycles = context->sigma().cycle_decomposition().cycles;
    for (int k = 0; k <= max_degree; ++k) {
        for (const auto& cycle : cycles) {
            if (k % static_cast<long long>(cycle.size()) != 0) continue;
            FuncElem indicator(context->n());
            for (int i : cycle) indicator = indicator + FuncElem::basis(context->n(), i);
            basis.elements.push_back(OrePoly::monomial(context, std::move(indicator), k));
        }
    }
    return basis;
}

bool center_membership(const OrePoly& p) {
    require_skew(*p.context(), "center_membership");
    if (!commutes_with_coefficient_algebra(p)) return false;
    for (const auto& c : p.coeffs())
        if (!(p.context()->sigma_tilde(c) == c)) return false;
    return true;
}

bool maximal_commutativity_check(const SubspaceBasis& basis) {
    for (size_t i = 0; i < basis.elements.size(); ++i)
        for (size_t j = i + 1; j < basis.elements.size(); ++j)
            if (!(basis.elements[i] * basis.elements[j] == basis.elements[j] * basis.elements[i]))
                return false;
    return true;
}

} // namespace orext
