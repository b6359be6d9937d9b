#pragma once

#include "orext/linalg.hpp"
#include "orext/ore_poly.hpp"

#include <string>
#include <vector>

namespace orext {

// An exact basis of a degree-windowed solution space (centralizer of A, or
// the center), in canonical order: elements sorted by the (degree, index)
// position of their defining free coordinate, pivot entries 1. Elements are
// linearly independent over Q.
struct SubspaceBasis {
    OreContextPtr context;
    int max_degree = 0;
    std::vector<OrePoly> elements;

    int dimension() const { return static_cast<int>(elements.size()); }
};

// Flattens each element to its coefficient vector (f_k[i] at position
// k*n + i-1), the coordinate system shared by the solver and span tests.
std::vector<std::vector<Rational>> stacked_coefficients(const SubspaceBasis& basis);

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b);

// C(A) window for Delta = 0: { e_i x^k : 0 <= k <= max_degree, i in Per^k }.
// Rejects a context with nonzero Delta (the closed form is proven only for
// the skew case).
SubspaceBasis centralizer_closed_form(const OreContextPtr& context, int max_degree);

// General C(A) window: exact null space of the coefficient conditions
// g f_k = sum_{j=k}^m f_j pi_k^j(g), assembled for g = e_1..e_n and
// k = 0..max_degree over all n*(max_degree+1) unknowns jointly, since the
// conditions couple f_k to every higher coefficient when Delta != 0.
SubspaceBasis centralizer_solver(const OreContextPtr& context, int max_degree);

// Necessary condition on centralizer elements: the leading coefficient of
// every basis element vanishes on Sep^deg.
bool leading_coefficient_check(const SubspaceBasis& basis);

// Z(A[x; sigma~, 0]) window: cycle indicators 1_C x^k for cycles C whose
// length divides k. Rejects nonzero Delta.
SubspaceBasis center_closed_form(const OreContextPtr& context, int max_degree);

// Membership in Z(A[x; sigma~, 0]): commutes with A and every coefficient
// is sigma~-fixed. Rejects nonzero Delta.
bool center_membership(const OrePoly& p);

// Do all pairs of basis elements commute under the Ore product?
bool maximal_commutativity_check(const SubspaceBasis& basis);

} // namespace orext
