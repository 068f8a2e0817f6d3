#pragma once

#include "atlas/elimination.hpp"

namespace atlas {
namespace sing {

using PolyC = MultiPoly<Cyclotomic>;

// Intersection multiplicity I_o(p, q) at the origin via the axiomatic
// Euclidean reduction on restrictions to y = 0; nullopt encodes infinity
// (shared component through the origin).
std::optional<unsigned long> intersection_multiplicity(const PolyC& p, const PolyC& q);

struct SingularityReport {
    std::optional<unsigned long> milnor; // nullopt = non-isolated (infinite)
    std::string method;                  // "fulton" | "staircase" | "homogeneous"
    std::optional<Cyclotomic> analytic_tag;
};

// Milnor number of a plane curve germ at the origin: I_o(f_x, f_y).
SingularityReport milnor_plane(const PolyC& f);

// The Brieskorn-type hypersurface x_n^{d-1} - sum x_i^{a_i}: staircase count
// of the monomial Jacobian ideal, cross-asserted against (d-2) prod (a_i - 1).
SingularityReport milnor_brieskorn(int d, const std::vector<int>& a);

// Milnor number of an ordinary k-fold point (k distinct lines): (k-1)^2.
// Independent oracle used against the Fulton route.
SingularityReport milnor_homogeneous_ordinary(long k);

// Full report for the germ of y^d + lambda x^{d-1} y + x^d at the origin;
// carries the analytic tag lambda^d when d >= 4.
SingularityReport analyze_ordinary_germ(int d, const Cyclotomic& lambda);

// lambda in Gamma_d: y^d + lambda x^{d-1} y + x^d is square-free.
bool gamma_membership(int d, const Cyclotomic& lambda);

// Complete analytic invariant lambda^d of the germ (C_{d,lambda}, o), d >= 4.
Cyclotomic kang_tag(int d, const Cyclotomic& lambda);

// Classical SL2 invariants of a*t^4 + b*t^3 + c*t^2 + d*t + e.
std::pair<Cyclotomic, Cyclotomic> binary_quartic_invariants(
    const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c, const Cyclotomic& d,
    const Cyclotomic& e);

// (I, J) of t^4 + lambda*t + 1; requires lambda in Gamma_4.
std::pair<Cyclotomic, Cyclotomic> quartic_cross_ratio_invariant(const Cyclotomic& lambda);

// j-class comparison I1^3 J2^2 = I2^3 J1^2.
bool same_quartic_class(const std::pair<Cyclotomic, Cyclotomic>& u,
                        const std::pair<Cyclotomic, Cyclotomic>& v);

// disc(t^d + a t + b) = (-1)^{d(d-1)/2} (d^d b^{d-1} + (-1)^{d-1} (d-1)^{d-1} a^d).
Cyclotomic trinomial_discriminant(int d, const Cyclotomic& a, const Cyclotomic& b);

bool univariate_squarefree(const UPoly<Cyclotomic>& u);

} // namespace sing
} // namespace atlas
