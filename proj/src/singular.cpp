#include "atlas/singular.hpp"

namespace atlas {
namespace sing {

namespace {

bool vanishes_at_origin(const PolyC& p) { return p.coeff(Mono(p.nvars(), 0)).is_zero(); }

UPoly<Cyclotomic> restrict_y0(const PolyC& p) {
    std::vector<Cyclotomic> c(p.degree_in(0).value_or(-1) + 1, Cyclotomic(0));
    for (const auto& [m, co] : p.terms())
        if (m[1] == 0) c[m[0]] = co;
    return UPoly<Cyclotomic>(std::move(c));
}

long ord_x(const UPoly<Cyclotomic>& u) {
    for (int i = 0; i <= u.deg(); ++i)
        if (!u[i].is_zero()) return i;
    return -1;
}

PolyC divide_out_y(const PolyC& p) {
    auto q = exact_divide(p, MultiPoly<Cyclotomic>::monomial(2, Mono{0, 1}, Cyclotomic(1)));
    if (!q) raise(Errc::Domain, "expected y to divide");
    return *q;
}

} // namespace

std::optional<unsigned long> intersection_multiplicity(const PolyC& p0, const PolyC& q0) {
    if (p0.nvars() != 2 || q0.nvars() != 2)
        raise(Errc::Domain, "intersection multiplicity is bivariate");
    if (!vanishes_at_origin(p0) || !vanishes_at_origin(q0)) return 0;
    if (p0.is_zero() || q0.is_zero()) return std::nullopt; // V(0) is the plane
    PolyC g = multi_gcd(p0, q0);
    if (g.total_degree().value_or(0) >= 1 && vanishes_at_origin(g)) return std::nullopt;

    unsigned long total = 0;
    PolyC p = p0, q = q0;
    for (long guard = 0; guard < 200000; ++guard) {
        if (!vanishes_at_origin(p) || !vanishes_at_origin(q)) return total;
        UPoly<Cyclotomic> a = restrict_y0(p);
        UPoly<Cyclotomic> b = restrict_y0(q);
        if (a.is_zero() && b.is_zero()) {
            // common factor y through the origin escaped the gcd check
            return std::nullopt;
        }
        if (a.is_zero()) {
            total += static_cast<unsigned long>(ord_x(b)); // I(y, q) = ord_x q(x, 0)
            p = divide_out_y(p);
            continue;
        }
        if (b.is_zero()) {
            total += static_cast<unsigned long>(ord_x(a));
            q = divide_out_y(q);
            continue;
        }
        if (a.deg() > b.deg()) {
            std::swap(p, q);
            std::swap(a, b);
        }
        // q <- q - (lc_b / lc_a) x^(deg b - deg a) p kills the top of b
        Cyclotomic c = b.lc() / a.lc();
        PolyC t = MultiPoly<Cyclotomic>::monomial(
            2, Mono{static_cast<uint32_t>(b.deg() - a.deg()), 0}, c);
        q = q - t * p;
    }
    raise(Errc::Domain, "intersection multiplicity recursion did not terminate");
}

SingularityReport milnor_plane(const PolyC& f) {
    if (f.nvars() != 2) raise(Errc::Domain, "milnor_plane is bivariate");
    if (!vanishes_at_origin(f)) raise(Errc::Domain, "curve does not pass through the origin");
    SingularityReport rep;
    rep.method = "fulton";
    rep.milnor = intersection_multiplicity(f.derivative(0), f.derivative(1));
    return rep;
}

SingularityReport milnor_brieskorn(int d, const std::vector<int>& a) {
    if (d < 3) raise(Errc::Domain, "milnor_brieskorn needs d >= 3");
    for (int ai : a)
        if (ai < 2) raise(Errc::Domain, "milnor_brieskorn needs a_i >= 2");
    int n = static_cast<int>(a.size()) + 1;
    std::vector<Mono> gens;
    for (int i = 0; i < n - 1; ++i) {
        Mono m(n, 0);
        m[i] = static_cast<uint32_t>(a[i] - 1);
        gens.push_back(std::move(m));
    }
    Mono last(n, 0);
    last[n - 1] = static_cast<uint32_t>(d - 2);
    gens.push_back(std::move(last));
    auto count = monomial_staircase_codim(gens, n);
    unsigned long closed = static_cast<unsigned long>(d - 2);
    for (int ai : a) closed *= static_cast<unsigned long>(ai - 1);
    if (!count || *count != closed)
        raise(Errc::Domain, "staircase count disagrees with the closed form");
    SingularityReport rep;
    rep.method = "staircase";
    rep.milnor = closed;
    return rep;
}

SingularityReport milnor_homogeneous_ordinary(long k) {
    if (k < 1) raise(Errc::Domain, "ordinary point needs k >= 1");
    SingularityReport rep;
    rep.method = "homogeneous";
    rep.milnor = static_cast<unsigned long>((k - 1) * (k - 1));
    return rep;
}

SingularityReport analyze_ordinary_germ(int d, const Cyclotomic& lambda) {
    if (d < 3) raise(Errc::Domain, "analyze_ordinary_germ needs d >= 3");
    if (!gamma_membership(d, lambda)) raise(Errc::NotInGamma, "lambda is outside Gamma_d");
    PolyC f(2);
    f.add_term(Mono{0, static_cast<uint32_t>(d)}, Cyclotomic(1));
    f.add_term(Mono{static_cast<uint32_t>(d - 1), 1}, lambda);
    f.add_term(Mono{static_cast<uint32_t>(d), 0}, Cyclotomic(1));
    SingularityReport rep = milnor_plane(f);
    if (d >= 4) rep.analytic_tag = kang_tag(d, lambda);
    return rep;
}

bool univariate_squarefree(const UPoly<Cyclotomic>& u) {
    if (u.deg() <= 0) return true;
    return upoly_gcd(u, u.derivative()).deg() == 0;
}

bool gamma_membership(int d, const Cyclotomic& lambda) {
    if (d < 3) raise(Errc::Domain, "gamma_membership needs d >= 3");
    // F(1, t) = t^d + lambda t + 1; x never divides F since F(0, y) = y^d
    std::vector<Cyclotomic> c(static_cast<size_t>(d) + 1, Cyclotomic(0));
    c[0] = Cyclotomic(1);
    c[1] = lambda;
    c[d] = Cyclotomic(1);
    return univariate_squarefree(UPoly<Cyclotomic>(std::move(c)));
}

Cyclotomic kang_tag(int d, const Cyclotomic& lambda) {
    if (d < 4) raise(Errc::Domain, "kang_tag needs d >= 4");
    if (!gamma_membership(d, lambda))
        raise(Errc::NotInGamma, "lambda is outside Gamma_d");
    return lambda.pow(d);
}

std::pair<Cyclotomic, Cyclotomic> binary_quartic_invariants(const Cyclotomic& a,
                                                            const Cyclotomic& b,
                                                            const Cyclotomic& c,
                                                            const Cyclotomic& d,
                                                            const Cyclotomic& e) {
    Cyclotomic I = Cyclotomic(12) * a * e - Cyclotomic(3) * b * d + c * c;
    Cyclotomic J = Cyclotomic(72) * a * c * e + Cyclotomic(9) * b * c * d -
                   Cyclotomic(27) * a * d * d - Cyclotomic(27) * e * b * b -
                   Cyclotomic(2) * c * c * c;
    return {I, J};
}

std::pair<Cyclotomic, Cyclotomic> quartic_cross_ratio_invariant(const Cyclotomic& lambda) {
    if (!gamma_membership(4, lambda)) raise(Errc::NotInGamma, "lambda is outside Gamma_4");
    return binary_quartic_invariants(Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), lambda,
                                     Cyclotomic(1));
}

bool same_quartic_class(const std::pair<Cyclotomic, Cyclotomic>& u,
                        const std::pair<Cyclotomic, Cyclotomic>& v) {
    return u.first.pow(3) * v.second.pow(2) == v.first.pow(3) * u.second.pow(2);
}

Cyclotomic trinomial_discriminant(int d, const Cyclotomic& a, const Cyclotomic& b) {
    if (d < 2) raise(Errc::Domain, "trinomial discriminant needs d >= 2");
    Cyclotomic dd = Cyclotomic(Rational(d)).pow(d) * b.pow(d - 1);
    Cyclotomic aa = Cyclotomic(Rational(d - 1)).pow(d - 1) * a.pow(d);
    Cyclotomic sum = (d % 2 == 0) ? dd - aa : dd + aa;
    long sw = (static_cast<long>(d) * (d - 1) / 2) % 2;
    return sw ? -sum : sum;
}

} // namespace sing
} // namespace atlas
