#pragma once

#include "atlas/multipoly.hpp"

namespace atlas {

namespace detail {

template <class K>
int vec_deg(const std::vector<UPoly<K>>& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

template <class K>
void vec_trim(std::vector<UPoly<K>>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Pseudo-remainder of A by B in the main variable (entries are coefficient
// polynomials in the other variable): lc(B)^(degA-degB+1) * A mod B.
template <class K>
std::vector<UPoly<K>> vec_prem(std::vector<UPoly<K>> A, const std::vector<UPoly<K>>& B) {
    int dB = vec_deg(B);
    const UPoly<K>& lcB = B[dB];
    int e = vec_deg(A) - dB + 1;
    while (true) {
        int dA = vec_deg(A);
        if (dA < dB) break;
        // A = A*lcB - lc(A)*x^(dA-dB)*B
        UPoly<K> lcA = A[dA];
        for (auto& c : A) c = c * lcB;
        for (int j = 0; j <= dB; ++j) {
            A[dA - dB + j] = A[dA - dB + j] - lcA * B[j];
        }
        vec_trim(A);
        --e;
        if (A.empty()) break;
    }
    for (; e > 0; --e)
        for (auto& c : A) c = c * lcB;
    return A;
}

template <class K>
UPoly<K> vec_content(const std::vector<UPoly<K>>& v) {
    UPoly<K> g;
    for (const auto& c : v) g = upoly_gcd(g, c);
    return g;
}

template <class K>
void vec_divide_exact(std::vector<UPoly<K>>& v, const UPoly<K>& d) {
    for (auto& c : v) {
        auto [q, r] = c.divrem(d);
        if (!r.is_zero()) raise(Errc::Domain, "content division not exact");
        c = std::move(q);
    }
}

template <class K>
void vec_strip_rational(std::vector<UPoly<K>>& v) {
    std::vector<K> flat;
    for (const auto& c : v)
        for (const auto& x : c.coeffs()) flat.push_back(x);
    Rational content = list_rational_content(flat);
    if (content.is_zero() || content.is_one()) return;
    for (auto& c : v) {
        if (c.is_zero()) continue;
        K inv = k_from_rational(c.lc(), content.inverse());
        c = c.scaled(inv);
    }
}

} // namespace detail

// gcd of univariate or bivariate polynomials over a field, monic in the
// graded-lex leading coefficient. Content/primitive split plus a pseudo-
// remainder sequence over the coefficient ring.
template <class K>
MultiPoly<K> multi_gcd(const MultiPoly<K>& p, const MultiPoly<K>& q) {
    auto monic = [](const MultiPoly<K>& f) {
        if (f.is_zero()) return f;
        return f.scaled(k_one(f.leading_coeff()) / f.leading_coeff());
    };
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);
    if (p.nvars() != q.nvars()) raise(Errc::Domain, "gcd arity mismatch");
    int n = p.nvars();
    // single-variable cases (including constants)
    for (int v = 0; v < n; ++v) {
        if (depends_only_on(p, v) && depends_only_on(q, v)) {
            UPoly<K> g = upoly_gcd(univariate_in(p, v), univariate_in(q, v));
            return from_upoly(g, n, v);
        }
    }
    if (n != 2) raise(Errc::Domain, "gcd supports univariate or bivariate input");

    // homogeneous fast path: dehomogenize, univariate gcd, rehomogenize
    if (p.is_homogeneous() && q.is_homogeneous()) {
        HomView<K> a = dehomogenize(p);
        HomView<K> b = dehomogenize(q);
        UPoly<K> g = upoly_gcd(a.u, b.u);
        return homogenize(g, std::min(a.y_mult, b.y_mult));
    }

    int var = 1; // main variable y; fall back to x if either is y-free
    if (!p.depends_on(1) || !q.depends_on(1)) var = 0;
    auto A = biv_coeffs(p, var);
    auto B = biv_coeffs(q, var);
    UPoly<K> contA = detail::vec_content(A);
    UPoly<K> contB = detail::vec_content(B);
    detail::vec_divide_exact(A, contA);
    detail::vec_divide_exact(B, contB);
    if (detail::vec_deg(A) < detail::vec_deg(B)) std::swap(A, B);
    while (detail::vec_deg(B) >= 0) {
        auto R = detail::vec_prem(A, B);
        if (detail::vec_deg(R) >= 0) {
            UPoly<K> c = detail::vec_content(R);
            detail::vec_divide_exact(R, c);
            detail::vec_strip_rational(R);
        }
        A = std::move(B);
        B = std::move(R);
    }
    UPoly<K> cA = detail::vec_content(A);
    detail::vec_divide_exact(A, cA);
    UPoly<K> cont_gcd = upoly_gcd(contA, contB);
    MultiPoly<K> g = from_biv_coeffs(A, var) * from_upoly(cont_gcd, 2, 1 - var);
    return monic(g);
}

// Squarefree part of a univariate or bivariate polynomial (char 0):
// p / gcd(p, dp/dx, dp/dy), monic-normalized.
template <class K>
MultiPoly<K> squarefree_part(const MultiPoly<K>& p) {
    if (p.is_zero()) raise(Errc::Domain, "squarefree part of zero");
    if (p.nvars() == 2 && p.is_homogeneous() && p.total_degree() > 0) {
        HomView<K> v = dehomogenize(p);
        UPoly<K> sf = upoly_squarefree_part(v.u);
        return homogenize(sf, v.y_mult > 0 ? 1 : 0);
    }
    MultiPoly<K> g = p;
    for (int v = 0; v < p.nvars(); ++v) {
        if (!p.depends_on(v)) continue;
        g = multi_gcd(g, p.derivative(v));
    }
    auto q = exact_divide(p, g);
    if (!q) raise(Errc::Domain, "squarefree division not exact");
    MultiPoly<K> r = *q;
    return r.scaled(k_one(r.leading_coeff()) / r.leading_coeff());
}

// Resultant of p and q with respect to `var` via fraction-free Gaussian
// elimination on the Sylvester matrix; entries are polynomials in the
// remaining variables. Exact over any number of variables, cubic cost.
template <class K>
MultiPoly<K> sylvester_resultant(const MultiPoly<K>& p, const MultiPoly<K>& q, int var) {
    int n = p.nvars();
    long dp = p.degree_in(var).value_or(-1);
    long dq = q.degree_in(var).value_or(-1);
    if (dp < 1 || dq < 1) raise(Errc::Domain, "resultant needs positive degree in var");
    // coefficients of v^i as polynomials in the other variables
    auto coeffs_of = [&](const MultiPoly<K>& f, long d) {
        std::vector<MultiPoly<K>> c(d + 1, MultiPoly<K>(n));
        for (const auto& [m, co] : f.terms()) {
            Mono r = m;
            r[var] = 0;
            c[m[var]].add_term(std::move(r), co);
        }
        return c;
    };
    auto a = coeffs_of(p, dp);
    auto b = coeffs_of(q, dq);
    long N = dp + dq;
    std::vector<std::vector<MultiPoly<K>>> M(N, std::vector<MultiPoly<K>>(N, MultiPoly<K>(n)));
    for (long r = 0; r < dq; ++r)
        for (long i = 0; i <= dp; ++i) M[r][r + dp - i] = a[i];
    for (long r = 0; r < dp; ++r)
        for (long i = 0; i <= dq; ++i) M[dq + r][r + dq - i] = b[i];
    // Bareiss
    MultiPoly<K> prev = MultiPoly<K>::constant(n, k_one(p.leading_coeff()));
    int sign = 1;
    for (long k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            long piv = -1;
            for (long r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return MultiPoly<K>(n); // singular: resultant 0
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i) {
            for (long j = k + 1; j < N; ++j) {
                MultiPoly<K> t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto d = exact_divide(t, prev);
                if (!d) raise(Errc::Domain, "Bareiss division not exact");
                M[i][j] = std::move(*d);
            }
            M[i][k] = MultiPoly<K>(n);
        }
        prev = M[k][k];
    }
    MultiPoly<K> det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// Res_var(p, q). Univariate inputs use the Euclidean recursion; bivariate uses
// evaluation/interpolation at degree-preserving points; otherwise Sylvester.
template <class K>
MultiPoly<K> resultant_wrt(const MultiPoly<K>& p, const MultiPoly<K>& q, int var) {
    int n = p.nvars();
    long dp = p.degree_in(var).value_or(-1);
    long dq = q.degree_in(var).value_or(-1);
    if (dp < 1 || dq < 1) raise(Errc::Domain, "resultant needs positive degree in var");
    if (depends_only_on(p, var) && depends_only_on(q, var)) {
        K r = upoly_resultant(univariate_in(p, var), univariate_in(q, var));
        return MultiPoly<K>::constant(n, r);
    }
    if (n != 2) return sylvester_resultant(p, q, var);

    int other = 1 - var;
    long dpo = p.degree_in(other).value_or(0);
    long dqo = q.degree_in(other).value_or(0);
    long bound = dp * dqo + dq * dpo; // Sylvester row bound
    auto rows_p = biv_coeffs(p, var);
    auto rows_q = biv_coeffs(q, var);
    // When a factor is monic in var with total degree equal to its var-degree,
    // its root branches grow at most linearly in the other variable, so the
    // resultant degree is bounded by deg_var * total_deg of the partner.
    long tp = p.total_degree().value_or(0), tq = q.total_degree().value_or(0);
    if (rows_p[dp].deg() == 0 && tp == dp) bound = std::min(bound, dp * tq);
    if (rows_q[dq].deg() == 0 && tq == dq) bound = std::min(bound, dq * tp);
    K sample = p.leading_coeff();
    std::vector<long> nodes;
    std::vector<K> vs;
    nodes.reserve(bound + 1);
    for (long pt = 0; static_cast<long>(nodes.size()) <= bound; ++pt) {
        K x = k_from_rational(sample, Rational(pt));
        if (rows_p[dp].eval(x).is_zero() || rows_q[dq].eval(x).is_zero()) continue;
        std::vector<K> cp(dp + 1, k_zero(sample)), cq(dq + 1, k_zero(sample));
        for (long i = 0; i <= dp; ++i) cp[i] = rows_p[i].eval(x);
        for (long i = 0; i <= dq; ++i) cq[i] = rows_q[i].eval(x);
        nodes.push_back(pt);
        vs.push_back(upoly_resultant(UPoly<K>(std::move(cp)), UPoly<K>(std::move(cq))));
    }
    UPoly<K> r = UPoly<K>::interpolate_integer_nodes(nodes, std::move(vs), sample);
    return from_upoly(r, 2, other);
}

} // namespace atlas
