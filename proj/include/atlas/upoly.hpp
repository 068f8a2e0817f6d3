#pragma once

#include <map>
#include <utility>
#include <vector>

#include "atlas/cyclotomic.hpp"
#include "atlas/error.hpp"
#include "atlas/fp.hpp"
#include "atlas/rational.hpp"

namespace atlas {

// Small coefficient-field shims so the templates below work uniformly over
// Rational, Cyclotomic and Fp. The "sample" argument supplies runtime context
// (cyclotomic order, prime modulus) that a bare constructor cannot know.

inline Rational k_zero(const Rational&) { return Rational(0); }
inline Rational k_one(const Rational&) { return Rational(1); }
inline Rational k_from_rational(const Rational&, const Rational& r) { return r; }
inline Rational k_pow(const Rational& x, long e) { return x.pow(e); }

inline Cyclotomic k_zero(const Cyclotomic& s) { return Cyclotomic::zero(s.order()); }
inline Cyclotomic k_one(const Cyclotomic& s) { return Cyclotomic::one(s.order()); }
inline Cyclotomic k_from_rational(const Cyclotomic& s, const Rational& r) {
    return Cyclotomic(r, s.order());
}
inline Cyclotomic k_pow(const Cyclotomic& x, long e) { return x.pow(e); }

inline Fp k_zero(const Fp& s) { return Fp{0, s.p}; }
inline Fp k_one(const Fp& s) { return Fp{1 % s.p, s.p}; }
inline Fp k_from_rational(const Fp& s, const Rational& r) {
    unsigned long n = mpz_fdiv_ui(r.num().get_mpz_t(), s.p);
    unsigned long d = mpz_fdiv_ui(r.den().get_mpz_t(), s.p);
    if (d == 0) raise(Errc::DivisionByZero, "denominator divisible by modulus");
    return Fp{n, s.p} / Fp{d, s.p};
}
inline Fp k_pow(const Fp& x, long e) { return x.pow(e); }

// Common rational content of a coefficient list (gcd of numerators over lcm of
// denominators); used to keep PRS intermediates primitive. Fp has none.
inline Rational rational_content(const Rational& x) { return x; }
inline Rational rational_content(const Cyclotomic& x) { return x.rational_content(); }
inline Rational rational_content(const Fp&) { return Rational(1); }

template <class K>
Rational list_rational_content(const std::vector<K>& v) {
    mpz_class g(0), l(1);
    bool any = false;
    for (const auto& x : v) {
        Rational c = rational_content(x);
        if (c.is_zero()) continue;
        any = true;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    if (!any) return Rational(1);
    return Rational(g, l);
}

// Dense univariate polynomial over a field K; empty vector encodes zero,
// otherwise the trailing coefficient is nonzero.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(K v) {
        UPoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    static UPoly monomial(K v, size_t e) {
        UPoly p;
        if (v.is_zero()) return p;
        p.c_.assign(e + 1, k_zero(v));
        p.c_[e] = std::move(v);
        return p;
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& operator[](size_t i) const { return c_[i]; }
    const K& lc() const { return c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        std::vector<K> c(std::max(c_.size(), o.c_.size()),
                         k_zero(sample_of(*this, o)));
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
        return UPoly(std::move(c));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<K> c(c_.size() + o.c_.size() - 1, k_zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                c[i + j] = c[i + j] + c_[i] * o.c_[j];
            }
        }
        return UPoly(std::move(c));
    }
    UPoly scaled(const K& s) const {
        if (s.is_zero()) return UPoly();
        UPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }
    UPoly shifted(size_t e) const { // * x^e
        if (is_zero() || e == 0) return *this;
        UPoly r;
        r.c_.assign(c_.size() + e, k_zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + e] = c_[i];
        return r;
    }

    // Field division with remainder.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        if (d.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
        if (deg() < d.deg()) return {UPoly(), *this};
        UPoly r = *this;
        std::vector<K> q(deg() - d.deg() + 1, k_zero(d.lc()));
        while (!r.is_zero() && r.deg() >= d.deg()) {
            K c = r.lc() / d.lc();
            size_t sh = r.deg() - d.deg();
            q[sh] = c;
            for (size_t j = 0; j < d.c_.size(); ++j) r.c_[sh + j] = r.c_[sh + j] - c * d.c_[j];
            r.trim();
        }
        return {UPoly(std::move(q)), std::move(r)};
    }

    UPoly derivative() const {
        if (deg() < 1) return UPoly();
        std::vector<K> c(c_.size() - 1, k_zero(c_[0]));
        for (size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * k_from_rational(c_[i], Rational(static_cast<long>(i)));
        return UPoly(std::move(c));
    }

    K eval(const K& x) const {
        if (is_zero()) return k_zero(x);
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Strips the common rational content; returns the stripped scalar
    // (meaningful only for nonzero polynomials).
    K strip_content() {
        if (is_zero()) return K{};
        Rational c = list_rational_content(c_);
        K sc = k_from_rational(c_[0], c);
        if (!c.is_one()) {
            K inv = k_from_rational(c_[0], c.inverse());
            for (auto& x : c_) x = x * inv;
        }
        return sc;
    }

    UPoly monic() const {
        if (is_zero() || lc() == k_one(lc())) return *this;
        UPoly r = *this;
        K inv = k_one(lc()) / lc();
        for (auto& x : r.c_) x = x * inv;
        return r;
    }

    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Newton interpolation through (xs[i], vs[i]); xs pairwise distinct.
    static UPoly interpolate(const std::vector<K>& xs, std::vector<K> vs) {
        size_t n = xs.size();
        if (n == 0) return UPoly();
        for (size_t j = 1; j < n; ++j) {
            for (size_t i = n; i-- > j;) {
                vs[i] = (vs[i] - vs[i - 1]) / (xs[i] - xs[i - j]);
            }
        }
        UPoly p = UPoly::constant(vs[n - 1]);
        for (size_t i = n - 1; i-- > 0;) {
            // p = p*(x - xs[i]) + vs[i]
            p = p.shifted(1) - p.scaled(xs[i]) + UPoly::constant(vs[i]);
        }
        return p;
    }

    // Same, for small-integer nodes: node differences repeat heavily, so their
    // inverses are cached, and the Newton-to-monomial pass runs in place.
    static UPoly interpolate_integer_nodes(const std::vector<long>& nodes, std::vector<K> vs,
                                           const K& sample) {
        size_t n = nodes.size();
        if (n == 0) return UPoly();
        std::map<long, K> inv;
        for (size_t j = 1; j < n; ++j) {
            for (size_t i = n; i-- > j;) {
                long diff = nodes[i] - nodes[i - j];
                auto it = inv.find(diff);
                if (it == inv.end()) {
                    K d = k_from_rational(sample, Rational(diff));
                    it = inv.emplace(diff, k_one(sample) / d).first;
                }
                vs[i] = (vs[i] - vs[i - 1]) * it->second;
            }
        }
        std::vector<K> out(n, k_zero(sample));
        long deg = -1;
        for (size_t i = n; i-- > 0;) {
            K xi = k_from_rational(sample, Rational(nodes[i]));
            if (deg < 0) {
                out[0] = vs[i];
                deg = 0;
                continue;
            }
            // out <- out*(x - xi) + dd_i, top down
            out[deg + 1] = out[deg];
            for (long k = deg; k >= 1; --k) out[k] = out[k - 1] - xi * out[k];
            out[0] = vs[i] - xi * out[0];
            ++deg;
        }
        return UPoly(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static const K& sample_of(const UPoly& a, const UPoly& b) {
        static const K fallback{};
        if (!a.c_.empty()) return a.c_[0];
        if (!b.c_.empty()) return b.c_[0];
        return fallback;
    }
    K guess_sample() const { return c_.empty() ? K{} : c_[0]; }

    std::vector<K> c_;
};

// gcd, normalized monic; primitive Euclid (field division + content stripping).
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a.strip_content();
    b.strip_content();
    while (!b.is_zero()) {
        UPoly<K> r = a.divrem(b).second;
        r.strip_content();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Exact resultant via the Euclidean recursion with content-scaling bookkeeping.
template <class K>
K upoly_resultant(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() || b.is_zero()) {
        K s = a.is_zero() ? (b.is_zero() ? K{} : b.lc()) : a.lc();
        return k_zero(s);
    }
    K acc = k_one(a.lc());
    for (;;) {
        if (a.deg() == 0) return acc * k_pow(a.lc(), b.deg());
        if (b.deg() == 0) return acc * k_pow(b.lc(), a.deg());
        if (a.deg() < b.deg()) {
            if ((a.deg() & 1) && (b.deg() & 1)) acc = -acc;
            std::swap(a, b);
        }
        int m = a.deg(), n = b.deg();
        UPoly<K> r = a.divrem(b).second;
        if (r.is_zero()) return k_zero(acc);
        K gamma = r.strip_content();
        if ((m & 1) && (n & 1)) acc = -acc;
        acc = acc * k_pow(b.lc(), m - r.deg()) * k_pow(gamma, n);
        a = std::move(b);
        b = std::move(r);
    }
}

template <class K>
UPoly<K> upoly_squarefree_part(const UPoly<K>& p) {
    if (p.deg() <= 0) return p.monic();
    UPoly<K> g = upoly_gcd(p, p.derivative());
    auto [q, r] = p.divrem(g);
    if (!r.is_zero()) raise(Errc::Domain, "squarefree division not exact");
    return q.monic();
}

} // namespace atlas
