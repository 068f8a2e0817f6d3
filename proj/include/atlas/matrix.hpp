#pragma once

#include "atlas/cyclotomic.hpp"

namespace atlas {

// 2x2 matrix over Q(zeta_N), row major.
struct Mat2 {
    Cyclotomic a, b, c, d;

    static Mat2 identity(unsigned order) {
        return {Cyclotomic::one(order), Cyclotomic::zero(order), Cyclotomic::zero(order),
                Cyclotomic::one(order)};
    }
    static Mat2 diag(Cyclotomic x, Cyclotomic y) {
        unsigned L = lcm_u(x.order(), y.order());
        return {x.embedded(L), Cyclotomic::zero(L), Cyclotomic::zero(L), y.embedded(L)};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 scaled(const Cyclotomic& s) const { return {a * s, b * s, c * s, d * s}; }
    Cyclotomic det() const { return a * d - b * c; }
    Cyclotomic trace() const { return a + d; }

    Mat2 inverse() const {
        Cyclotomic dt = det();
        if (dt.is_zero()) raise(Errc::DivisionByZero, "singular matrix");
        Cyclotomic inv = dt.inverse();
        return {d * inv, (-b) * inv, (-c) * inv, a * inv};
    }

    Mat2 pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Mat2 r = identity(a.order());
        Mat2 base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Mat2 embedded(unsigned m) const {
        return {a.embedded(m), b.embedded(m), c.embedded(m), d.embedded(m)};
    }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    size_t hash() const {
        size_t h = a.hash();
        h = hash_combine(h, b.hash());
        h = hash_combine(h, c.hash());
        h = hash_combine(h, d.hash());
        return h;
    }

    std::string str() const {
        return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
    }

    std::vector<std::vector<Cyclotomic>> rows() const { return {{a, b}, {c, d}}; }
};

} // namespace atlas
