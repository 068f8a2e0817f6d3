#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "atlas/error.hpp"
#include "atlas/rational.hpp"

namespace atlas {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
bool is_prime_u64(uint64_t n);

// Element of F_p for a word-size prime p carried alongside the value.
struct Fp {
    uint64_t v = 0;
    uint64_t p = 0;

    bool is_zero() const { return v == 0; }
    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp operator-() const { return {v == 0 ? 0 : p - v, p}; }
    Fp operator+(const Fp& o) const {
        uint64_t s = v + o.v;
        if (s >= p) s -= p;
        return {s, p};
    }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const { return {mulmod_u64(v, o.v, p), p}; }
    Fp operator/(const Fp& o) const {
        if (o.v == 0) raise(Errc::DivisionByZero, "F_p division by zero");
        return *this * Fp{powmod_u64(o.v, p - 2, p), p};
    }

    Fp pow(long e) const;
    std::string str() const { return std::to_string(v); }
};

// Reduction context: a prime p ≡ 1 (mod L) together with a fixed element of
// exact multiplicative order L, giving coherent images of every zeta(N), N | L.
class FpContext {
public:
    FpContext(uint64_t prime, unsigned root_order);

    uint64_t prime() const { return p_; }
    unsigned root_order() const { return order_; }

    Fp from_integer(const mpz_class& z) const;
    Fp from_rational(const Rational& r) const; // throws DivisionByZero if p | den
    Fp zeta_image(unsigned n) const;           // requires n | root_order

    // Smallest prime ≥ start with prime ≡ 1 (mod L).
    static uint64_t find_prime(uint64_t start, unsigned L);

private:
    uint64_t p_;
    unsigned order_;
    uint64_t root_; // order exactly order_ in F_p^*
};

} // namespace atlas
