#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "atlas/rational.hpp"

namespace atlas {

unsigned euler_phi(unsigned n);
unsigned lcm_u(unsigned a, unsigned b);

// Phi_N as dense coefficient vector, constant term first (integer coefficients,
// exposed as Rational per the public contract).
std::vector<Rational> cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_N): the unique residue mod Phi_N, stored as an integer
// coefficient vector of length phi(N) over a common positive denominator with
// gcd(content, den) = 1. Immutable value semantics.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), num_(1), den_(1) {}                       // zero in Q
    Cyclotomic(const Rational& r, unsigned order = 1);                  // NOLINT
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}                     // NOLINT

    static Cyclotomic zero(unsigned order = 1) { return Cyclotomic(Rational(0), order); }
    static Cyclotomic one(unsigned order = 1) { return Cyclotomic(Rational(1), order); }
    static Cyclotomic root_of_unity(unsigned n, long k);                // zeta_n^k
    static Cyclotomic sqrt_embed(unsigned n);                           // n in {2, 5}

    unsigned order() const { return order_; }
    size_t dim() const { return num_.size(); } // = phi(order)
    Rational coeff(size_t i) const { return Rational(num_[i], den_); }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const; // requires is_rational()
    Rational rational_content() const; // gcd of coefficients; 0 for zero

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    Cyclotomic conj() const; // zeta -> zeta^{N-1}
    Cyclotomic galois(unsigned k) const; // zeta -> zeta^k, gcd(k, N) = 1

    // Rewrites the value in Q(zeta_m) for order | m.
    Cyclotomic embedded(unsigned m) const;

    bool operator==(const Cyclotomic& o) const; // embeds to lcm when orders differ
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    size_t hash() const;
    std::string str() const;
    std::complex<double> approx() const; // display only, never used in decisions

private:
    void canonicalize();
    static Cyclotomic from_raw(unsigned order, std::vector<mpz_class> num, mpz_class den);

    unsigned order_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

} // namespace atlas
