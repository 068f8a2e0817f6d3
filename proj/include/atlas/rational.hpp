#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "atlas/error.hpp"

namespace atlas {

// Arbitrary-precision rational in canonical form: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    explicit Rational(mpz_class n) : num_(std::move(n)), den_(1) {}
    Rational(mpz_class num, mpz_class den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Accepts "p", "p/q", optional leading sign, arbitrary size.
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const;
    Rational pow(long e) const;
    Rational abs() const { return sgn() < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    size_t hash() const;
    std::string str() const;
    double to_double() const;

private:
    void canonicalize();

    mpz_class num_;
    mpz_class den_;
};

size_t hash_mpz(const mpz_class& z);

inline size_t hash_combine(size_t a, size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

} // namespace atlas
