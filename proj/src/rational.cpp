#include "atlas/rational.hpp"

namespace atlas {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (mpz_sgn(den_.get_mpz_t()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(mpz_class(std::string(s)));
        mpz_class n{std::string(s.substr(0, slash))};
        mpz_class d{std::string(s.substr(slash + 1))};
        return Rational(std::move(n), std::move(d));
    } catch (const std::invalid_argument&) {
        raise(Errc::ParseError, "bad rational literal: " + std::string(s));
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) raise(Errc::DivisionByZero, "rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(r.num_.get_mpz_t(), num_.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.den_.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(e));
    return r; // canonical since inputs coprime
}

bool Rational::operator<(const Rational& o) const {
    mpz_class lhs = num_ * o.den_;
    mpz_class rhs = o.num_ * den_;
    return lhs < rhs;
}

size_t hash_mpz(const mpz_class& z) {
    // Canonical values hash by residue; sign mixed in separately.
    constexpr unsigned long kMod = 0xFFFFFFFFFFFFFFC5ull; // largest 64-bit prime
    unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), kMod);
    return hash_combine(static_cast<size_t>(r), static_cast<size_t>(mpz_sgn(z.get_mpz_t()) + 2));
}

size_t Rational::hash() const { return hash_combine(hash_mpz(num_), hash_mpz(den_)); }

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

} // namespace atlas
