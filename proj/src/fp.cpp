#include "atlas/fp.hpp"

#include <vector>

namespace atlas {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all n < 3.3e24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp Fp::pow(long e) const {
    if (e < 0) {
        if (v == 0) raise(Errc::DivisionByZero, "F_p inverse of zero");
        return Fp{powmod_u64(v, p - 2, p), p}.pow(-e);
    }
    return {powmod_u64(v, static_cast<uint64_t>(e), p), p};
}

static std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

FpContext::FpContext(uint64_t prime, unsigned root_order) : p_(prime), order_(root_order) {
    if (!is_prime_u64(prime) || (prime - 1) % root_order != 0)
        raise(Errc::Domain, "FpContext needs prime ≡ 1 (mod L)");
    auto qs = prime_factors(root_order);
    uint64_t cofactor = (p_ - 1) / root_order;
    for (uint64_t a = 2;; ++a) {
        uint64_t r = powmod_u64(a, cofactor, p_);
        bool full = r != 1;
        for (unsigned q : qs) {
            if (powmod_u64(r, root_order / q, p_) == 1) {
                full = false;
                break;
            }
        }
        if (root_order == 1) full = true, r = 1;
        if (full) {
            root_ = r;
            return;
        }
        if (a > 10000) raise(Errc::Domain, "no element of requested order found");
    }
}

Fp FpContext::from_integer(const mpz_class& z) const {
    unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p_);
    return {r, p_};
}

Fp FpContext::from_rational(const Rational& r) const {
    Fp d = from_integer(r.den());
    if (d.v == 0) raise(Errc::DivisionByZero, "denominator divisible by reduction prime");
    return from_integer(r.num()) / d;
}

Fp FpContext::zeta_image(unsigned n) const {
    if (n == 0 || order_ % n != 0) raise(Errc::Domain, "zeta order does not divide context order");
    return {powmod_u64(root_, order_ / n, p_), p_};
}

uint64_t FpContext::find_prime(uint64_t start, unsigned L) {
    uint64_t p = start + (L - start % L) + 1; // p ≡ 1 (mod L)
    for (;; p += L) {
        if (is_prime_u64(p)) return p;
    }
}

} // namespace atlas
