#include "atlas/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace atlas {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

namespace {

using ZPoly = std::vector<mpz_class>; // dense, constant term first

// Exact division q = a / b for monic b over Z; a consumed.
ZPoly divide_monic(ZPoly a, const ZPoly& b) {
    size_t db = b.size() - 1;
    size_t da = a.size() - 1;
    ZPoly q(da - db + 1);
    for (size_t qi = da - db + 1; qi-- > 0;) {
        mpz_class c = a[qi + db];
        if (c != 0) {
            q[qi] = c;
            for (size_t j = 0; j <= db; ++j) a[qi + j] -= c * b[j];
        }
    }
    return q;
}

ZPoly phi_n_integer(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::vector<unsigned> todo{n};
    while (!todo.empty()) {
        unsigned m = todo.back();
        if (cache.count(m)) {
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d == 0 && !cache.count(d)) {
                todo.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        todo.pop_back();
        ZPoly num(m + 1);
        num[0] = -1;
        num[m] = 1; // x^m - 1
        for (unsigned d = 1; d < m; ++d) {
            if (m % d == 0) num = divide_monic(std::move(num), cache.at(d));
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

struct CycloTable {
    unsigned n = 1;
    unsigned phi = 1;
    ZPoly phi_poly;
    // x^k mod Phi_n for k in [phi, n-1]; row (k - phi) has length phi.
    std::vector<ZPoly> pow_red;
};

const CycloTable& cyclo_table(unsigned n) {
    static std::map<unsigned, std::unique_ptr<CycloTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto t = std::make_unique<CycloTable>();
    t->n = n;
    t->phi = euler_phi(n);
    t->phi_poly = phi_n_integer(n);
    unsigned phi = t->phi;
    if (n > phi) {
        t->pow_red.resize(n - phi);
        ZPoly row(phi);
        for (unsigned j = 0; j < phi; ++j) row[j] = -t->phi_poly[j]; // x^phi
        t->pow_red[0] = row;
        for (unsigned k = phi + 1; k < n; ++k) {
            ZPoly next(phi);
            // multiply previous row by x, reduce the overflow coefficient
            const ZPoly& prev = t->pow_red[k - phi - 1];
            for (unsigned j = 0; j + 1 < phi; ++j) next[j + 1] = prev[j];
            const mpz_class& top = prev[phi - 1];
            if (top != 0) {
                for (unsigned j = 0; j < phi; ++j) next[j] -= top * t->phi_poly[j];
            }
            t->pow_red[k - phi] = std::move(next);
        }
    }
    const CycloTable& ref = *t;
    cache.emplace(n, std::move(t));
    return ref;
}

// Adds c * (x^e mod Phi_n) into acc (length phi); 0 <= e < n.
void add_reduced_power(std::vector<mpz_class>& acc, const mpz_class& c, unsigned e,
                       const CycloTable& t) {
    if (e < t.phi) {
        acc[e] += c;
        return;
    }
    const ZPoly& row = t.pow_red[e - t.phi];
    for (unsigned j = 0; j < t.phi; ++j) {
        if (row[j] != 0) acc[j] += c * row[j];
    }
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n < 1) raise(Errc::Domain, "cyclotomic_polynomial needs n >= 1");
    ZPoly z = phi_n_integer(n);
    std::vector<Rational> out;
    out.reserve(z.size());
    for (auto& c : z) out.emplace_back(c);
    return out;
}

Cyclotomic::Cyclotomic(const Rational& r, unsigned order) : order_(order), den_(r.den()) {
    if (order < 1) raise(Errc::Domain, "cyclotomic order must be >= 1");
    num_.assign(euler_phi(order), mpz_class(0));
    num_[0] = r.num();
}

Cyclotomic Cyclotomic::from_raw(unsigned order, std::vector<mpz_class> num, mpz_class den) {
    Cyclotomic c;
    c.order_ = order;
    c.num_ = std::move(num);
    c.den_ = std::move(den);
    c.canonicalize();
    return c;
}

void Cyclotomic::canonicalize() {
    mpz_class g = den_;
    for (const auto& z : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    bool all_zero = true;
    for (const auto& z : num_)
        if (z != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g > 1) {
        for (auto& z : num_) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
    if (n < 1) raise(Errc::Domain, "root_of_unity needs n >= 1");
    const CycloTable& t = cyclo_table(n);
    long e = k % static_cast<long>(n);
    if (e < 0) e += n;
    std::vector<mpz_class> num(t.phi);
    add_reduced_power(num, mpz_class(1), static_cast<unsigned>(e), t);
    return from_raw(n, std::move(num), mpz_class(1));
}

Cyclotomic Cyclotomic::sqrt_embed(unsigned n) {
    if (n == 2) {
        // zeta(8) + zeta(8)^7
        return root_of_unity(8, 1) + root_of_unity(8, 7);
    }
    if (n == 5) {
        // 1 + 2 zeta(5) + 2 zeta(5)^4 (quadratic Gauss sum)
        return Cyclotomic(Rational(1), 5) + Cyclotomic(Rational(2), 5) * root_of_unity(5, 1) +
               Cyclotomic(Rational(2), 5) * root_of_unity(5, 4);
    }
    raise(Errc::Domain, "sqrt_embed supports n in {2, 5}");
}

bool Cyclotomic::is_zero() const {
    for (const auto& z : num_)
        if (z != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) raise(Errc::Domain, "cyclotomic value is not rational: " + str());
    return Rational(num_[0], den_);
}

Rational Cyclotomic::rational_content() const {
    mpz_class g(0);
    for (const auto& z : num_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0) return Rational(0);
    return Rational(g, den_);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic c = *this;
    for (auto& z : c.num_) z = -z;
    return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        unsigned L = lcm_u(order_, o.order_);
        return embedded(L) + o.embedded(L);
    }
    std::vector<mpz_class> num(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return from_raw(order_, std::move(num), den_ * o.den_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        unsigned L = lcm_u(order_, o.order_);
        return embedded(L) * o.embedded(L);
    }
    const CycloTable& t = cyclo_table(order_);
    unsigned phi = t.phi;
    std::vector<mpz_class> conv(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.num_[j] == 0) continue;
            conv[i + j] += num_[i] * o.num_[j];
        }
    }
    std::vector<mpz_class> num(phi);
    for (unsigned k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        add_reduced_power(num, conv[k], k % order_, t);
    }
    return from_raw(order_, std::move(num), den_ * o.den_);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) raise(Errc::DivisionByZero, "cyclotomic inverse of zero");
    // Extended Euclid over Q[x] against Phi_N on the numerator vector.
    using QPoly = std::vector<Rational>;
    auto deg = [](const QPoly& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<long>(i);
        return -1L;
    };
    const CycloTable& t = cyclo_table(order_);
    QPoly r0(t.phi_poly.size());
    for (size_t i = 0; i < t.phi_poly.size(); ++i) r0[i] = Rational(t.phi_poly[i]);
    QPoly r1(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) r1[i] = Rational(num_[i]);
    QPoly s0{Rational(0)}, s1{Rational(1)}; // coefficients of the input residue
    while (true) {
        long d1 = deg(r1);
        if (d1 < 0) raise(Errc::Domain, "non-invertible residue (Phi_N not coprime?)");
        if (d1 == 0) break;
        long d0 = deg(r0);
        // r0 -= q * r1, s0 -= q * s1 via synthetic division
        while (d0 >= d1) {
            Rational c = r0[d0] / r1[d1];
            long shift = d0 - d1;
            for (long i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
            if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift);
            for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= c * s1[i];
            long nd = -1;
            for (long i = d0; i >= 0; --i)
                if (!r0[i].is_zero()) {
                    nd = i;
                    break;
                }
            d0 = nd;
            if (d0 < 0) break;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 = const c; inverse of residue = s1 / c, times den_ (value = num/den)
    Rational c = r1[deg(r1)];
    std::vector<mpz_class> out(t.phi);
    mpz_class lcm_den(1);
    std::vector<Rational> coeffs(t.phi);
    for (size_t i = 0; i < s1.size() && i < t.phi; ++i) {
        coeffs[i] = s1[i] / c * Rational(den_);
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), coeffs[i].den().get_mpz_t());
    }
    for (size_t i = 0; i < t.phi; ++i) out[i] = coeffs[i].num() * (lcm_den / coeffs[i].den());
    return from_raw(order_, std::move(out), lcm_den);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    if (o.is_zero()) raise(Errc::DivisionByZero, "cyclotomic division by zero");
    if (order_ != o.order_) {
        unsigned L = lcm_u(order_, o.order_);
        return embedded(L) / o.embedded(L);
    }
    return *this * o.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic r = Cyclotomic::one(order_);
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

Cyclotomic Cyclotomic::galois(unsigned k) const {
    if (std::gcd(k, order_) != 1) raise(Errc::Domain, "galois exponent not coprime to order");
    const CycloTable& t = cyclo_table(order_);
    std::vector<mpz_class> num(t.phi);
    for (unsigned i = 0; i < t.phi; ++i) {
        if (num_[i] == 0) continue;
        add_reduced_power(num, num_[i], static_cast<unsigned>((static_cast<unsigned long>(i) * k) % order_), t);
    }
    return from_raw(order_, std::move(num), den_);
}

Cyclotomic Cyclotomic::conj() const { return order_ == 1 ? *this : galois(order_ - 1); }

Cyclotomic Cyclotomic::embedded(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) raise(Errc::Domain, "embedding target must be a multiple of the order");
    const CycloTable& t = cyclo_table(m);
    unsigned stride = m / order_;
    std::vector<mpz_class> num(t.phi);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        add_reduced_power(num, num_[i], static_cast<unsigned>(i) * stride % m, t);
    }
    return from_raw(m, std::move(num), den_);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return den_ == o.den_ && num_ == o.num_;
    unsigned L = lcm_u(order_, o.order_);
    return embedded(L) == o.embedded(L);
}

size_t Cyclotomic::hash() const {
    size_t h = hash_combine(0x9d3f, order_);
    h = hash_combine(h, hash_mpz(den_));
    for (const auto& z : num_) h = hash_combine(h, hash_mpz(z));
    return h;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return Rational(num_[0], den_).str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        Rational c(num_[i], den_);
        bool neg = c.sgn() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "zeta(" << order_ << ")";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> s{0.0, 0.0};
    double d = mpz_class(den_).get_d();
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(order_);
        s += num_[i].get_d() / d * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

} // namespace atlas
