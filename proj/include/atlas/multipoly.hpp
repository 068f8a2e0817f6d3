#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "atlas/upoly.hpp"

namespace atlas {

using Mono = std::vector<uint32_t>;

inline uint64_t mono_degree(const Mono& m) {
    uint64_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

// Graded lexicographic, descending: map iteration starts at the leading term.
struct GradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        uint64_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial with exact field coefficients; no stored
// coefficient is zero, every exponent vector has length nvars.
template <class K>
class MultiPoly {
public:
    using TermMap = std::map<Mono, K, GradedLexDesc>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, K c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), std::move(c));
        return p;
    }
    static MultiPoly variable(int nvars, int var, const K& one_sample) {
        MultiPoly p(nvars);
        Mono m(nvars, 0);
        m[var] = 1;
        p.terms_.emplace(std::move(m), k_one(one_sample));
        return p;
    }
    static MultiPoly monomial(int nvars, Mono m, K c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree; nullopt encodes the minus-infinity degree of 0.
    std::optional<long> total_degree() const {
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            long dm = static_cast<long>(mono_degree(m));
            if (!d || dm > *d) d = dm;
        }
        return d;
    }
    std::optional<long> degree_in(int var) const {
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            long dm = m[var];
            if (!d || dm > *d) d = dm;
        }
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        uint64_t d = mono_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }
    bool depends_on(int var) const {
        for (const auto& [m, c] : terms_)
            if (m[var] > 0) return true;
        return false;
    }

    K coeff(const Mono& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return k_zero(sample());
        return it->second;
    }
    const Mono& leading_monomial() const { return terms_.begin()->first; }
    const K& leading_coeff() const { return terms_.begin()->second; }
    K sample() const { return terms_.empty() ? K{} : terms_.begin()->second; }

    void add_term(Mono m, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(m), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        check_arity(o);
        MultiPoly r(nvars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Mono m(nvars_);
                for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }
    MultiPoly scaled(const K& s) const {
        MultiPoly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly base = *this;
        MultiPoly r = constant(nvars_, k_one(sample()));
        if (terms_.empty() && e > 0) return MultiPoly(nvars_);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono d = m;
            d[var] -= 1;
            r.add_term(std::move(d), c * k_from_rational(c, Rational(static_cast<long>(m[var]))));
        }
        return r;
    }

    K eval(const std::vector<K>& pt) const {
        K acc = k_zero(pt.empty() ? sample() : pt[0]);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (int i = 0; i < nvars_; ++i)
                if (m[i]) t = t * k_pow(pt[i], m[i]);
            acc = acc + t;
        }
        return acc;
    }

    // Partial evaluation of one variable; arity is preserved.
    MultiPoly eval_var(int var, const K& value) const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            Mono n = m;
            n[var] = 0;
            r.add_term(std::move(n), m[var] ? c * k_pow(value, m[var]) : c);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const { return str(default_names(nvars_)); }

    static std::vector<std::string> default_names(int n) {
        std::vector<std::string> v;
        if (n <= 3) {
            const char* xyz[] = {"x", "y", "z"};
            for (int i = 0; i < n; ++i) v.push_back(xyz[i]);
        } else {
            for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
        }
        return v;
    }

private:
    void check_arity(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) raise(Errc::Domain, "polynomial arity mismatch");
    }

    int nvars_;
    TermMap terms_;
};

template <class K>
std::string MultiPoly<K>::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        // only single-token coefficients may have the sign pulled out
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool has_var = mono_degree(m) > 0;
        bool coeff_needed = !has_var || cs != "1";
        bool wrap = cs.find(' ') != std::string::npos || cs.find("zeta") != std::string::npos;
        if (coeff_needed) os << (wrap ? "(" + cs + ")" : cs);
        bool star = coeff_needed;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

// ---- conversions ----

template <class K, class F>
auto map_coeffs(const MultiPoly<K>& p, F f) -> MultiPoly<decltype(f(p.sample()))> {
    MultiPoly<decltype(f(p.sample()))> r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
    return r;
}

inline MultiPoly<Cyclotomic> to_cyclotomic(const MultiPoly<Rational>& p) {
    return map_coeffs(p, [](const Rational& r) { return Cyclotomic(r); });
}

// ---- substitution and composition ----

template <class K>
MultiPoly<K> compose(const MultiPoly<K>& p, const std::vector<MultiPoly<K>>& args) {
    if (static_cast<size_t>(p.nvars()) != args.size())
        raise(Errc::Domain, "compose arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args)
        if (a.nvars() != out_vars) raise(Errc::Domain, "compose argument arity mismatch");
    // power tables per argument up to the needed exponent
    std::vector<std::vector<MultiPoly<K>>> pows(args.size());
    std::vector<uint32_t> need(args.size(), 0);
    for (const auto& [m, c] : p.terms())
        for (size_t i = 0; i < args.size(); ++i) need[i] = std::max(need[i], m[i]);
    for (size_t i = 0; i < args.size(); ++i) {
        pows[i].push_back(MultiPoly<K>::constant(out_vars, k_one(p.sample())));
        for (uint32_t e = 1; e <= need[i]; ++e) pows[i].push_back(pows[i].back() * args[i]);
    }
    MultiPoly<K> r(out_vars);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly<K> t = MultiPoly<K>::constant(out_vars, c);
        for (size_t i = 0; i < args.size(); ++i)
            if (m[i]) t = t * pows[i][m[i]];
        r = r + t;
    }
    return r;
}

// p(M x): variable i is replaced by sum_j M[i][j] x_j.
template <class K>
MultiPoly<K> substitute_linear(const MultiPoly<K>& p, const std::vector<std::vector<K>>& M) {
    int n = p.nvars();
    if (static_cast<int>(M.size()) != n) raise(Errc::Domain, "matrix size mismatch");
    std::vector<MultiPoly<K>> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(M[i].size()) != n) raise(Errc::Domain, "matrix not square");
        MultiPoly<K> img(n);
        for (int j = 0; j < n; ++j) {
            Mono m(n, 0);
            m[j] = 1;
            img.add_term(std::move(m), M[i][j]);
        }
        images.push_back(std::move(img));
    }
    return compose(p, images);
}

// ---- univariate views ----

template <class K>
bool depends_only_on(const MultiPoly<K>& p, int var) {
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i)
            if (i != var && m[i] > 0) return false;
    return true;
}

template <class K>
UPoly<K> univariate_in(const MultiPoly<K>& p, int var) {
    if (!depends_only_on(p, var)) raise(Errc::Domain, "polynomial is not univariate in var");
    std::vector<K> c(p.degree_in(var).value_or(-1) + 1, k_zero(p.sample()));
    for (const auto& [m, co] : p.terms()) c[m[var]] = co;
    return UPoly<K>(std::move(c));
}

template <class K>
MultiPoly<K> from_upoly(const UPoly<K>& u, int nvars, int var) {
    MultiPoly<K> r(nvars);
    for (int i = 0; i <= u.deg(); ++i) {
        if (u[i].is_zero()) continue;
        Mono m(nvars, 0);
        m[var] = static_cast<uint32_t>(i);
        r.add_term(std::move(m), u[i]);
    }
    return r;
}

// Bivariate p viewed as univariate in `var` with UPoly coefficients in the
// other variable; index = degree in var.
template <class K>
std::vector<UPoly<K>> biv_coeffs(const MultiPoly<K>& p, int var) {
    if (p.nvars() != 2) raise(Errc::Domain, "biv_coeffs needs 2 variables");
    int other = 1 - var;
    long dv = p.degree_in(var).value_or(-1);
    std::vector<std::vector<K>> rows(dv + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& row = rows[m[var]];
        if (row.size() <= m[other]) row.resize(m[other] + 1, k_zero(c));
        row[m[other]] = c;
    }
    std::vector<UPoly<K>> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

template <class K>
MultiPoly<K> from_biv_coeffs(const std::vector<UPoly<K>>& rows, int var) {
    int other = 1 - var;
    MultiPoly<K> r(2);
    for (size_t d = 0; d < rows.size(); ++d) {
        for (int j = 0; j <= rows[d].deg(); ++j) {
            if (rows[d][j].is_zero()) continue;
            Mono m(2, 0);
            m[var] = static_cast<uint32_t>(d);
            m[other] = static_cast<uint32_t>(j);
            r.add_term(std::move(m), rows[d][j]);
        }
    }
    return r;
}

// Homogeneous bivariate p = y^k * hom(U)(x, y) with U(t) = p(t, 1)/y-part.
template <class K>
struct HomView {
    uint32_t y_mult = 0;
    UPoly<K> u; // u(t), t = x/y
    long total_deg = 0;
};

template <class K>
HomView<K> dehomogenize(const MultiPoly<K>& p) {
    if (p.nvars() != 2 || p.is_zero() || !p.is_homogeneous())
        raise(Errc::Domain, "dehomogenize needs nonzero homogeneous bivariate");
    HomView<K> v;
    v.total_deg = *p.total_degree();
    uint32_t ymin = UINT32_MAX;
    for (const auto& [m, c] : p.terms()) ymin = std::min(ymin, m[1]);
    v.y_mult = ymin;
    std::vector<K> coeffs(v.total_deg - ymin + 1, k_zero(p.sample()));
    for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
    v.u = UPoly<K>(std::move(coeffs));
    return v;
}

template <class K>
MultiPoly<K> homogenize(const UPoly<K>& u, uint32_t y_mult) {
    MultiPoly<K> r(2);
    if (u.is_zero()) return r;
    uint32_t d = static_cast<uint32_t>(u.deg());
    for (uint32_t i = 0; i <= d; ++i) {
        if (u[i].is_zero()) continue;
        r.add_term(Mono{i, d - i + y_mult}, u[i]);
    }
    return r;
}

// ---- exact division ----

// Greedy head division in graded-lex order: succeeds iff d | p exactly.
template <class K>
std::optional<MultiPoly<K>> exact_divide(const MultiPoly<K>& p, const MultiPoly<K>& d) {
    if (d.is_zero()) raise(Errc::DivisionByZero, "exact division by zero polynomial");
    MultiPoly<K> q(p.nvars());
    MultiPoly<K> r = p;
    const Mono& dm = d.leading_monomial();
    while (!r.is_zero()) {
        const Mono& rm = r.leading_monomial();
        Mono qm(r.nvars());
        for (int i = 0; i < r.nvars(); ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            qm[i] = rm[i] - dm[i];
        }
        K qc = r.leading_coeff() / d.leading_coeff();
        MultiPoly<K> t = MultiPoly<K>::monomial(r.nvars(), qm, qc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

// ---- monomial staircase ----

// Count of monomials outside the ideal generated by `gens`; nullopt = infinite.
inline std::optional<unsigned long> monomial_staircase_codim(const std::vector<Mono>& gens,
                                                             int nvars) {
    for (const auto& g : gens) {
        bool all_zero = true;
        for (uint32_t e : g) all_zero = all_zero && e == 0;
        if (all_zero) return 0; // unit ideal
    }
    std::vector<uint32_t> bound(nvars, 0);
    std::vector<bool> has_pure(nvars, false);
    for (const auto& g : gens) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i) {
            if (g[i] > 0) {
                if (nz >= 0) pure = false;
                nz = i;
            }
        }
        if (pure && nz >= 0) {
            if (!has_pure[nz] || g[nz] < bound[nz]) bound[nz] = g[nz];
            has_pure[nz] = true;
        }
    }
    for (int i = 0; i < nvars; ++i)
        if (!has_pure[i]) return std::nullopt;
    // enumerate the box, reject multiples of any generator
    unsigned long count = 0;
    Mono m(nvars, 0);
    for (;;) {
        bool inside = false;
        for (const auto& g : gens) {
            bool divides = true;
            for (int i = 0; i < nvars; ++i)
                if (m[i] < g[i]) {
                    divides = false;
                    break;
                }
            if (divides) {
                inside = true;
                break;
            }
        }
        if (!inside) ++count;
        int i = 0;
        for (; i < nvars; ++i) {
            if (++m[i] < bound[i]) break;
            m[i] = 0;
        }
        if (i == nvars) break;
    }
    return count;
}

} // namespace atlas
