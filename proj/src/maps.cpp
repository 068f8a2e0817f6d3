#include "atlas/maps.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "atlas/polyparse.hpp"

namespace atlas {
namespace maps {

namespace {

PolyC var_poly(int nvars, int v) { return PolyC::variable(nvars, v, Cyclotomic(1)); }

bool is_coordinate(const PolyC& p, int* var_out) {
    if (p.nterms() != 1) return false;
    const auto& [m, c] = *p.terms().begin();
    if (!(c == Cyclotomic(1))) return false;
    int v = -1;
    for (int i = 0; i < p.nvars(); ++i) {
        if (m[i] == 1 && v < 0) v = i;
        else if (m[i] != 0) return false;
    }
    if (v < 0) return false;
    *var_out = v;
    return true;
}

} // namespace

std::string PolyMap::display() const {
    std::ostringstream os;
    os << "(";
    auto names = PolyC::default_names(n);
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ", ";
        os << components[i].str(names);
    }
    os << ")";
    return os.str();
}

PolyMap family_thmA(int d) {
    if (d < 3) raise(Errc::SpecInvalid, "thmA needs d >= 3");
    PolyMap f;
    f.n = 2;
    f.components = {parse_poly("x + y + x*y", 2),
                    parse_poly("x^" + std::to_string(d - 1) + "*y", 2)};
    f.tag = ThmATag{d};
    return f;
}

PolyMap family_thmB(int d, int a) {
    if (d < 3 || a < 2) raise(Errc::SpecInvalid, "thmB needs d >= 3, a >= 2");
    PolyMap f;
    f.n = 2;
    f.components = {var_poly(2, 0),
                    parse_poly("y^" + std::to_string(d) + " - " + std::to_string(d) + "*x^" +
                                   std::to_string(a) + "*y",
                               2)};
    f.tag = ThmBTag{d, a};
    return f;
}

PolyMap family_thmB1(int d, const Cyclotomic& lambda) {
    if (d < 4) raise(Errc::SpecInvalid, "thmB1 needs d >= 4");
    if (!sing::gamma_membership(d, lambda))
        raise(Errc::NotInGamma, "thmB1 requires lambda in Gamma_d");
    // Q_{d,lambda} = y^{d+1}/(d+1) + (lambda/2) x^{d-1} y^2 + x^d y
    PolyC q(2);
    q.add_term(Mono{0, static_cast<uint32_t>(d + 1)}, Cyclotomic(Rational(1, d + 1)));
    q.add_term(Mono{static_cast<uint32_t>(d - 1), 2}, lambda * Cyclotomic(Rational(1, 2)));
    q.add_term(Mono{static_cast<uint32_t>(d), 1}, Cyclotomic(1));
    PolyMap f;
    f.n = 2;
    f.components = {var_poly(2, 0), q};
    f.tag = ThmB1Tag{d, lambda};
    return f;
}

PolyMap family_thmD(int d, const std::vector<int>& a) {
    if (d < 3) raise(Errc::SpecInvalid, "thmD needs d >= 3");
    if (a.empty()) raise(Errc::SpecInvalid, "thmD needs at least one exponent");
    for (int ai : a)
        if (ai < 2) raise(Errc::SpecInvalid, "thmD needs a_i >= 2");
    int n = static_cast<int>(a.size()) + 1;
    PolyMap f;
    f.n = n;
    for (int i = 0; i + 1 < n; ++i) f.components.push_back(var_poly(n, i));
    // x_n^d - d (x_1^{a_1} + ... + x_{n-1}^{a_{n-1}}) x_n
    PolyC last(n);
    Mono top(n, 0);
    top[n - 1] = static_cast<uint32_t>(d);
    last.add_term(std::move(top), Cyclotomic(1));
    for (int i = 0; i + 1 < n; ++i) {
        Mono m(n, 0);
        m[i] = static_cast<uint32_t>(a[i]);
        m[n - 1] = 1;
        last.add_term(std::move(m), Cyclotomic(-d));
    }
    f.components.push_back(std::move(last));
    f.tag = ThmDTag{d, a};
    return f;
}

PolyMap normal_form_map(const invariants::NormalFormRow& row, int n) {
    PolyMap f;
    if (n == 2) {
        f.n = 2;
        f.components = {row.phi1, row.phi2};
    } else if (n == 3) {
        // the product construction (x1, frak_f(x2, x3))
        f.n = 3;
        std::vector<PolyC> embed{PolyC::variable(3, 1, Cyclotomic(1)),
                                 PolyC::variable(3, 2, Cyclotomic(1))};
        f.components = {var_poly(3, 0), compose(row.phi1, embed), compose(row.phi2, embed)};
    } else {
        raise(Errc::SpecInvalid, "normal form maps support n = 2 or 3");
    }
    f.tag = NormalFormTag{row.name, n};
    return f;
}

PolyMap parse_map_spec(const std::string& text) {
    auto split_ints = [](const std::string& s) {
        std::vector<int> out;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) {
                out.push_back(std::stoi(s.substr(pos)));
                break;
            }
            out.push_back(std::stoi(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return out;
    };
    try {
        if (text.rfind("thmA:", 0) == 0) return family_thmA(std::stoi(text.substr(5)));
        if (text.rfind("thmB:", 0) == 0) {
            auto v = split_ints(text.substr(5));
            if (v.size() == 2) return family_thmB(v[0], v[1]);
        }
        if (text.rfind("thmB1:", 0) == 0) {
            std::string rest = text.substr(6);
            size_t comma = rest.find(',');
            int d = std::stoi(rest.substr(0, comma));
            Cyclotomic lam = parse_scalar(rest.substr(comma + 1));
            return family_thmB1(d, lam);
        }
        if (text.rfind("thmD:", 0) == 0) {
            auto v = split_ints(text.substr(5));
            if (v.size() >= 2) return family_thmD(v[0], {v.begin() + 1, v.end()});
        }
        return normal_form_map(invariants::row_by_name(text), 2);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
    }
    raise(Errc::SpecInvalid, "unrecognized map spec '" + text + "'");
}

PolyC critical_locus(const PolyMap& f) {
    int n = f.n;
    if (static_cast<int>(f.components.size()) != n)
        raise(Errc::SpecInvalid, "component count does not match dimension");
    std::vector<std::vector<PolyC>> jac(n, std::vector<PolyC>(n, PolyC(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i][j] = f.components[i].derivative(j);
    // cofactor expansion along the first row of the minor
    std::function<PolyC(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> PolyC {
        if (rows.size() == 1) return jac[rows[0]][cols[0]];
        PolyC acc(n);
        for (size_t j = 0; j < cols.size(); ++j) {
            if (jac[rows[0]][cols[j]].is_zero()) continue;
            std::vector<int> sub_rows(rows.begin() + 1, rows.end());
            std::vector<int> sub_cols;
            for (size_t k = 0; k < cols.size(); ++k)
                if (k != j) sub_cols.push_back(cols[k]);
            PolyC minor = det(sub_rows, sub_cols);
            PolyC term = jac[rows[0]][cols[j]] * minor;
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return det(idx, idx);
}

// ---- mod-p bridge ----

unsigned cyclo_order_lcm(const PolyC& p) {
    unsigned L = 1;
    for (const auto& [m, c] : p.terms()) L = lcm_u(L, c.order());
    return L;
}

Fp fp_reduce(const FpContext& ctx, const Cyclotomic& c) {
    Fp acc{0, ctx.prime()};
    Fp z = ctx.zeta_image(c.order());
    Fp zp{1 % ctx.prime(), ctx.prime()};
    for (size_t i = 0; i < c.dim(); ++i) {
        Rational co = c.coeff(i);
        if (!co.is_zero()) acc = acc + ctx.from_rational(co) * zp;
        zp = zp * z;
    }
    return acc;
}

MultiPoly<Fp> to_fp(const PolyC& p, const FpContext& ctx) {
    MultiPoly<Fp> r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, fp_reduce(ctx, c));
    return r;
}

// ---- topological degree ----

namespace {

// Remaining system after pinning coordinate components to target values,
// compressed onto the survivor variables.
template <class K>
struct ReducedSystem {
    std::vector<MultiPoly<K>> eqs; // already f_i - s_i, in survivor vars
    int nvars = 0;
    bool degenerate = false; // an equation collapsed to a nonzero constant: empty fiber
};

template <class K>
ReducedSystem<K> reduce_system(const std::vector<MultiPoly<K>>& comps, const std::vector<K>& s) {
    int n = comps.empty() ? 0 : comps[0].nvars();
    std::vector<MultiPoly<K>> eqs = comps;
    std::vector<bool> fixed(n, false);
    std::vector<bool> dead(eqs.size(), false);
    bool progress = true;
    std::vector<std::pair<int, K>> pins;
    for (size_t i = 0; i < eqs.size(); ++i) {
        // f_i - s_i
        eqs[i] = eqs[i] - MultiPoly<K>::constant(n, s[i]);
    }
    while (progress) {
        progress = false;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (dead[i]) continue;
            // look for x_v - c with v not yet fixed
            const auto& terms = eqs[i].terms();
            if (terms.empty() || eqs[i].total_degree() != 1 || eqs[i].nterms() > 2) continue;
            int v = -1;
            K coeff = eqs[i].sample();
            for (const auto& [m, c] : terms) {
                if (mono_degree(m) == 1) {
                    for (int j = 0; j < n; ++j)
                        if (m[j] == 1) v = j;
                    coeff = c;
                }
            }
            if (v < 0 || fixed[v]) continue;
            // x_v = -const/coeff
            K cst = k_zero(coeff);
            for (const auto& [m, c] : terms)
                if (mono_degree(m) == 0) cst = c;
            K value = (-cst) / coeff;
            fixed[v] = true;
            dead[i] = true;
            for (size_t j = 0; j < eqs.size(); ++j)
                if (!dead[j]) eqs[j] = eqs[j].eval_var(v, value);
            progress = true;
        }
    }
    // compress survivors
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!fixed[v]) keep.push_back(v);
    ReducedSystem<K> rs;
    rs.nvars = static_cast<int>(keep.size());
    for (size_t i = 0; i < eqs.size(); ++i) {
        if (dead[i]) continue;
        MultiPoly<K> q(rs.nvars);
        for (const auto& [m, c] : eqs[i].terms()) {
            Mono mm(rs.nvars, 0);
            for (size_t kv = 0; kv < keep.size(); ++kv) mm[kv] = m[keep[kv]];
            q.add_term(std::move(mm), c);
        }
        if (q.is_zero()) continue; // equation became trivial
        if (q.total_degree() == 0) {
            rs.degenerate = true;
            continue;
        }
        rs.eqs.push_back(std::move(q));
    }
    return rs;
}

// Distinct-root count with exact certification: a single prime image with
// coprime gcd proves gcd = 1 over the number field; otherwise fall back to the
// exact primitive Euclid.
long count_distinct_roots_exact(const UPoly<Cyclotomic>& r, std::mt19937_64& rng) {
    if (r.deg() <= 0) return 0;
    UPoly<Cyclotomic> dr = r.derivative();
    unsigned L = 1;
    for (const auto& c : r.coeffs()) L = lcm_u(L, c.order());
    for (int attempt = 0; attempt < 3; ++attempt) {
        uint64_t start = (rng() % (1ull << 40)) + (1ull << 33);
        try {
            FpContext ctx(FpContext::find_prime(start, L), L);
            std::vector<Fp> rc, dc;
            for (const auto& c : r.coeffs()) rc.push_back(fp_reduce(ctx, c));
            UPoly<Fp> rp(std::move(rc));
            if (rp.deg() != r.deg()) continue; // leading coefficient vanished mod p
            for (const auto& c : dr.coeffs()) dc.push_back(fp_reduce(ctx, c));
            if (upoly_gcd(rp, UPoly<Fp>(std::move(dc))).deg() == 0) return r.deg();
        } catch (const Error&) {
            continue; // denominator hit the prime; redraw
        }
        break;
    }
    return r.deg() - upoly_gcd(r, dr).deg();
}

long count_distinct_roots_fp(const UPoly<Fp>& r) {
    if (r.deg() <= 0) return 0;
    return r.deg() - upoly_gcd(r, r.derivative()).deg();
}

// One elimination run over K; nullopt = degenerate (zero eliminant).
template <class K>
std::optional<long> degree_run(const std::vector<MultiPoly<K>>& comps, const std::vector<K>& s,
                               long shear, const K& sample,
                               const std::function<long(const UPoly<K>&)>& count_distinct) {
    ReducedSystem<K> rs = reduce_system(comps, s);
    if (rs.degenerate) return std::nullopt; // inconsistent pin: retry elsewhere
    if (rs.nvars == 0 || rs.eqs.empty()) return std::nullopt;
    if (rs.nvars == 1) {
        if (rs.eqs.size() != 1) return std::nullopt;
        return count_distinct(univariate_in(rs.eqs[0], 0));
    }
    if (rs.nvars != 2 || rs.eqs.size() != 2)
        raise(Errc::Domain, "degree counting needs a map reducible to at most two unknowns");
    // shear x -> x - t y so that both leading y-coefficients are constants
    K t = k_from_rational(sample, Rational(shear));
    std::vector<MultiPoly<K>> sheared;
    MultiPoly<K> xs(2), ys = MultiPoly<K>::variable(2, 1, k_one(sample));
    xs.add_term(Mono{1, 0}, k_one(sample));
    xs.add_term(Mono{0, 1}, -t);
    for (const auto& e : rs.eqs) sheared.push_back(compose(e, {xs, ys}));
    for (const auto& e : sheared) {
        long dy = e.degree_in(1).value_or(-1);
        if (dy < 1) return std::nullopt;
        auto rows = biv_coeffs(e, 1);
        if (rows[dy].deg() > 0) return std::nullopt; // shear failed; caller redraws
    }
    MultiPoly<K> res = resultant_wrt(sheared[0], sheared[1], 1);
    if (res.is_zero()) return std::nullopt;
    if (res.total_degree() == 0) return 0;
    return count_distinct(univariate_in(res, 0));
}

} // namespace

long topological_degree(const PolyMap& f, DegreeMode mode, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x746f7064656772ull);
    std::uniform_int_distribution<long> target_dist(-1000, 1000);
    std::uniform_int_distribution<long> shear_dist(2, 97);

    const int max_attempts = 7;
    std::vector<long> counts;
    int degenerate_runs = 0;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Rational> target;
        for (int i = 0; i < f.n; ++i) target.emplace_back(target_dist(rng));
        long shear = shear_dist(rng) * (rng() % 2 ? 1 : -1);

        std::optional<long> got;
        if (mode == DegreeMode::Exact) {
            std::vector<PolyC> comps = f.components;
            std::vector<Cyclotomic> s;
            for (const auto& r : target) s.emplace_back(r);
            std::function<long(const UPoly<Cyclotomic>&)> counter =
                [&rng](const UPoly<Cyclotomic>& u) { return count_distinct_roots_exact(u, rng); };
            got = degree_run<Cyclotomic>(comps, s, shear, Cyclotomic(1), counter);
        } else {
            unsigned L = 1;
            for (const auto& c : f.components) L = lcm_u(L, cyclo_order_lcm(c));
            std::optional<long> agreed;
            bool prime_trouble = false, degenerate_attempt = false;
            for (int pi = 0; pi < 3; ++pi) {
                uint64_t start = (rng() % (1ull << 44)) + (1ull << 32);
                FpContext ctx(FpContext::find_prime(start, L), L);
                std::vector<MultiPoly<Fp>> comps;
                std::vector<Fp> s;
                try {
                    for (const auto& c : f.components) comps.push_back(to_fp(c, ctx));
                    for (const auto& r : target) s.push_back(ctx.from_rational(r));
                } catch (const Error&) {
                    prime_trouble = true; // denominator hit the prime; redraw attempt
                    break;
                }
                std::function<long(const UPoly<Fp>&)> counter = [](const UPoly<Fp>& u) {
                    return count_distinct_roots_fp(u);
                };
                auto one = degree_run<Fp>(comps, s, shear, Fp{1, ctx.prime()}, counter);
                if (!one) {
                    degenerate_attempt = true;
                    break;
                }
                if (pi == 0) agreed = one;
                else if (agreed != one) {
                    prime_trouble = true; // primes disagree: redraw
                    agreed.reset();
                    break;
                }
            }
            if (degenerate_attempt) {
                ++degenerate_runs;
                continue;
            }
            if (prime_trouble) continue;
            got = agreed;
        }

        if (!got) {
            if (mode == DegreeMode::Exact) ++degenerate_runs;
            continue;
        }
        counts.push_back(*got);
        long best = *std::max_element(counts.begin(), counts.end());
        if (std::count(counts.begin(), counts.end(), best) >= 2) return best;
    }
    if (counts.empty() && degenerate_runs == max_attempts)
        raise(Errc::NotDominant, "every sampled target produced a zero eliminant");
    raise(Errc::DegreeUnstable, "independent targets disagree on the fiber count");
}

PropernessResult properness_test(const PolyMap& f) {
    int n = f.n;
    // monic-graph: n-1 components are distinct coordinates, the last is monic
    // in the remaining variable
    {
        std::vector<int> coord(n, -1);
        std::vector<bool> used_var(n, false);
        int non_coord = -1;
        bool shape_ok = true;
        for (int i = 0; i < n; ++i) {
            int v;
            if (is_coordinate(f.components[i], &v) && !used_var[v]) {
                used_var[v] = true;
                coord[i] = v;
            } else if (non_coord < 0) {
                non_coord = i;
            } else {
                shape_ok = false;
            }
        }
        if (shape_ok && non_coord >= 0) {
            int free_var = -1;
            for (int v = 0; v < n; ++v)
                if (!used_var[v]) free_var = v;
            if (free_var >= 0) {
                const PolyC& g = f.components[non_coord];
                long dv = g.degree_in(free_var).value_or(-1);
                if (dv >= 1) {
                    // leading coefficient in the free variable must be constant
                    PolyC lead(n);
                    for (const auto& [m, c] : g.terms()) {
                        if (static_cast<long>(m[free_var]) == dv) {
                            Mono mm = m;
                            mm[free_var] = 0;
                            lead.add_term(std::move(mm), c);
                        }
                    }
                    if (lead.total_degree() == 0) return {true, "monic-graph"};
                }
            }
        }
    }
    if (n == 2) {
        // leading binary forms with only the trivial common zero
        auto top_form = [](const PolyC& p) {
            PolyC h(2);
            long d = p.total_degree().value_or(0);
            for (const auto& [m, c] : p.terms())
                if (static_cast<long>(mono_degree(m)) == d) h.add_term(m, c);
            return h;
        };
        PolyC h1 = top_form(f.components[0]);
        PolyC h2 = top_form(f.components[1]);
        if (!h1.is_zero() && !h2.is_zero()) {
            auto v1 = dehomogenize(h1);
            auto v2 = dehomogenize(h2);
            bool both_y = v1.y_mult > 0 && v2.y_mult > 0; // common root [1:0]
            if (!both_y && upoly_gcd(v1.u, v2.u).deg() == 0) return {true, "leading-forms"};
        }
    }
    return {false, ""};
}

bool verify_branch_containment(const PolyMap& f, const PolyC& branch) {
    if (f.n != 2) raise(Errc::Domain, "branch containment supports n = 2");
    PolyC j = critical_locus(f);
    if (j.is_zero()) raise(Errc::Domain, "degenerate map: zero Jacobian");
    PolyC pull = compose(branch, f.components);
    return exact_divide(pull, squarefree_part(j)).has_value();
}

// ---- classification ----

namespace {

// Exact certificate that every common zero of the partials of g lies at the
// origin: both eliminants are pure powers of the respective variable.
bool origin_only_singularity(const PolyC& g) {
    PolyC gx = g.derivative(0), gy = g.derivative(1);
    if (gx.is_zero() || gy.is_zero()) return false;
    auto pure_power = [](const PolyC& r, int var) {
        if (r.is_zero()) return false;
        if (r.total_degree() == 0) return true; // no common zeros at all
        if (r.nterms() != 1) return false;
        const auto& m = r.leading_monomial();
        for (int i = 0; i < r.nvars(); ++i)
            if (i != var && m[i] != 0) return false;
        return true;
    };
    // eliminant of the pair in one variable; a partial free of that variable
    // already is one
    auto elim = [](const PolyC& a, const PolyC& b, int var) -> PolyC {
        if (a.degree_in(var).value_or(0) < 1) return a;
        if (b.degree_in(var).value_or(0) < 1) return b;
        return resultant_wrt(a, b, var);
    };
    PolyC rx = elim(gx, gy, 1); // roots cover x-coordinates of singular points
    PolyC ry = elim(gx, gy, 0);
    if (rx.is_zero() || ry.is_zero()) return false;
    return pure_power(rx, 0) && pure_power(ry, 1);
}

struct MilnorInvariant {
    bool decided = false;
    std::vector<unsigned long> multiset; // origin-local
    std::string note;
};

MilnorInvariant milnor_invariant(const PolyMap& f) {
    MilnorInvariant mi;
    if (f.n != 2) {
        if (const auto* tag = std::get_if<ThmDTag>(&f.tag)) {
            mi.decided = true;
            mi.multiset = {*sing::milnor_brieskorn(tag->d, tag->a).milnor};
            mi.note = "milnor: Brieskorn staircase for the tagged family";
            return mi;
        }
        mi.note = "milnor skipped: dimension > 2 without a closed-form tag";
        return mi;
    }
    PolyC j = critical_locus(f);
    if (j.is_zero()) {
        mi.note = "milnor skipped: zero Jacobian";
        return mi;
    }
    if (j.total_degree() == 0) {
        mi.decided = true; // empty critical locus (automorphism-like map)
        mi.note = "milnor: empty critical locus";
        return mi;
    }
    PolyC sf = squarefree_part(j);
    if (!origin_only_singularity(sf)) {
        mi.note = "milnor skipped: origin-only-singularity certificate unavailable";
        return mi;
    }
    if (!sf.coeff(Mono(2, 0)).is_zero()) {
        mi.decided = true; // reduced critical curve misses the origin
        mi.note = "milnor: critical curve does not pass through the origin";
        return mi;
    }
    auto rep = sing::milnor_plane(sf);
    if (!rep.milnor) {
        mi.note = "milnor skipped: non-isolated after squarefree reduction";
        return mi;
    }
    mi.decided = true;
    if (*rep.milnor > 0) mi.multiset = {*rep.milnor};
    mi.note = "milnor: origin-local (certified unique singular point)";
    return mi;
}

std::string multiset_str(const std::vector<unsigned long>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace

ClassificationReport classify(const PolyMap& f, const PolyMap& g, uint64_t seed,
                              DegreeMode mode) {
    if (f.n != g.n) raise(Errc::SpecInvalid, "classify needs maps of the same dimension");
    ClassificationReport rep;

    long df = topological_degree(f, mode, seed);
    long dg = topological_degree(g, mode, seed + 1);
    if (df != dg) {
        rep.verdict = ClassificationReport::Verdict::NotEquivalent;
        rep.witness = "topological_degree";
        rep.left_value = std::to_string(df);
        rep.right_value = std::to_string(dg);
        return rep;
    }
    rep.notes.push_back("topological_degree agrees: " + std::to_string(df));

    MilnorInvariant mf = milnor_invariant(f);
    MilnorInvariant mg = milnor_invariant(g);
    if (!mf.note.empty()) rep.notes.push_back("left: " + mf.note);
    if (!mg.note.empty()) rep.notes.push_back("right: " + mg.note);
    if (mf.decided && mg.decided) {
        if (mf.multiset != mg.multiset) {
            rep.verdict = ClassificationReport::Verdict::NotEquivalent;
            rep.witness = "milnor";
            rep.left_value = multiset_str(mf.multiset);
            rep.right_value = multiset_str(mg.multiset);
            return rep;
        }
        rep.notes.push_back("milnor multisets agree: " + multiset_str(mf.multiset));
    }

    // catalog metadata: the one known equivalent pair of distinct normal forms
    if (const auto* nf = std::get_if<NormalFormTag>(&f.tag)) {
        if (const auto* ng = std::get_if<NormalFormTag>(&g.tag)) {
            auto exceptional_pair = [](const std::string& a, const std::string& b) {
                return (a == "f2,1,2" && b == "f4,4,2") || (a == "f4,4,2" && b == "f2,1,2");
            };
            if (exceptional_pair(nf->row, ng->row))
                rep.notes.push_back("catalog: these normal forms are the known equivalent pair");
        }
    }

    const auto* bf = std::get_if<ThmB1Tag>(&f.tag);
    const auto* bg = std::get_if<ThmB1Tag>(&g.tag);
    if (bf && bg && bf->d == bg->d) {
        Cyclotomic tf = sing::kang_tag(bf->d, bf->lambda);
        Cyclotomic tg = sing::kang_tag(bg->d, bg->lambda);
        if (!(tf == tg)) {
            rep.verdict = ClassificationReport::Verdict::NotEquivalent;
            rep.witness = "kang_tag";
            rep.left_value = tf.str();
            rep.right_value = tg.str();
            return rep;
        }
        rep.notes.push_back("kang tags agree: " + tf.str());
    }

    rep.verdict = ClassificationReport::Verdict::Inconclusive;
    return rep;
}

} // namespace maps
} // namespace atlas
