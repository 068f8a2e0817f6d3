#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atlas/elimination.hpp"
#include "atlas/polyparse.hpp"

using namespace atlas;

namespace {

UPoly<Fp> rand_fp_poly(std::mt19937_64& rng, const FpContext& ctx, int deg) {
    std::vector<Fp> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Fp{rng() % ctx.prime(), ctx.prime()});
    return UPoly<Fp>(std::move(c));
}

} // namespace

TEST_CASE("upoly divrem and gcd over Fp") {
    std::mt19937_64 rng(8);
    FpContext ctx(FpContext::find_prime(3'000'000'000ull, 1), 1);
    for (int it = 0; it < 20; ++it) {
        UPoly<Fp> a = rand_fp_poly(rng, ctx, 8);
        UPoly<Fp> b = rand_fp_poly(rng, ctx, 5);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
        // planted gcd
        UPoly<Fp> g = rand_fp_poly(rng, ctx, 3);
        if (g.is_zero()) continue;
        UPoly<Fp> gg = upoly_gcd(a * g, b * g);
        auto [q2, r2] = gg.divrem(g.monic());
        CHECK(r2.is_zero()); // g | gcd(ag, bg)
    }
}

TEST_CASE("upoly resultant multiplicativity") {
    // Res(ab, c) = Res(a, c) Res(b, c) over Q
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> co(-5, 5);
    auto rand_q = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(co(rng));
        return UPoly<Rational>(std::move(c));
    };
    for (int it = 0; it < 15; ++it) {
        UPoly<Rational> a = rand_q(3), b = rand_q(2), c = rand_q(3);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        CHECK(upoly_resultant(a * b, c) == upoly_resultant(a, c) * upoly_resultant(b, c));
    }
    // known value: Res(x^2 - 1, x - 2) = 3
    UPoly<Rational> p(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    UPoly<Rational> q(std::vector<Rational>{Rational(-2), Rational(1)});
    CHECK(upoly_resultant(p, q) == Rational(3));
    // swap sign: Res(q, p) = (-1)^{2*1} Res(p, q)
    CHECK(upoly_resultant(q, p) == Rational(3));
}

TEST_CASE("interpolation reproduces polynomials exactly") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> co(-9, 9);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rational> c;
        for (int i = 0; i <= 7; ++i) c.emplace_back(co(rng));
        UPoly<Rational> p(std::move(c));
        std::vector<Rational> xs, vs;
        for (long x = -4; x <= 4; ++x) {
            xs.emplace_back(x);
            vs.push_back(p.eval(Rational(x)));
        }
        CHECK(UPoly<Rational>::interpolate(xs, vs) == p);
    }
}

TEST_CASE("interpolated resultant equals Sylvester over cyclotomic coefficients") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> co(-4, 4);
    std::uniform_int_distribution<int> ex(0, 3);
    Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
    for (int it = 0; it < 10; ++it) {
        MultiPoly<Cyclotomic> p(2), q(2);
        for (int t = 0; t < 4; ++t) {
            Cyclotomic cc = Cyclotomic(Rational(co(rng))) + z6 * Cyclotomic(Rational(co(rng)));
            p.add_term(Mono{(uint32_t)ex(rng), (uint32_t)ex(rng)}, cc);
            Cyclotomic cd = Cyclotomic(Rational(co(rng))) + z6 * Cyclotomic(Rational(co(rng)));
            q.add_term(Mono{(uint32_t)ex(rng), (uint32_t)ex(rng)}, cd);
        }
        if (p.degree_in(1).value_or(-1) < 1 || q.degree_in(1).value_or(-1) < 1) continue;
        CHECK(resultant_wrt(p, q, 1) == sylvester_resultant(p, q, 1));
        if (p.degree_in(0).value_or(-1) >= 1 && q.degree_in(0).value_or(-1) >= 1)
            CHECK(resultant_wrt(p, q, 0) == sylvester_resultant(p, q, 0));
    }
}

TEST_CASE("gcd over Fp coefficients in two variables") {
    FpContext ctx(FpContext::find_prime(3'000'000'000ull, 1), 1);
    MultiPoly<Fp> p(2), q(2);
    Fp one{1, ctx.prime()};
    p.add_term(Mono{2, 0}, one);
    p.add_term(Mono{0, 2}, Fp{ctx.prime() - 1, ctx.prime()}); // x^2 - y^2
    q.add_term(Mono{1, 0}, one);
    q.add_term(Mono{0, 1}, one); // x + y
    MultiPoly<Fp> g = multi_gcd(p, q);
    CHECK(g.total_degree() == 1);
}
