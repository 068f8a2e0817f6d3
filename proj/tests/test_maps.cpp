#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atlas/maps.hpp"
#include "atlas/polyparse.hpp"

using namespace atlas;
using namespace atlas::maps;

namespace {
PolyC P(const std::string& s, int n = 2) { return parse_poly(s, n); }

// Independent 2x2 Jacobian oracle against the cofactor-expansion route.
PolyC jac2_oracle(const PolyMap& f) {
    return f.components[0].derivative(0) * f.components[1].derivative(1) -
           f.components[0].derivative(1) * f.components[1].derivative(0);
}

PolyMap coordinate_power_map(int m) {
    PolyMap f;
    f.n = 2;
    f.components = {P("x"), parse_poly("y^" + std::to_string(m), 2)};
    f.tag = UntaggedTag{};
    return f;
}
} // namespace

TEST_CASE("family constructors") {
    CHECK(family_thmA(3).components[0] == P("x + y + x*y"));
    CHECK(family_thmA(3).components[1] == P("x^2*y"));
    CHECK(family_thmA(4).components[1] == P("x^3*y"));
    CHECK(family_thmB(3, 2).components[1] == P("y^3 - 3*x^2*y"));
    CHECK(family_thmB1(4, Cyclotomic(1)).components[1] ==
          P("1/5*y^5 + 1/2*x^3*y^2 + x^4*y"));
    auto d3 = family_thmD(3, {2, 2});
    CHECK(d3.n == 3);
    CHECK(d3.components[2] == P("x3^3 - 3*x1^2*x3 - 3*x2^2*x3", 3));
    CHECK_THROWS_AS(family_thmA(2), Error);
    CHECK_THROWS_AS(family_thmB(3, 1), Error);
    CHECK_THROWS_AS(family_thmB1(3, Cyclotomic(1)), Error);
    CHECK_THROWS_AS(family_thmD(3, {1}), Error);
}

TEST_CASE("map spec parsing") {
    CHECK(parse_map_spec("thmB:3,2").components[1] == P("y^3 - 3*x^2*y"));
    CHECK(parse_map_spec("thmA:5").components[1] == P("x^4*y"));
    CHECK(parse_map_spec("thmB1:4,zeta(4)").n == 2);
    CHECK(parse_map_spec("thmD:3,2,2").n == 3);
    CHECK(parse_map_spec("ft4").components[0] == invariants::builtin_invariant("a4"));
    CHECK(parse_map_spec("f3").components[1] == P("y^3"));
    CHECK_THROWS_AS(parse_map_spec("thmB:xyz"), Error);
}

TEST_CASE("critical locus") {
    CHECK(critical_locus(coordinate_power_map(4)) == P("4*y^3"));
    // ThmB: d (y^{d-1} - x^a)
    CHECK(critical_locus(family_thmB(3, 2)) == P("3*y^2 - 3*x^2"));
    CHECK(critical_locus(family_thmB(5, 3)) == P("5*y^4 - 5*x^3"));
    // ThmB1: exactly F_{d,lambda}
    for (int d : {4, 5}) {
        for (const Cyclotomic& lam :
             {Cyclotomic(1), Cyclotomic(2), Cyclotomic::root_of_unity(4, 1)}) {
            PolyC f(2);
            f.add_term(Mono{0, (uint32_t)d}, Cyclotomic(1));
            f.add_term(Mono{(uint32_t)(d - 1), 1}, lam);
            f.add_term(Mono{(uint32_t)d, 0}, Cyclotomic(1));
            CHECK(critical_locus(family_thmB1(d, lam)) == f);
        }
    }
    // ThmA: x^{d-2} (x + xy - (d-1)y - (d-1)xy), against the 2x2 oracle
    for (int d : {3, 4, 5}) {
        PolyMap f = family_thmA(d);
        CHECK(critical_locus(f) == jac2_oracle(f));
    }
    CHECK(critical_locus(family_thmA(3)) == P("x") * P("x + x*y - 2*y - 2*x*y"));
    // the x^{d-2} factor is present in the ThmA critical locus
    for (int d : {3, 4, 5, 6}) {
        PolyC xpow = P("x").pow(static_cast<unsigned>(d - 2));
        CHECK(exact_divide(critical_locus(family_thmA(d)), xpow).has_value());
        CHECK(!exact_divide(critical_locus(family_thmA(d)), xpow * P("x")).has_value());
    }
    // ThmD: d (x_n^{d-1} - sum x_i^{a_i})
    CHECK(critical_locus(family_thmD(3, {2, 2})) == P("3*x3^2 - 3*x1^2 - 3*x2^2", 3));
}

TEST_CASE("topological degree: coordinate maps and families") {
    for (int m : {2, 3, 6}) CHECK(topological_degree(coordinate_power_map(m), DegreeMode::Exact, 1) == m);
    for (int d = 3; d <= 6; ++d) {
        CHECK(topological_degree(family_thmA(d), DegreeMode::Exact, 7) == d);
        for (int a = 2; a <= 4; ++a)
            CHECK(topological_degree(family_thmB(d, a), DegreeMode::Exact, 11) == d);
    }
    // ThmB1 has y-degree d+1, hence fiber count d+1
    CHECK(topological_degree(family_thmB1(4, Cyclotomic(1)), DegreeMode::Exact, 3) == 5);
    CHECK(topological_degree(family_thmD(3, {2, 2}), DegreeMode::Exact, 5) == 3);
    // product shape (x^m, y^n)
    PolyMap pm;
    pm.n = 2;
    pm.components = {P("x^2"), P("y^3")};
    pm.tag = UntaggedTag{};
    CHECK(topological_degree(pm, DegreeMode::Exact, 9) == 6);
}

TEST_CASE("topological degree: normal forms, exact vs modp") {
    auto ft4 = normal_form_map(invariants::exceptional_normal_form(4));
    CHECK(topological_degree(ft4, DegreeMode::Exact, 21) == 24);
    CHECK(topological_degree(ft4, DegreeMode::ModP, 22) == 24);
    auto f442 = normal_form_map(invariants::family_row(4, 4));
    CHECK(topological_degree(f442, DegreeMode::Exact, 23) == 8);
    CHECK(topological_degree(f442, DegreeMode::ModP, 24) == 8);
    // n = 3 product construction multiplies nothing: degree stays |G|
    auto prod3 = normal_form_map(invariants::exceptional_normal_form(4), 3);
    CHECK(topological_degree(prod3, DegreeMode::ModP, 25) == 24);
}

TEST_CASE("non-dominant input reports NotDominant") {
    PolyMap f;
    f.n = 2;
    f.components = {P("x"), P("x^2")};
    f.tag = UntaggedTag{};
    CHECK_THROWS_AS(topological_degree(f, DegreeMode::Exact, 2), Error);
    try {
        topological_degree(f, DegreeMode::Exact, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDominant);
    }
}

TEST_CASE("properness certificates") {
    CHECK(properness_test(family_thmB(3, 2)).proper);
    CHECK(properness_test(family_thmB(3, 2)).certificate == "monic-graph");
    CHECK(properness_test(family_thmB1(4, Cyclotomic(1))).certificate == "monic-graph");
    CHECK(properness_test(family_thmD(4, {2, 3})).certificate == "monic-graph");
    PolyMap pm;
    pm.n = 2;
    pm.components = {P("x^3"), P("y^2")};
    pm.tag = UntaggedTag{};
    CHECK(properness_test(pm).certificate == "leading-forms");
    // homogeneous normal forms carry the leading-forms certificate
    CHECK(properness_test(normal_form_map(invariants::exceptional_normal_form(8))).proper);
    // the paper's non-proper example gets no certificate
    PolyMap np;
    np.n = 2;
    np.components = {P("x + x^2*y"), P("y")};
    np.tag = UntaggedTag{};
    CHECK(!properness_test(np).proper);
}

TEST_CASE("branch containment for maps") {
    CHECK(verify_branch_containment(coordinate_power_map(4), P("y")));
    auto f622 = normal_form_map(invariants::family_row(6, 2));
    CHECK(verify_branch_containment(f622, P("x") * P("y^2 - 4*x^2")));
    auto f332 = normal_form_map(invariants::family_row(3, 3));
    CHECK(verify_branch_containment(f332, P("y^2 - 4*x^3")));
    CHECK(!verify_branch_containment(coordinate_power_map(4), P("x")));
}

TEST_CASE("classifier certificates") {
    auto r1 = classify(family_thmB(3, 2), family_thmB(3, 3), 17);
    CHECK(r1.verdict == ClassificationReport::Verdict::NotEquivalent);
    CHECK(r1.witness == "milnor");
    CHECK(r1.left_value == "{1}");
    CHECK(r1.right_value == "{2}");

    auto r2 = classify(family_thmB1(4, Cyclotomic(1)), family_thmB1(4, Cyclotomic(2)), 18);
    CHECK(r2.verdict == ClassificationReport::Verdict::NotEquivalent);
    CHECK(r2.witness == "kang_tag");
    CHECK(r2.left_value == "1");
    CHECK(r2.right_value == "16");

    auto r3 = classify(family_thmB1(4, Cyclotomic(1)),
                       family_thmB1(4, Cyclotomic::root_of_unity(4, 1)), 19);
    CHECK(r3.verdict == ClassificationReport::Verdict::Inconclusive);

    auto r4 = classify(normal_form_map(invariants::family_row(2, 1)),
                       normal_form_map(invariants::family_row(4, 4)), 20);
    CHECK(r4.verdict == ClassificationReport::Verdict::Inconclusive);

    auto r5 = classify(family_thmB(3, 2), family_thmB(4, 2), 21);
    CHECK(r5.verdict == ClassificationReport::Verdict::NotEquivalent);
    CHECK(r5.witness == "topological_degree");

    auto r6 = classify(family_thmD(3, {2, 2}), family_thmD(3, {3, 3}), 22);
    CHECK(r6.verdict == ClassificationReport::Verdict::NotEquivalent);
    CHECK(r6.witness == "milnor");
}

TEST_CASE("classifier in dimension 3") {
    // degree witness across different n = 3 shapes
    auto prod_ft4 = normal_form_map(invariants::exceptional_normal_form(4), 3);
    auto d3 = family_thmD(3, {2, 2});
    auto r = classify(prod_ft4, d3, 61, DegreeMode::ModP);
    CHECK(r.verdict == ClassificationReport::Verdict::NotEquivalent);
    CHECK(r.witness == "topological_degree");
    // equal degree, Milnor decided on one side only: stays Inconclusive with notes
    auto prod_z3 = normal_form_map(invariants::cyclic_row(3), 3);
    auto r2 = classify(prod_z3, d3, 62);
    CHECK(r2.verdict == ClassificationReport::Verdict::Inconclusive);
    bool saw_skip = false, saw_tagged = false;
    for (const auto& n : r2.notes) {
        saw_skip = saw_skip || n.find("milnor skipped") != std::string::npos;
        saw_tagged = saw_tagged || n.find("Brieskorn") != std::string::npos;
    }
    CHECK(saw_skip);
    CHECK(saw_tagged);
    // ThmD pairs with equal mu products stay Inconclusive
    auto r3 = classify(family_thmD(4, {2, 3}), family_thmD(4, {3, 2}), 63);
    CHECK(r3.verdict == ClassificationReport::Verdict::Inconclusive);
}

TEST_CASE("classifier reflexivity and symmetry") {
    std::vector<PolyMap> grid{family_thmA(3),
                              family_thmB(3, 2),
                              family_thmB(3, 3),
                              family_thmB1(4, Cyclotomic(1)),
                              family_thmB1(4, Cyclotomic(2)),
                              coordinate_power_map(3),
                              normal_form_map(invariants::family_row(2, 1))};
    for (const auto& f : grid) CHECK(classify(f, f, 33).verdict ==
                                     ClassificationReport::Verdict::Inconclusive);
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = i + 1; j < grid.size(); ++j) {
            auto ab = classify(grid[i], grid[j], 34);
            auto ba = classify(grid[j], grid[i], 35);
            CHECK(ab.verdict == ba.verdict);
        }
    }
}

TEST_CASE("post-composition by a random affine automorphism is invisible") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> co(-3, 3);
    for (const auto& f : {family_thmB(3, 2), family_thmA(3), coordinate_power_map(4)}) {
        for (int it = 0; it < 3; ++it) {
            long a, b, c, d;
            do {
                a = co(rng), b = co(rng), c = co(rng), d = co(rng);
            } while (a * d - b * c == 0);
            PolyMap g;
            g.n = 2;
            PolyC t1 = f.components[0].scaled(Cyclotomic(a)) +
                       f.components[1].scaled(Cyclotomic(b)) +
                       PolyC::constant(2, Cyclotomic(co(rng)));
            PolyC t2 = f.components[0].scaled(Cyclotomic(c)) +
                       f.components[1].scaled(Cyclotomic(d)) +
                       PolyC::constant(2, Cyclotomic(co(rng)));
            g.components = {t1, t2};
            g.tag = UntaggedTag{};
            CHECK(topological_degree(f, DegreeMode::Exact, 55) ==
                  topological_degree(g, DegreeMode::Exact, 56));
            CHECK(classify(f, g, 57).verdict == ClassificationReport::Verdict::Inconclusive);
        }
    }
}

TEST_CASE("mod-p reduction bridge") {
    uint64_t p = FpContext::find_prime(3'000'000'000ull, 12);
    FpContext ctx(p, 12);
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    // 1 + z3 + z3^2 = 0 must reduce to 0
    Fp img = fp_reduce(ctx, Cyclotomic(1) + z3 + z3 * z3);
    CHECK(img.is_zero());
    Fp a = fp_reduce(ctx, z3);
    CHECK(a.pow(3).v == 1);
    CHECK(a.v != 1);
    MultiPoly<Fp> q = to_fp(P("x^2 - 1/2*y"), ctx);
    CHECK(q.nterms() == 2);
}
