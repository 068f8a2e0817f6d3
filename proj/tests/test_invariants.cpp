#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/invariants.hpp"
#include "atlas/polyparse.hpp"

using namespace atlas;
using namespace atlas::invariants;
using groups::GroupSpec;

TEST_CASE("builtin invariants match the catalog") {
    CHECK(builtin_invariant("b6") == parse_poly("x^5*y - x*y^5", 2));
    CHECK(builtin_invariant("c8") == parse_poly("x^8 + 14*x^4*y^4 + y^8", 2));
    CHECK(builtin_invariant("f20") ==
          parse_poly("x^20 - 228*x^15*y^5 + 494*x^10*y^10 + 228*x^5*y^15 + y^20", 2));
    CHECK(builtin_invariant("a4").total_degree() == 4);
    CHECK(builtin_invariant("g30").total_degree() == 30);
    CHECK_THROWS_AS(builtin_invariant("h42"), Error);
    // a4 has the cyclotomic coefficient 4*zeta(6) - 2
    Cyclotomic want = Cyclotomic(4) * Cyclotomic::root_of_unity(6, 1) - Cyclotomic(2);
    CHECK(builtin_invariant("a4").coeff(Mono{2, 2}) == want);
}

TEST_CASE("invariance checks") {
    auto g4 = groups::generate_group(GroupSpec::exceptional(4));
    CHECK(check_invariance(builtin_invariant("a4"), g4).invariant);
    CHECK(check_invariance(builtin_invariant("b6"), g4).invariant);
    CHECK(!check_invariance(parse_poly("x^4 + y^4", 2), g4).invariant);

    // dihedral of order 8 in the diagonal model: xy is the degree-2 invariant
    auto d4 = groups::generate_group(GroupSpec::family(4, 4));
    CHECK(check_invariance(parse_poly("x*y", 2), d4, InvarianceMode::FullGroup).invariant);
    CHECK(!check_invariance(parse_poly("x^2 + y^2", 2), d4, InvarianceMode::FullGroup).invariant);
    // same abstract group in the real rotation model fixes x^2 + y^2
    Cyclotomic one(1), zero(0);
    auto real_d4 = groups::generate_closure(
        {{"rot", Mat2{zero, one, -one, zero}}, {"flip", Mat2{one, zero, zero, -one}}});
    CHECK(real_d4.order() == 8);
    CHECK(check_invariance(parse_poly("x^2 + y^2", 2), real_d4, InvarianceMode::FullGroup)
              .invariant);

    auto c2 = groups::generate_group(GroupSpec::cyclic(2)); // acts as diag(1, -1)
    CHECK(check_invariance(parse_poly("x", 2), c2, InvarianceMode::FullGroup).invariant);
    auto bad = check_invariance(parse_poly("y", 2), c2, InvarianceMode::FullGroup);
    CHECK(!bad.invariant);
    CHECK(!bad.witness.empty());
}

TEST_CASE("generator and full-group invariance agree on small groups") {
    for (auto spec : {GroupSpec::exceptional(4), GroupSpec::family(4, 2), GroupSpec::family(6, 6),
                      GroupSpec::product(2, 4)}) {
        auto g = groups::generate_group(spec);
        REQUIRE(g.order() <= 200);
        NormalFormRow row;
        if (spec.kind == GroupSpec::Kind::Exceptional) row = exceptional_normal_form(spec.no);
        else if (spec.kind == GroupSpec::Kind::Family) row = family_row(spec.m, spec.n);
        else row = product_row(spec.m, spec.n);
        for (const auto& p : {row.phi1, row.phi2}) {
            CHECK(check_invariance(p, g, InvarianceMode::Generators).invariant ==
                  check_invariance(p, g, InvarianceMode::FullGroup).invariant);
        }
    }
}

TEST_CASE("verify_basic_pair examples") {
    auto r8 = exceptional_normal_form(8);
    auto g8 = groups::generate_group(r8.group);
    auto rep8 = verify_basic_pair(r8, g8);
    CHECK(rep8.ok());
    CHECK(rep8.deg1 * rep8.deg2 == 96);

    auto r22 = exceptional_normal_form(22);
    auto g22 = groups::generate_group(r22.group);
    auto rep22 = verify_basic_pair(r22, g22);
    CHECK(rep22.ok());
    CHECK(rep22.deg1 * rep22.deg2 == 240);

    auto r1 = cyclic_row(1); // (x, y) under the trivial group
    auto g1 = groups::generate_group(r1.group);
    auto rep1 = verify_basic_pair(r1, g1);
    CHECK(rep1.degree_product_ok);
    CHECK(rep1.group_order == 1);
}

TEST_CASE("branch verification: families") {
    // f_m: J = m y^{m-1}, B = y, pullback y^m
    for (int m : {2, 3, 5}) {
        auto rep = verify_branch_row(cyclic_row(m));
        CHECK(rep.printed_ok);
        CHECK(rep.reverse_ok);
        CHECK(rep.reflection_degree_ok);
        CHECK(rep.ok());
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 5}}) {
        auto rep = verify_branch_row(product_row(m, n));
        CHECK(rep.ok());
        CHECK(rep.reflection_degree_ok);
    }
    for (int m = 2; m <= 6; ++m) {
        for (int p = 1; p <= m; ++p) {
            if (m % p) continue;
            auto rep = verify_branch_row(family_row(m, p));
            CHECK(rep.ok());
            CHECK(rep.reflection_degree_ok);
        }
    }
}

TEST_CASE("branch verification: exceptional rows, printed data") {
    // rows other than 5, 6, 7 verify exactly as printed
    for (int no : {4, 8, 9, 10, 12, 13, 14, 15, 22}) {
        auto rep = verify_branch_row(exceptional_normal_form(no));
        CHECK(rep.printed_ok);
        CHECK(rep.reverse_ok);
        CHECK(rep.reflection_degree_ok);
        CHECK(rep.discrepancy.empty());
    }
}

TEST_CASE("branch verification: rows 5, 6, 7 report the printed-data defect") {
    for (int no : {5, 6, 7}) {
        auto rep = verify_branch_row(exceptional_normal_form(no));
        CHECK(!rep.printed_ok);
        CHECK(rep.used_correction);
        CHECK(rep.corrected_ok);
        CHECK(rep.reverse_ok);
        CHECK(rep.reflection_degree_ok);
        CHECK(!rep.discrepancy.empty());
        CHECK(rep.ok());
    }
}

TEST_CASE("enumerate_galois_degree") {
    auto d2 = enumerate_galois_degree(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].name == "f2");

    auto d8 = enumerate_galois_degree(8);
    std::vector<std::string> names;
    for (const auto& r : d8) names.push_back(r.name);
    CHECK(std::count(names.begin(), names.end(), "f8") == 1);
    CHECK(std::count(names.begin(), names.end(), "f2,4") == 1);
    CHECK(std::count(names.begin(), names.end(), "f2,1,2") == 1);
    CHECK(std::count(names.begin(), names.end(), "f4,4,2") == 1);
    CHECK(names.size() == 4);

    auto d24 = enumerate_galois_degree(24);
    bool has_ft4 = false;
    for (const auto& r : d24) has_ft4 = has_ft4 || r.name == "ft4";
    CHECK(has_ft4);
    // exception metadata lands on the right family rows
    for (const auto& r : d8) {
        if (r.name == "f2,1,2" || r.name == "f4,4,2") CHECK(r.equivalence_exception);
        else CHECK(!r.equivalence_exception);
    }
}

TEST_CASE("reynolds average is an invariant projector (small groups)") {
    auto g = groups::generate_group(GroupSpec::exceptional(4)); // order 24
    PolyC a4 = builtin_invariant("a4");
    CHECK(reynolds(a4, g) == a4);
    PolyC x4y4 = parse_poly("x^4 + y^4", 2);
    PolyC avg = reynolds(x4y4, g);
    CHECK(check_invariance(avg, g, InvarianceMode::FullGroup).invariant);
    // averaging a generic quartic lands in the degree-4 invariant line C*a4
    if (!avg.is_zero()) {
        Cyclotomic ratio = avg.leading_coeff() / a4.leading_coeff();
        CHECK(avg == a4.scaled(ratio));
    }
    auto d = groups::generate_group(GroupSpec::family(3, 3));
    PolyC p = parse_poly("x^3 + x*y^2", 2);
    CHECK(check_invariance(reynolds(p, d), d, InvarianceMode::FullGroup).invariant);
}

TEST_CASE("row naming round trip") {
    CHECK(row_by_name("ft8").name == "ft8");
    CHECK(row_by_name("f5").group.order() == 5);
    CHECK(row_by_name("f2,4").group.order() == 8);
    CHECK(row_by_name("f4,2,2").group.order() == 16);
    CHECK_THROWS_AS(row_by_name("f4,3,2"), Error);
    CHECK_THROWS_AS(row_by_name("zz"), Error);
}
