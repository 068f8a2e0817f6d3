#pragma once

#include <variant>

#include "atlas/invariants.hpp"
#include "atlas/singular.hpp"

namespace atlas {
namespace maps {

using PolyC = MultiPoly<Cyclotomic>;

struct ThmATag {
    int d;
};
struct ThmBTag {
    int d, a;
};
struct ThmB1Tag {
    int d;
    Cyclotomic lambda;
};
struct ThmDTag {
    int d;
    std::vector<int> a;
};
struct NormalFormTag {
    std::string row;
    int n;
};
struct UntaggedTag {};

using MapTag = std::variant<UntaggedTag, ThmATag, ThmBTag, ThmB1Tag, ThmDTag, NormalFormTag>;

struct PolyMap {
    int n = 2;
    std::vector<PolyC> components;
    MapTag tag;

    std::string display() const;
};

PolyMap family_thmA(int d);                                  // (x + y + xy, x^{d-1} y)
PolyMap family_thmB(int d, int a);                           // (x, y^d - d x^a y)
PolyMap family_thmB1(int d, const Cyclotomic& lambda);       // (x, Q_{d,lambda})
PolyMap family_thmD(int d, const std::vector<int>& a);       // n = |a| + 1 components
PolyMap normal_form_map(const invariants::NormalFormRow& row, int n = 2);

// Compact inline syntax: thmA:4 | thmB:3,2 | thmB1:4,<scalar> | thmD:3,2,2 |
// a normal-form row name (ft4, f5, f2,4, f4,2,2).
PolyMap parse_map_spec(const std::string& text);

// Jacobian determinant via cofactor expansion.
PolyC critical_locus(const PolyMap& f);

enum class DegreeMode { Exact, ModP };

// Cardinality of a generic fiber; exact elimination with certified distinct-
// root counts, or the same algorithm over random word-size primes.
long topological_degree(const PolyMap& f, DegreeMode mode, uint64_t seed);

struct PropernessResult {
    bool proper = false;
    std::string certificate; // "monic-graph" | "leading-forms" | "" for Unknown
};

PropernessResult properness_test(const PolyMap& f);

// squarefree_part(J_f) divides B(f_1, ..., f_n); n = 2 only.
bool verify_branch_containment(const PolyMap& f, const PolyC& branch);

struct ClassificationReport {
    enum class Verdict { NotEquivalent, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::string witness;     // "topological_degree" | "milnor" | "kang_tag" | "gamma_membership"
    std::string left_value, right_value;
    std::vector<std::string> notes;
};

ClassificationReport classify(const PolyMap& f, const PolyMap& g, uint64_t seed,
                              DegreeMode mode = DegreeMode::Exact);

// ---- mod-p utilities (shared with the CLI and tests) ----

unsigned cyclo_order_lcm(const PolyC& p);
Fp fp_reduce(const FpContext& ctx, const Cyclotomic& c);
MultiPoly<Fp> to_fp(const PolyC& p, const FpContext& ctx);

} // namespace maps
} // namespace atlas
