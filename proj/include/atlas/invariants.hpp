#pragma once

#include "atlas/elimination.hpp"
#include "atlas/groups.hpp"

namespace atlas {
namespace invariants {

using PolyC = MultiPoly<Cyclotomic>;

// The seven basic invariant polynomials: a4 b6 c8 d12 e12 f20 g30.
PolyC builtin_invariant(const std::string& name);

// One printed entry of a quotient normal-form pair, e.g. (a4)^3.
struct PairEntry {
    std::string base; // invariant name or a family formula
    int power = 1;
    std::string display() const { return power == 1 ? base : "(" + base + ")^" + std::to_string(power); }
};

struct NormalFormRow {
    std::string name; // "f5", "f2,4", "f4,2,2", "ft4".."ft22"
    groups::GroupSpec group;
    PairEntry e1, e2;
    PolyC phi1, phi2;
    std::vector<PolyC> branch_printed;   // branch locus factors in target coords
    std::vector<PolyC> branch_corrected; // nonempty only where the printed data fails
    std::string discrepancy;             // what is wrong with the printed branch
    bool equivalence_exception = false;  // marks the f_{2,1,2} ~ f_{4,4,2} pair
};

NormalFormRow exceptional_normal_form(int no); // 4..22
NormalFormRow cyclic_row(int m);
NormalFormRow product_row(int m, int n);
NormalFormRow family_row(int m, int p);
NormalFormRow row_by_name(const std::string& name);
std::vector<NormalFormRow> all_exceptional_rows();

enum class InvarianceMode { Generators, FullGroup };

struct InvarianceResult {
    bool invariant = false;
    std::string witness; // first failing group element, printed
};

InvarianceResult check_invariance(const PolyC& p, const groups::GeneratedGroup& g,
                                  InvarianceMode mode = InvarianceMode::Generators);

struct PairReport {
    bool invariant1 = false, invariant2 = false;
    long deg1 = 0, deg2 = 0;
    long group_order = 0;
    bool degree_product_ok = false;
    bool jacobian_nonzero = false;
    std::string detail;
    bool ok() const {
        return invariant1 && invariant2 && degree_product_ok && jacobian_nonzero;
    }
};

PairReport verify_basic_pair(const NormalFormRow& row, const groups::GeneratedGroup& g,
                             InvarianceMode mode = InvarianceMode::Generators);

struct BranchReport {
    std::string row;
    bool printed_ok = false;
    bool corrected_ok = false;
    bool used_correction = false;
    bool reverse_ok = false;           // every branch factor meets f(Crit)
    bool reflection_degree_ok = false; // deg J = reflection count (consistency flag)
    std::string discrepancy;
    std::string failure; // non-dividing content when divisibility fails
    bool ok() const { return (printed_ok || (used_correction && corrected_ok)) && reverse_ok; }
};

BranchReport verify_branch_row(const NormalFormRow& row);

// All rows with |G| = d: cyclic, unordered products, families and exceptionals.
std::vector<NormalFormRow> enumerate_galois_degree(long d);

// Group average; invariant-ring membership cross-check for small groups.
PolyC reynolds(const PolyC& p, const groups::GeneratedGroup& g);

PolyC jacobian_det2(const PolyC& p1, const PolyC& p2);

} // namespace invariants
} // namespace atlas
