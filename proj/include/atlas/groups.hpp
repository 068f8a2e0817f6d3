#pragma once

#include <array>
#include <optional>

#include "atlas/matrix.hpp"

namespace atlas {
namespace groups {

// One row of the exceptional-group tables (Shephard-Todd numbers 4..22).
struct ExceptionalRow {
    int no;
    const char* id_small; // GAP IdSmallGroup label, transcribed verbatim
    const char* lambda;   // scalar prefactor of S1, as a scalar expression
    const char* mu;       // scalar prefactor of T1
    int k1, k2, k3, k;
    int d1, d2;          // degrees
    const char* parent;  // "A4", "S4" or "A5"
};

const std::array<ExceptionalRow, 19>& exceptional_rows();
const ExceptionalRow& exceptional_row(int no); // no in 4..22

struct GroupSpec {
    enum class Kind { Cyclic, Product, Family, Exceptional };
    Kind kind = Kind::Cyclic;
    int m = 1; // Cyclic(m), Product(m, n), Family(m, p)
    int n = 1; // Product second factor; Family p
    int no = 0;

    static GroupSpec cyclic(int m);
    static GroupSpec product(int m, int n);
    static GroupSpec family(int m, int p);
    static GroupSpec exceptional(int no);

    long order() const;                   // expected group order
    std::pair<long, long> degrees() const; // invariant degrees {d1, d2}
    long expected_reflections() const { return degrees().first + degrees().second - 2; }
    unsigned field_order() const; // ambient Q(zeta_N)
    std::string str() const;
    bool operator==(const GroupSpec& o) const {
        return kind == o.kind && m == o.m && n == o.n && no == o.no;
    }
};

// "ST4", "G(4,2,2)", "Z5", "Z2xZ3"; also cyclic:5 / product:2,3 / family:4,2.
GroupSpec parse_group_spec(const std::string& text);

struct NamedMat {
    std::string name;
    Mat2 mat;
};

struct GeneratedGroup {
    unsigned field_order = 1;
    std::vector<NamedMat> generators;
    std::vector<Mat2> elements; // closed under product and inverse, identity first
    size_t order() const { return elements.size(); }
};

std::vector<NamedMat> build_generators(const GroupSpec& spec);
GeneratedGroup generate_closure(const std::vector<NamedMat>& generators, size_t cap = 10000);
GeneratedGroup generate_group(const GroupSpec& spec, size_t cap = 10000);

struct RelationCheck {
    std::string name;
    bool ok = false;
    std::string lhs, rhs; // printed matrices when a relation fails
};

struct PresentationReport {
    std::vector<RelationCheck> relations;
    std::vector<int> st_exponents; // p in 1..6 satisfying (ST)^p = Z^k3
    bool ok() const {
        if (st_exponents.empty()) return false;
        for (const auto& r : relations)
            if (!r.ok) return false;
        return true;
    }
};

// Checks the exceptional presentation relations by exact matrix arithmetic.
PresentationReport verify_presentation(const GroupSpec& spec);

// Elements != I whose fixed subspace is a line: rank(M - I) == 1.
long count_reflections(const GeneratedGroup& g);

} // namespace groups
} // namespace atlas
