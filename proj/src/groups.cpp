#include "atlas/groups.hpp"

#include <unordered_map>

#include "atlas/polyparse.hpp"

namespace atlas {
namespace groups {

GroupSpec GroupSpec::cyclic(int m) {
    if (m < 1) raise(Errc::SpecInvalid, "cyclic order must be >= 1");
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.m = m;
    return s;
}

GroupSpec GroupSpec::product(int m, int n) {
    if (m < 1 || n < 1) raise(Errc::SpecInvalid, "product orders must be >= 1");
    GroupSpec s;
    s.kind = Kind::Product;
    s.m = m;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::family(int m, int p) {
    if (m < 1 || p < 1 || m % p != 0)
        raise(Errc::SpecInvalid, "family G(m,p,2) requires p | m");
    GroupSpec s;
    s.kind = Kind::Family;
    s.m = m;
    s.n = p;
    return s;
}

GroupSpec GroupSpec::exceptional(int no) {
    exceptional_row(no); // validates
    GroupSpec s;
    s.kind = Kind::Exceptional;
    s.no = no;
    return s;
}

long GroupSpec::order() const {
    switch (kind) {
        case Kind::Cyclic: return m;
        case Kind::Product: return static_cast<long>(m) * n;
        case Kind::Family: return 2L * m * m / n;
        case Kind::Exceptional: {
            const auto& r = exceptional_row(no);
            return static_cast<long>(r.d1) * r.d2;
        }
    }
    raise(Errc::SpecInvalid, "bad group kind");
}

std::pair<long, long> GroupSpec::degrees() const {
    switch (kind) {
        case Kind::Cyclic: return {1, m};
        case Kind::Product: return {m, n};
        case Kind::Family: return {2L * m / n, m};
        case Kind::Exceptional: {
            const auto& r = exceptional_row(no);
            return {r.d1, r.d2};
        }
    }
    raise(Errc::SpecInvalid, "bad group kind");
}

unsigned GroupSpec::field_order() const {
    switch (kind) {
        case Kind::Cyclic: return m;
        case Kind::Product: return lcm_u(m, n);
        case Kind::Family: return m;
        case Kind::Exceptional: return 120;
    }
    raise(Errc::SpecInvalid, "bad group kind");
}

std::string GroupSpec::str() const {
    switch (kind) {
        case Kind::Cyclic: return "Z" + std::to_string(m);
        case Kind::Product: return "Z" + std::to_string(m) + "xZ" + std::to_string(n);
        case Kind::Family:
            return "G(" + std::to_string(m) + "," + std::to_string(n) + ",2)";
        case Kind::Exceptional: return "ST" + std::to_string(no);
    }
    return "?";
}

GroupSpec parse_group_spec(const std::string& text) {
    auto num = [&](size_t from, size_t to) {
        return std::stoi(text.substr(from, to - from));
    };
    try {
        if (text.rfind("ST", 0) == 0) return GroupSpec::exceptional(num(2, text.size()));
        if (text.rfind("cyclic:", 0) == 0) return GroupSpec::cyclic(num(7, text.size()));
        if (text.rfind("product:", 0) == 0) {
            size_t comma = text.find(',', 8);
            return GroupSpec::product(num(8, comma), num(comma + 1, text.size()));
        }
        if (text.rfind("family:", 0) == 0) {
            size_t comma = text.find(',', 7);
            return GroupSpec::family(num(7, comma), num(comma + 1, text.size()));
        }
        if (text.rfind("G(", 0) == 0 && text.back() == ')') {
            size_t c1 = text.find(',');
            size_t c2 = text.find(',', c1 + 1);
            int m = num(2, c1), p = num(c1 + 1, c2), two = num(c2 + 1, text.size() - 1);
            if (two != 2) raise(Errc::SpecInvalid, "only rank-2 family G(m,p,2) is supported");
            return GroupSpec::family(m, p);
        }
        if (text.size() > 1 && text[0] == 'Z') {
            size_t x = text.find('x');
            if (x == std::string::npos) return GroupSpec::cyclic(num(1, text.size()));
            if (text[x + 1] == 'Z')
                return GroupSpec::product(num(1, x), num(x + 2, text.size()));
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    raise(Errc::SpecInvalid, "unrecognized group spec '" + text + "'");
}

namespace {

Mat2 parent_s1(const std::string& parent) {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    if (parent == "A4") return Mat2::diag(i, -i);
    if (parent == "S4") {
        Cyclotomic inv_r2 = Cyclotomic::sqrt_embed(2).inverse();
        Cyclotomic one(1);
        return Mat2{i, one, -one, -i}.scaled(inv_r2);
    }
    if (parent == "A5") {
        Cyclotomic e = Cyclotomic::root_of_unity(5, 1);
        Cyclotomic inv_r5 = Cyclotomic::sqrt_embed(5).inverse();
        return Mat2{e.pow(4) - e, e.pow(2) - e.pow(3), e.pow(2) - e.pow(3), e - e.pow(4)}
            .scaled(inv_r5);
    }
    raise(Errc::SpecInvalid, "unknown parent " + parent);
}

Mat2 parent_t1(const std::string& parent) {
    if (parent == "A4") {
        Cyclotomic e = Cyclotomic::root_of_unity(8, 1);
        Cyclotomic inv_r2 = Cyclotomic::sqrt_embed(2).inverse();
        return Mat2{e, e.pow(3), e, e.pow(7)}.scaled(inv_r2);
    }
    if (parent == "S4") {
        Cyclotomic e = Cyclotomic::root_of_unity(8, 1);
        Cyclotomic inv_r2 = Cyclotomic::sqrt_embed(2).inverse();
        return Mat2{e, e, e.pow(3), e.pow(7)}.scaled(inv_r2);
    }
    if (parent == "A5") {
        Cyclotomic e = Cyclotomic::root_of_unity(5, 1);
        Cyclotomic one(1);
        Cyclotomic inv_r5 = Cyclotomic::sqrt_embed(5).inverse();
        return Mat2{e.pow(2) - e.pow(4), e.pow(4) - one, one - e, e.pow(3) - e}.scaled(inv_r5);
    }
    raise(Errc::SpecInvalid, "unknown parent " + parent);
}

} // namespace

std::vector<NamedMat> build_generators(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic: {
            unsigned N = spec.m;
            Mat2 g = Mat2::diag(Cyclotomic::one(N), Cyclotomic::root_of_unity(N, 1));
            return {{"g", g}};
        }
        case GroupSpec::Kind::Product: {
            unsigned L = lcm_u(spec.m, spec.n);
            Mat2 g1 = Mat2::diag(Cyclotomic::root_of_unity(spec.m, 1).embedded(L),
                                 Cyclotomic::one(L));
            Mat2 g2 = Mat2::diag(Cyclotomic::one(L),
                                 Cyclotomic::root_of_unity(spec.n, 1).embedded(L));
            return {{"g1", g1}, {"g2", g2}};
        }
        case GroupSpec::Kind::Family: {
            unsigned N = spec.m;
            Cyclotomic th = Cyclotomic::root_of_unity(N, 1);
            Mat2 g1 = Mat2::diag(th, th.pow(-1));
            Mat2 g2 = Mat2::diag(th.pow(spec.n), Cyclotomic::one(N));
            Mat2 swap{Cyclotomic::zero(N), Cyclotomic::one(N), Cyclotomic::one(N),
                      Cyclotomic::zero(N)};
            return {{"g1", g1}, {"g2", g2}, {"swap", swap}};
        }
        case GroupSpec::Kind::Exceptional: {
            const auto& row = exceptional_row(spec.no);
            const unsigned N = 120;
            Cyclotomic lambda = parse_scalar(row.lambda).embedded(N);
            Cyclotomic mu = parse_scalar(row.mu).embedded(N);
            Mat2 S = parent_s1(row.parent).embedded(N).scaled(lambda);
            Mat2 T = parent_t1(row.parent).embedded(N).scaled(mu);
            Cyclotomic zk = Cyclotomic::root_of_unity(row.k, 1).embedded(N);
            Mat2 Z = Mat2::identity(N).scaled(zk);
            return {{"S", S}, {"T", T}, {"Z", Z}};
        }
    }
    raise(Errc::SpecInvalid, "bad group kind");
}

GeneratedGroup generate_closure(const std::vector<NamedMat>& generators, size_t cap) {
    if (generators.empty()) raise(Errc::SpecInvalid, "no generators");
    unsigned N = generators[0].mat.a.order();
    for (const auto& g : generators) {
        if (g.mat.a.order() != N) raise(Errc::SpecInvalid, "generators in different fields");
        if (g.mat.det().is_zero()) raise(Errc::SpecInvalid, "singular generator " + g.name);
    }
    GeneratedGroup out;
    out.field_order = N;
    out.generators = generators;

    std::unordered_map<size_t, std::vector<size_t>> buckets;
    auto lookup = [&](const Mat2& m, size_t h) -> bool {
        auto it = buckets.find(h);
        if (it == buckets.end()) return false;
        for (size_t idx : it->second)
            if (out.elements[idx] == m) return true;
        return false;
    };
    auto insert = [&](Mat2 m) {
        size_t h = m.hash();
        if (lookup(m, h)) return false;
        buckets[h].push_back(out.elements.size());
        out.elements.push_back(std::move(m));
        return true;
    };

    insert(Mat2::identity(N));
    size_t next = 0;
    while (next < out.elements.size()) {
        Mat2 cur = out.elements[next++];
        for (const auto& g : generators) {
            Mat2 prod = cur * g.mat;
            if (insert(std::move(prod)) && out.elements.size() > cap) {
                raise(Errc::ClosureExceeded,
                      "closure exceeded cap " + std::to_string(cap) +
                          " (wrong spec data or infinite group)");
            }
        }
    }
    return out;
}

GeneratedGroup generate_group(const GroupSpec& spec, size_t cap) {
    return generate_closure(build_generators(spec), cap);
}

PresentationReport verify_presentation(const GroupSpec& spec) {
    if (spec.kind != GroupSpec::Kind::Exceptional)
        raise(Errc::SpecInvalid, "presentation checks apply to exceptional groups");
    const auto& row = exceptional_row(spec.no);
    auto gens = build_generators(spec);
    const Mat2 &S = gens[0].mat, &T = gens[1].mat, &Z = gens[2].mat;
    Mat2 I = Mat2::identity(120);

    PresentationReport rep;
    auto check = [&](const std::string& name, const Mat2& lhs, const Mat2& rhs) {
        RelationCheck rc;
        rc.name = name;
        rc.ok = lhs == rhs;
        if (!rc.ok) {
            rc.lhs = lhs.str();
            rc.rhs = rhs.str();
        }
        rep.relations.push_back(std::move(rc));
    };
    check("S^2 = Z^k1", S.pow(2), Z.pow(row.k1));
    check("T^3 = Z^k2", T.pow(3), Z.pow(row.k2));
    check("Z^k = I", Z.pow(row.k), I);
    check("[S,Z] = I", S * Z * S.inverse() * Z.inverse(), I);
    check("[T,Z] = I", T * Z * T.inverse() * Z.inverse(), I);
    Mat2 ST = S * T;
    Mat2 Zk3 = Z.pow(row.k3);
    Mat2 acc = ST;
    for (int p = 1; p <= 6; ++p) {
        if (acc == Zk3) rep.st_exponents.push_back(p);
        acc = acc * ST;
    }
    return rep;
}

long count_reflections(const GeneratedGroup& g) {
    Mat2 I = Mat2::identity(g.field_order);
    long n = 0;
    for (const auto& m : g.elements) {
        if (m == I) continue;
        Cyclotomic da = m.a - Cyclotomic::one(g.field_order);
        Cyclotomic dd = m.d - Cyclotomic::one(g.field_order);
        if ((da * dd - m.b * m.c).is_zero()) ++n;
    }
    return n;
}

} // namespace groups
} // namespace atlas
