#include "atlas/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "atlas/maps.hpp"
#include "atlas/polyparse.hpp"

namespace atlas {
namespace cli {

using json = nlohmann::ordered_json;
using maps::DegreeMode;
using maps::PolyC;
using maps::PolyMap;

void RunReport::add(std::string name, std::string expected, std::string actual) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.pass = c.expected == c.actual;
    ok = ok && c.pass;
    checks.push_back(std::move(c));
}

void RunReport::add_bool(std::string name, bool pass, std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = "pass";
    c.actual = pass ? "pass" : (detail.empty() ? "fail" : "fail: " + detail);
    c.pass = pass;
    ok = ok && pass;
    checks.push_back(std::move(c));
}

void RunReport::sort_checks() {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string RunReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name;
    return "";
}

namespace {

// Derives a per-check seed so that check order never shifts randomness.
uint64_t subseed(uint64_t seed, const std::string& name) {
    uint64_t h = 1469598103934665603ull ^ seed;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

json report_json(const RunReport& rep, uint64_t seed) {
    json j;
    j["schema"] = 1;
    j["command"] = rep.command;
    j["seed"] = seed;
    j["status"] = rep.ok ? "ok" : "failed";
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    // timing is intentionally absent: JSON output is byte-identical per seed
    return j;
}

void print_report(const RunReport& rep, const GlobalOpts& opts, std::ostream& out) {
    if (opts.json) {
        out << report_json(rep, opts.seed).dump(2) << "\n";
        return;
    }
    out << rep.command << ": " << (rep.ok ? "ok" : "FAILED") << " (" << rep.checks.size()
        << " checks, " << rep.timing_ms << " ms)\n";
    for (const auto& c : rep.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass) out << "  expected=" << c.expected << " actual=" << c.actual;
        out << "\n";
    }
}

json map_to_json(const PolyMap& f) {
    json j;
    j["schema"] = 1;
    j["n"] = f.n;
    json comps = json::array();
    auto names = MultiPoly<Cyclotomic>::default_names(f.n);
    for (const auto& c : f.components) comps.push_back(c.str(names));
    j["components"] = std::move(comps);
    if (const auto* t = std::get_if<maps::ThmATag>(&f.tag)) {
        j["tag"] = {{"family", "thmA"}, {"d", t->d}};
    } else if (const auto* t = std::get_if<maps::ThmBTag>(&f.tag)) {
        j["tag"] = {{"family", "thmB"}, {"d", t->d}, {"a", t->a}};
    } else if (const auto* t = std::get_if<maps::ThmB1Tag>(&f.tag)) {
        j["tag"] = {{"family", "thmB1"}, {"d", t->d}, {"lambda", t->lambda.str()}};
    } else if (const auto* t = std::get_if<maps::ThmDTag>(&f.tag)) {
        j["tag"] = {{"family", "thmD"}, {"d", t->d}, {"a", t->a}};
    } else if (const auto* t = std::get_if<maps::NormalFormTag>(&f.tag)) {
        j["tag"] = {{"normal_form", t->row}, {"n", t->n}};
    }
    return j;
}

PolyMap map_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("components"))
        raise(Errc::ParseError, "map JSON needs fields n and components");
    PolyMap f;
    f.n = j["n"].get<int>();
    for (const auto& c : j["components"])
        f.components.push_back(parse_poly(c.get<std::string>(), f.n));
    if (static_cast<int>(f.components.size()) != f.n)
        raise(Errc::ParseError, "component count does not match n");
    f.tag = maps::UntaggedTag{};
    if (j.contains("tag")) {
        const json& t = j["tag"];
        PolyMap built;
        bool have = false;
        if (t.contains("family")) {
            std::string fam = t["family"].get<std::string>();
            if (fam == "thmA") built = maps::family_thmA(t["d"].get<int>());
            else if (fam == "thmB") built = maps::family_thmB(t["d"].get<int>(), t["a"].get<int>());
            else if (fam == "thmB1")
                built = maps::family_thmB1(t["d"].get<int>(),
                                           parse_scalar(t["lambda"].get<std::string>()));
            else if (fam == "thmD")
                built = maps::family_thmD(t["d"].get<int>(), t["a"].get<std::vector<int>>());
            else raise(Errc::ParseError, "unknown family tag " + fam);
            have = true;
        } else if (t.contains("normal_form")) {
            built = maps::normal_form_map(invariants::row_by_name(t["normal_form"].get<std::string>()),
                                          t.value("n", 2));
            have = true;
        }
        if (have) {
            if (built.n != f.n || built.components != f.components)
                raise(Errc::SpecInvalid, "map components do not match the declared tag");
            f.tag = built.tag;
        }
    }
    return f;
}

PolyMap load_map(const std::string& source) {
    // file path (JSON document) or inline compact spec
    std::ifstream in(source);
    if (in.good()) {
        json j = json::parse(in);
        return map_from_json(j);
    }
    if (!source.empty() && source[0] == '{') return map_from_json(json::parse(source));
    return maps::parse_map_spec(source);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string verdict_str(maps::ClassificationReport::Verdict v) {
    return v == maps::ClassificationReport::Verdict::NotEquivalent ? "NotEquivalent"
                                                                   : "Inconclusive";
}

} // namespace

namespace {

groups::GroupSpec group_spec_from_json(const json& j) {
    const json& s = j.contains("spec") ? j["spec"] : j;
    std::string kind = s.at("kind").get<std::string>();
    if (kind == "exceptional") return groups::GroupSpec::exceptional(s.at("no").get<int>());
    if (kind == "cyclic") return groups::GroupSpec::cyclic(s.at("m").get<int>());
    if (kind == "product")
        return groups::GroupSpec::product(s.at("m").get<int>(), s.at("n").get<int>());
    if (kind == "family")
        return groups::GroupSpec::family(s.at("m").get<int>(), s.at("p").get<int>());
    raise(Errc::SpecInvalid, "unknown group kind '" + kind + "'");
}

json group_spec_to_json(const groups::GroupSpec& spec) {
    using Kind = groups::GroupSpec::Kind;
    switch (spec.kind) {
        case Kind::Cyclic: return {{"kind", "cyclic"}, {"m", spec.m}};
        case Kind::Product: return {{"kind", "product"}, {"m", spec.m}, {"n", spec.n}};
        case Kind::Family: return {{"kind", "family"}, {"m", spec.m}, {"p", spec.n}};
        case Kind::Exceptional: return {{"kind", "exceptional"}, {"no", spec.no}};
    }
    return {};
}

groups::GroupSpec load_group_spec(const std::string& text) {
    std::ifstream in(text);
    if (in.good()) return group_spec_from_json(json::parse(in));
    if (!text.empty() && text[0] == '{') return group_spec_from_json(json::parse(text));
    return groups::parse_group_spec(text);
}

} // namespace

int cmd_group(const std::string& spec_text, bool verify_order, bool verify_presentation,
              bool count_reflections, const GlobalOpts& opts, std::ostream& out) {
    Timer timer;
    auto spec = load_group_spec(spec_text);
    auto g = groups::generate_group(spec);
    json j;
    j["schema"] = 1;
    j["spec"] = group_spec_to_json(spec);
    j["name"] = spec.str();
    if (spec.kind == groups::GroupSpec::Kind::Exceptional)
        j["id_small_group"] = groups::exceptional_row(spec.no).id_small;
    j["field_order"] = g.field_order;
    j["order"] = g.order();
    bool all_ok = true;
    if (verify_order) {
        bool ok = g.order() == static_cast<size_t>(spec.order());
        j["order_check"] = {{"expected", spec.order()}, {"actual", g.order()}, {"pass", ok}};
        all_ok = all_ok && ok;
    }
    if (verify_presentation) {
        auto rep = groups::verify_presentation(spec);
        json rels = json::array();
        for (const auto& r : rep.relations) {
            json jr;
            jr["relation"] = r.name;
            jr["pass"] = r.ok;
            if (!r.ok) {
                jr["lhs"] = r.lhs;
                jr["rhs"] = r.rhs;
            }
            rels.push_back(std::move(jr));
        }
        j["presentation"] = {{"relations", std::move(rels)}, {"st_exponents", rep.st_exponents},
                             {"pass", rep.ok()}};
        all_ok = all_ok && rep.ok();
    }
    if (count_reflections) {
        long refl = groups::count_reflections(g);
        long want = spec.expected_reflections();
        bool ok = refl == want;
        j["reflections"] = {{"expected", want}, {"actual", refl}, {"pass", ok}};
        all_ok = all_ok && ok;
    }
    j["status"] = all_ok ? "ok" : "failed";
    if (opts.json) {
        out << j.dump(2) << "\n";
    } else {
        out << spec.str() << ": |G| = " << g.order() << " over Q(zeta_" << g.field_order << ")"
            << (all_ok ? " [ok]" : " [FAILED]") << " (" << timer.ms() << " ms)\n";
        if (!opts.json && j.contains("presentation"))
            out << "  (ST)^p = Z^k3 holds for p in "
                << json(j["presentation"]["st_exponents"]).dump() << "\n";
        if (j.contains("reflections"))
            out << "  reflections: " << j["reflections"]["actual"] << "\n";
    }
    return all_ok ? 0 : 1;
}

namespace {

json row_to_json(const invariants::NormalFormRow& row) {
    json j;
    j["name"] = row.name;
    j["group"] = row.group.str();
    j["group_order"] = row.group.order();
    j["pair"] = {row.e1.display(), row.e2.display()};
    j["phi1"] = row.phi1.str();
    j["phi2"] = row.phi2.str();
    json br = json::array();
    for (const auto& f : row.branch_printed) br.push_back(f.str());
    j["branch"] = std::move(br);
    if (!row.branch_corrected.empty()) {
        json bc = json::array();
        for (const auto& f : row.branch_corrected) bc.push_back(f.str());
        j["branch_corrected"] = std::move(bc);
        j["discrepancy"] = row.discrepancy;
    }
    if (row.equivalence_exception) j["equivalence_exception"] = true;
    return j;
}

void verify_row_into(const invariants::NormalFormRow& row, RunReport& rep) {
    auto g = groups::generate_group(row.group);
    auto mode = g.order() <= 200 ? invariants::InvarianceMode::FullGroup
                                 : invariants::InvarianceMode::Generators;
    auto pair = invariants::verify_basic_pair(row, g, mode);
    rep.add_bool("table4/" + row.name + "/pair", pair.ok(),
                 "deg " + std::to_string(pair.deg1) + "*" + std::to_string(pair.deg2) +
                     " vs |G| = " + std::to_string(pair.group_order));
    auto br = invariants::verify_branch_row(row);
    std::string detail = br.failure;
    if (br.used_correction && br.corrected_ok)
        detail = "printed branch fails, corrected branch divides (" + br.discrepancy + ")";
    rep.add_bool("table4/" + row.name + "/branch", br.ok(), br.failure);
    if (br.used_correction)
        rep.add("table4/" + row.name + "/branch-discrepancy", "reported",
                br.corrected_ok && !br.discrepancy.empty() ? "reported" : "missing");
    rep.add_bool("table4/" + row.name + "/reflection-degree", br.reflection_degree_ok);
}

std::vector<invariants::NormalFormRow> catalog_rows(int family_limit) {
    std::vector<invariants::NormalFormRow> rows;
    for (int no = 4; no <= 22; ++no) rows.push_back(invariants::exceptional_normal_form(no));
    for (int m = 2; m <= family_limit; ++m) rows.push_back(invariants::cyclic_row(m));
    for (int m = 2; m <= family_limit; ++m)
        for (int n = m; n <= family_limit; ++n) rows.push_back(invariants::product_row(m, n));
    for (int m = 2; m <= family_limit; ++m)
        for (int p = 1; p <= m; ++p)
            if (m % p == 0) rows.push_back(invariants::family_row(m, p));
    return rows;
}

} // namespace

int cmd_table4(const std::string& row_name, bool verify_all, const GlobalOpts& opts,
               std::ostream& out) {
    Timer timer;
    if (!row_name.empty()) {
        auto row = invariants::row_by_name(row_name);
        json j = row_to_json(row);
        j["schema"] = 1;
        RunReport rep;
        rep.command = "table4 --row " + row_name;
        verify_row_into(row, rep);
        rep.sort_checks();
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"actual", c.actual}});
        j["checks"] = std::move(checks);
        j["status"] = rep.ok ? "ok" : "failed";
        if (opts.json) out << j.dump(2) << "\n";
        else {
            out << "row " << row.name << " (" << row.group.str() << ", |G|=" << row.group.order()
                << "): " << (rep.ok ? "ok" : "FAILED") << "\n";
            out << "  phi1 = " << row.phi1.str() << "\n  phi2 = " << row.phi2.str() << "\n";
        }
        return rep.ok ? 0 : 1;
    }
    if (verify_all) {
        RunReport rep = reproduce_table4(opts.seed);
        rep.timing_ms = timer.ms();
        print_report(rep, opts, out);
        return rep.ok ? 0 : 1;
    }
    // no row, no verify: dump the full catalog
    json rows = json::array();
    for (const auto& row : catalog_rows(6)) rows.push_back(row_to_json(row));
    json j;
    j["schema"] = 1;
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_map_analyze(const std::string& source, bool want_crit, bool want_proper,
                    bool want_degree, const GlobalOpts& opts, std::ostream& out) {
    Timer timer;
    PolyMap f = load_map(source);
    json j = map_to_json(f);
    if (want_degree) {
        long d = maps::topological_degree(f, opts.modp ? DegreeMode::ModP : DegreeMode::Exact,
                                          opts.seed);
        j["degree"] = d;
        j["degree_mode"] = opts.modp ? "modp" : "exact";
    }
    if (want_crit) {
        auto names = MultiPoly<Cyclotomic>::default_names(f.n);
        j["critical_locus"] = maps::critical_locus(f).str(names);
    }
    if (want_proper) {
        auto pr = maps::properness_test(f);
        j["proper"] = pr.proper ? json{{"verdict", "Proper"}, {"certificate", pr.certificate}}
                                : json{{"verdict", "Unknown"}};
    }
    if (opts.json) {
        out << j.dump(2) << "\n";
    } else {
        out << "map " << f.display() << "\n";
        if (j.contains("degree"))
            out << "  topological degree: " << j["degree"] << " (" << timer.ms() << " ms)\n";
        if (j.contains("critical_locus")) out << "  J_f = " << j["critical_locus"] << "\n";
        if (j.contains("proper")) out << "  properness: " << j["proper"].dump() << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& left, const std::string& right, const GlobalOpts& opts,
                 std::ostream& out) {
    PolyMap f = load_map(left);
    PolyMap g = load_map(right);
    auto rep = maps::classify(f, g, opts.seed,
                              opts.modp ? DegreeMode::ModP : DegreeMode::Exact);
    json j;
    j["schema"] = 1;
    j["left"] = map_to_json(f);
    j["right"] = map_to_json(g);
    j["verdict"] = verdict_str(rep.verdict);
    if (rep.verdict == maps::ClassificationReport::Verdict::NotEquivalent) {
        j["witness"] = {{"invariant", rep.witness},
                        {"left_value", rep.left_value},
                        {"right_value", rep.right_value}};
    }
    j["notes"] = rep.notes;
    if (opts.json) out << j.dump(2) << "\n";
    else {
        out << "verdict: " << verdict_str(rep.verdict) << "\n";
        if (!rep.witness.empty())
            out << "  witness: " << rep.witness << " (" << rep.left_value << " vs "
                << rep.right_value << ")\n";
        for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    }
    return rep.verdict == maps::ClassificationReport::Verdict::NotEquivalent ? 2 : 0;
}

int cmd_milnor(const std::string& poly, const GlobalOpts& opts, std::ostream& out) {
    PolyC f = parse_poly(poly, 2);
    auto rep = sing::milnor_plane(f);
    json j;
    j["schema"] = 1;
    j["poly"] = f.str();
    if (rep.milnor) j["milnor"] = *rep.milnor;
    else j["milnor"] = "infinite";
    j["method"] = rep.method;
    if (opts.json) out << j.dump(2) << "\n";
    else out << "mu(" << f.str() << ", o) = " << j["milnor"].dump() << " [" << rep.method << "]\n";
    return 0;
}

int cmd_gamma(int d, const std::string& lambda, const GlobalOpts& opts, std::ostream& out) {
    Cyclotomic lam = parse_scalar(lambda);
    bool member = sing::gamma_membership(d, lam);
    json j;
    j["schema"] = 1;
    j["d"] = d;
    j["lambda"] = lam.str();
    j["member"] = member;
    if (d >= 4 && member) j["kang_tag"] = sing::kang_tag(d, lam).str();
    if (opts.json) out << j.dump(2) << "\n";
    else {
        auto approx = lam.approx(); // display only
        out << "lambda = " << lam.str() << " (~ " << approx.real()
            << (approx.imag() < 0 ? " - " : " + ") << std::abs(approx.imag()) << "i)"
            << (member ? " lies in " : " is outside ") << "Gamma_" << d << "\n";
        if (j.contains("kang_tag")) out << "  analytic tag lambda^d = " << j["kang_tag"] << "\n";
    }
    return 0;
}

RunReport reproduce_tables(uint64_t seed) {
    (void)seed;
    RunReport rep;
    rep.command = "reproduce tables";
    for (int no = 4; no <= 22; ++no) {
        auto spec = groups::GroupSpec::exceptional(no);
        std::string base = "tables/ST" + std::to_string(no);
        try {
            auto g = groups::generate_group(spec);
            rep.add(base + "/order", std::to_string(spec.order()), std::to_string(g.order()));
            rep.add(base + "/reflections", std::to_string(spec.expected_reflections()),
                    std::to_string(groups::count_reflections(g)));
            auto pres = groups::verify_presentation(spec);
            rep.add_bool(base + "/presentation", pres.ok());
            rep.add(base + "/st-exponents-nonempty", "yes", pres.st_exponents.empty() ? "no" : "yes");
        } catch (const Error& e) {
            rep.add_bool(base, false, e.what());
        }
    }
    for (int m = 1; m <= 8; ++m) {
        auto spec = groups::GroupSpec::cyclic(m);
        auto g = groups::generate_group(spec);
        std::string base = "tables/Z" + std::to_string(m);
        rep.add(base + "/order", std::to_string(spec.order()), std::to_string(g.order()));
        rep.add(base + "/reflections", std::to_string(spec.expected_reflections()),
                std::to_string(groups::count_reflections(g)));
    }
    for (int m = 2; m <= 4; ++m) {
        for (int n = m; n <= 4; ++n) {
            auto spec = groups::GroupSpec::product(m, n);
            auto g = groups::generate_group(spec);
            std::string base = "tables/Z" + std::to_string(m) + "xZ" + std::to_string(n);
            rep.add(base + "/order", std::to_string(spec.order()), std::to_string(g.order()));
            rep.add(base + "/reflections", std::to_string(spec.expected_reflections()),
                    std::to_string(groups::count_reflections(g)));
        }
    }
    for (int m = 2; m <= 8; ++m) {
        for (int p = 1; p <= m; ++p) {
            if (m % p != 0) continue;
            auto spec = groups::GroupSpec::family(m, p);
            auto g = groups::generate_group(spec);
            std::string base = "tables/G(" + std::to_string(m) + "," + std::to_string(p) + ",2)";
            rep.add(base + "/order", std::to_string(spec.order()), std::to_string(g.order()));
            rep.add(base + "/reflections", std::to_string(spec.expected_reflections()),
                    std::to_string(groups::count_reflections(g)));
        }
    }
    rep.sort_checks();
    return rep;
}

RunReport reproduce_table4(uint64_t seed) {
    (void)seed;
    RunReport rep;
    rep.command = "reproduce table4";
    for (const auto& row : catalog_rows(6)) verify_row_into(row, rep);
    rep.sort_checks();
    return rep;
}

RunReport reproduce_milnor(uint64_t seed) {
    (void)seed;
    RunReport rep;
    rep.command = "reproduce milnor";
    for (int d = 3; d <= 6; ++d) {
        for (int a = 2; a <= 5; ++a) {
            PolyC f = parse_poly("y^" + std::to_string(d - 1) + " - x^" + std::to_string(a), 2);
            auto r = sing::milnor_plane(f);
            rep.add("milnor/plane/d" + std::to_string(d) + "a" + std::to_string(a),
                    std::to_string((d - 2) * (a - 1)),
                    r.milnor ? std::to_string(*r.milnor) : "infinite");
        }
    }
    int idx = 0;
    for (int d : {3, 4, 5, 6, 3, 4, 5, 6, 3, 4}) {
        int a1 = 2 + (idx % 3), a2 = 2 + (idx / 2 % 3);
        auto r = sing::milnor_brieskorn(d, {a1, a2});
        rep.add("milnor/brieskorn/" + std::to_string(idx),
                std::to_string((d - 2) * (a1 - 1) * (a2 - 1)),
                r.milnor ? std::to_string(*r.milnor) : "infinite");
        ++idx;
    }
    std::vector<Cyclotomic> lambdas{Cyclotomic(0), Cyclotomic(1), Cyclotomic(-2),
                                    Cyclotomic(Rational(1, 2)), Cyclotomic::root_of_unity(4, 1)};
    for (int d : {4, 5}) {
        for (size_t li = 0; li < lambdas.size(); ++li) {
            PolyC f(2);
            f.add_term(Mono{0, (uint32_t)d}, Cyclotomic(1));
            f.add_term(Mono{(uint32_t)(d - 1), 1}, lambdas[li]);
            f.add_term(Mono{(uint32_t)d, 0}, Cyclotomic(1));
            auto r = sing::milnor_plane(f);
            rep.add("milnor/lambda-independence/d" + std::to_string(d) + "/sample" +
                        std::to_string(li),
                    std::to_string((d - 1) * (d - 1)),
                    r.milnor ? std::to_string(*r.milnor) : "infinite");
        }
    }
    rep.sort_checks();
    return rep;
}

RunReport reproduce_families(uint64_t seed, bool full_degree_sweep) {
    RunReport rep;
    rep.command = "reproduce families";
    for (int d = 3; d <= 6; ++d) {
        std::string name = "families/degree/thmA:" + std::to_string(d);
        rep.add(name, std::to_string(d),
                std::to_string(maps::topological_degree(maps::family_thmA(d), DegreeMode::Exact,
                                                        subseed(seed, name))));
        for (int a = 2; a <= 4; ++a) {
            std::string nb = "families/degree/thmB:" + std::to_string(d) + "," + std::to_string(a);
            rep.add(nb, std::to_string(d),
                    std::to_string(maps::topological_degree(
                        maps::family_thmB(d, a), DegreeMode::Exact, subseed(seed, nb))));
        }
    }
    // quotient-map degrees: exact for |G| <= 96, mod-p beyond
    for (const auto& row : catalog_rows(4)) {
        long order = row.group.order();
        if (!full_degree_sweep && order > 600 && row.name != "ft19") continue;
        std::string name = "families/degree/" + row.name;
        DegreeMode mode = order <= 96 ? DegreeMode::Exact : DegreeMode::ModP;
        auto f = maps::normal_form_map(row);
        rep.add(name + (mode == DegreeMode::Exact ? "/exact" : "/modp"), std::to_string(order),
                std::to_string(maps::topological_degree(f, mode, subseed(seed, name))));
    }
    // classifier certificates
    auto verdict = [&](const PolyMap& a, const PolyMap& b, const std::string& nm) {
        return verdict_str(maps::classify(a, b, subseed(seed, nm)).verdict);
    };
    rep.add("families/classify/thmB-3-2-vs-3-3", "NotEquivalent",
            verdict(maps::family_thmB(3, 2), maps::family_thmB(3, 3),
                    "families/classify/thmB-3-2-vs-3-3"));
    rep.add("families/classify/thmB1-1-vs-2", "NotEquivalent",
            verdict(maps::family_thmB1(4, Cyclotomic(1)), maps::family_thmB1(4, Cyclotomic(2)),
                    "families/classify/thmB1-1-vs-2"));
    rep.add("families/classify/thmB1-1-vs-i", "Inconclusive",
            verdict(maps::family_thmB1(4, Cyclotomic(1)),
                    maps::family_thmB1(4, Cyclotomic::root_of_unity(4, 1)),
                    "families/classify/thmB1-1-vs-i"));
    rep.add("families/classify/f212-vs-f442", "Inconclusive",
            verdict(maps::normal_form_map(invariants::family_row(2, 1)),
                    maps::normal_form_map(invariants::family_row(4, 4)),
                    "families/classify/f212-vs-f442"));
    rep.add("families/classify/reflexive-thmA3", "Inconclusive",
            verdict(maps::family_thmA(3), maps::family_thmA(3),
                    "families/classify/reflexive-thmA3"));
    rep.sort_checks();
    return rep;
}

int cmd_reproduce(const std::string& target, const GlobalOpts& opts, std::ostream& out) {
    Timer timer;
    std::vector<RunReport> parts;
    if (target == "tables" || target == "all") parts.push_back(reproduce_tables(opts.seed));
    if (target == "table4" || target == "all") parts.push_back(reproduce_table4(opts.seed));
    if (target == "milnor" || target == "all") parts.push_back(reproduce_milnor(opts.seed));
    if (target == "families" || target == "all")
        parts.push_back(reproduce_families(opts.seed, false));
    if (parts.empty())
        raise(Errc::SpecInvalid, "unknown reproduce target '" + target +
                                     "' (tables|table4|milnor|families|all)");
    RunReport merged;
    merged.command = "reproduce " + target;
    for (auto& p : parts) {
        merged.ok = merged.ok && p.ok;
        for (auto& c : p.checks) merged.checks.push_back(std::move(c));
    }
    merged.sort_checks();
    merged.timing_ms = timer.ms();
    print_report(merged, opts, out);
    if (!merged.ok) {
        out << "first failing check: " << merged.first_failure() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cli
} // namespace atlas
