#include <iostream>

#include <CLI11.hpp>

#include "atlas/cli.hpp"
#include "atlas/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"atlas: exact invariants of plane reflection groups and proper polynomial maps"};
    app.require_subcommand(1);

    atlas::cli::GlobalOpts opts;
    app.add_flag("--json", opts.json, "machine-readable output (byte-identical per seed)");
    app.add_option("--seed", opts.seed, "seed for randomized eliminations")->default_val(0);
    app.add_flag("--modp", opts.modp, "degree counting over random word-size primes");

    // group
    auto* group = app.add_subcommand("group", "build and verify a reflection group");
    std::string group_spec;
    bool verify_order = false, verify_pres = false, count_refl = false;
    group->add_option("--spec", group_spec, "ST4..ST22 | G(m,p,2) | Z5 | Z2xZ3")->required();
    group->add_flag("--verify-order", verify_order);
    group->add_flag("--verify-presentation", verify_pres);
    group->add_flag("--count-reflections", count_refl);

    // table4
    auto* table4 = app.add_subcommand("table4", "quotient normal forms and branch loci");
    std::string row;
    bool verify_all = false;
    table4->add_option("--row", row, "row name: ft4..ft22, f5, f2,4, f4,2,2");
    table4->add_flag("--verify-all", verify_all);

    // map analyze
    auto* map = app.add_subcommand("map", "polynomial self-map analysis");
    auto* analyze = map->add_subcommand("analyze", "degree / critical locus / properness");
    std::string map_source, degree_opt = "exact";
    bool want_crit = false, want_proper = false;
    analyze->add_option("--file", map_source, "map JSON file, inline JSON, or compact spec")
        ->required();
    analyze->add_option("--degree", degree_opt, "exact|modp|off")->default_val("exact");
    analyze->add_flag("--crit", want_crit);
    analyze->add_flag("--proper", want_proper);

    // classify
    auto* classify = app.add_subcommand("classify", "non-equivalence certificates");
    std::string left, right;
    classify->add_option("--left", left)->required();
    classify->add_option("--right", right)->required();

    // milnor
    auto* milnor = app.add_subcommand("milnor", "Milnor number of a plane curve at the origin");
    std::string poly;
    milnor->add_option("--poly", poly)->required();

    // gamma
    auto* gamma = app.add_subcommand("gamma", "Gamma_d membership of lambda");
    int gamma_d = 4;
    std::string lambda;
    gamma->add_option("--d", gamma_d)->required();
    gamma->add_option("--lambda", lambda)->required();

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "whole-catalog verification runs");
    std::string target = "all";
    reproduce->add_option("target", target, "tables|table4|milnor|families|all");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    analyze->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*group)
            return atlas::cli::cmd_group(group_spec, verify_order, verify_pres, count_refl, opts,
                                         std::cout);
        if (*table4) return atlas::cli::cmd_table4(row, verify_all, opts, std::cout);
        if (*map) {
            if (degree_opt == "modp") opts.modp = true;
            return atlas::cli::cmd_map_analyze(map_source, want_crit, want_proper,
                                               degree_opt != "off", opts, std::cout);
        }
        if (*classify) return atlas::cli::cmd_classify(left, right, opts, std::cout);
        if (*milnor) return atlas::cli::cmd_milnor(poly, opts, std::cout);
        if (*gamma) return atlas::cli::cmd_gamma(gamma_d, lambda, opts, std::cout);
        if (*reproduce) return atlas::cli::cmd_reproduce(target, opts, std::cout);
    } catch (const atlas::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
