#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <cstdint>

namespace atlas {
namespace cli {

struct GlobalOpts {
    bool json = false;
    uint64_t seed = 0;
    bool modp = false;
};

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct RunReport {
    std::string command;
    bool ok = true;
    std::vector<CheckResult> checks; // emitted sorted by name
    long timing_ms = 0;

    void add(std::string name, std::string expected, std::string actual);
    void add_bool(std::string name, bool pass, std::string detail = "");
    void sort_checks();
    std::string first_failure() const;
};

// Exit codes: 0 ok, 1 error, 2 NotEquivalent (classify only).
int cmd_group(const std::string& spec, bool verify_order, bool verify_presentation,
              bool count_reflections, const GlobalOpts& opts, std::ostream& out);
int cmd_table4(const std::string& row, bool verify_all, const GlobalOpts& opts,
               std::ostream& out);
int cmd_map_analyze(const std::string& source, bool want_crit, bool want_proper,
                    bool want_degree, const GlobalOpts& opts, std::ostream& out);
int cmd_classify(const std::string& left, const std::string& right, const GlobalOpts& opts,
                 std::ostream& out);
int cmd_milnor(const std::string& poly, const GlobalOpts& opts, std::ostream& out);
int cmd_gamma(int d, const std::string& lambda, const GlobalOpts& opts, std::ostream& out);
int cmd_reproduce(const std::string& target, const GlobalOpts& opts, std::ostream& out);

// reproduce building blocks, shared with the acceptance suite
RunReport reproduce_tables(uint64_t seed);
RunReport reproduce_table4(uint64_t seed);
RunReport reproduce_milnor(uint64_t seed);
RunReport reproduce_families(uint64_t seed, bool full_degree_sweep);

} // namespace cli
} // namespace atlas
