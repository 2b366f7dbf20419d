#pragma once

// Configuration, claim records, and the suite runners behind the CLI.

#include "sievecert/buchstab.hpp"
#include "sievecert/combinatorics.hpp"
#include "sievecert/decomposition.hpp"
#include "sievecert/exponents.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sievecert {

struct Config {
    std::vector<double> eps1_values{0.0, 1e-7};  // --eps1 narrows to one
    double quad_tol = 1e-4;
    double certify_min_width = 1e-5;
    double certify_margin = 1e-4;
    long long falsify_count = 100000;
    std::vector<std::uint64_t> seeds{1, 42, 2024};
    double omega_step = 1e-4;
    double omega_u_max = 64.0;
    int jobs = 1;

    static Config from_file(const std::string& path);  // key=value lines
    void apply_kv(const std::string& key, const std::string& value);
};

struct ClaimRecord {
    std::string id;
    std::string paper_anchor;
    std::string kind;      // "table", "integral", "arith", "certify", "falsify", ...
    double value = 0.0;
    double err = 0.0;
    double bound = 0.0;
    std::string relation;  // "<", "<=", ">=", "=", "covers"
    std::string status;    // PASS/FAIL/CERTIFIED/FALSIFIED/INCONCLUSIVE/FALSIFICATION-PASSED
    double margin = 0.0;
    std::string note;

    bool passed() const {
        return status == "PASS" || status == "CERTIFIED" || status == "FALSIFICATION-PASSED";
    }
};

struct SuiteFilter {
    std::optional<std::string> case_id;
    std::optional<std::string> claim_id;
};

std::vector<ClaimRecord> run_omega_suite(const Config& cfg);
std::vector<ClaimRecord> run_decomposition_suite(const Config& cfg, const SuiteFilter& f = {});
std::vector<ClaimRecord> run_exponents_suite(const Config& cfg, const SuiteFilter& f = {});
std::vector<ClaimRecord> run_combinatorics_suite(const Config& cfg, const SuiteFilter& f = {});

// Renders the report document; deterministic for fixed config and seeds
// except for the contents of the "timestamp" field.
std::string render_report(const Config& cfg, const std::vector<ClaimRecord>& claims,
                          double wall_seconds);

// Shared omega table for a config (built once per process).
const PiecewiseOmega& shared_omega(const Config& cfg);

}  // namespace sievecert
