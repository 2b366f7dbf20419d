// Command-line entry point: runs the verification suites and writes a
// machine-diffable JSON report.
//
//   sievecert verify-omega
//   sievecert verify-decomposition [--case 0.53-0.545]
//   sievecert verify-exponents [--claim smoothfull-0.335]
//   sievecert verify-combinatorics [--case I.i]
//   sievecert verify-all
//   sievecert dump-catalog [--omega <path>] [--emit-csv <path>]
//
// Exit codes: 0 all executed claims pass, 1 claim failure, 2 usage error.

#include "sievecert/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace sievecert;

namespace {

int write_and_score(const Config& cfg, const std::vector<ClaimRecord>& claims,
                    const std::string& report_path, double wall) {
    std::string doc = render_report(cfg, claims, wall);
    std::ofstream out(report_path);
    if (!out) {
        std::cerr << "cannot write report to " << report_path << "\n";
        return 2;
    }
    out << doc;
    int failures = 0;
    for (const auto& c : claims) {
        if (!c.passed()) {
            ++failures;
            std::cout << "FAIL " << c.id << " (" << c.status << ")"
                      << (c.note.empty() ? "" : "  [" + c.note + "]") << "\n";
        }
    }
    std::cout << claims.size() - failures << "/" << claims.size() << " claims pass; report at "
              << report_path << "\n";
    return failures == 0 ? 0 : 1;
}

void emit_csv(const Config& cfg, const std::string& path) {
    const PiecewiseOmega& t = shared_omega(cfg);
    std::ofstream out(path);
    out << "kind,key,value\n";
    for (double u = 1.0; u <= t.u_max() + 1e-12; u += 0.01)
        out << "omega," << u << "," << t.omega(std::min(u, t.u_max())).value << "\n";
    for (const auto& c : case_catalog()) {
        CaseReport rep = verify_case(c, t, cfg.quad_tol, cfg.eps1_values.front(), false, cfg.jobs);
        for (const auto& th : rep.thetas)
            out << "theta," << th.anchor << "," << th.value << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale verification of the sieve-decomposition numerics"};
    app.require_subcommand(1);

    Config cfg;
    std::string report_path = "./report.json";
    std::string config_path, case_id, claim_id, omega_path, csv_path;
    double eps1_flag = -1.0, quad_tol_flag = -1.0;
    std::string seeds_flag;
    int jobs_flag = -1;

    app.add_option("--report", report_path, "report output path");
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--eps1", eps1_flag, "run at a single epsilon_1 value");
    app.add_option("--quad-tol", quad_tol_flag, "quadrature tolerance");
    app.add_option("--seeds", seeds_flag, "comma-separated seed list");
    app.add_option("--jobs", jobs_flag, "concurrent work items");

    auto* omega_cmd = app.add_subcommand("verify-omega", "Buchstab table checks");
    auto* decomp_cmd = app.add_subcommand("verify-decomposition", "theta catalog checks");
    decomp_cmd->add_option("--case", case_id, "restrict to one a-case id");
    auto* expo_cmd = app.add_subcommand("verify-exponents", "inequality certification");
    expo_cmd->add_option("--claim", claim_id, "restrict to one claim id");
    auto* comb_cmd = app.add_subcommand("verify-combinatorics", "falsification harness");
    comb_cmd->add_option("--case", case_id, "restrict to one case id");
    auto* all_cmd = app.add_subcommand("verify-all", "every suite");
    auto* dump_cmd = app.add_subcommand("dump-catalog", "emit tables and catalog data");
    dump_cmd->add_option("--omega", omega_path, "write the omega table to this path");
    dump_cmd->add_option("--emit-csv", csv_path, "write (u, omega) and per-theta values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) cfg = Config::from_file(config_path);
        if (eps1_flag >= 0.0) cfg.eps1_values = {eps1_flag};
        if (quad_tol_flag > 0.0) cfg.quad_tol = quad_tol_flag;
        if (jobs_flag > 0) cfg.jobs = jobs_flag;
        if (!seeds_flag.empty()) {
            cfg.seeds.clear();
            std::stringstream ss(seeds_flag);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.seeds.push_back(std::stoull(tok));
        }

        SuiteFilter filter;
        if (!case_id.empty()) filter.case_id = case_id;
        if (!claim_id.empty()) filter.claim_id = claim_id;

        auto t0 = std::chrono::steady_clock::now();
        std::vector<ClaimRecord> claims;
        if (*omega_cmd) {
            claims = run_omega_suite(cfg);
        } else if (*decomp_cmd) {
            claims = run_decomposition_suite(cfg, filter);
        } else if (*expo_cmd) {
            claims = run_exponents_suite(cfg, filter);
        } else if (*comb_cmd) {
            claims = run_combinatorics_suite(cfg, filter);
        } else if (*all_cmd) {
            auto add = [&](std::vector<ClaimRecord> v) {
                claims.insert(claims.end(), v.begin(), v.end());
            };
            add(run_omega_suite(cfg));
            add(run_decomposition_suite(cfg, {}));
            add(run_exponents_suite(cfg, {}));
            add(run_combinatorics_suite(cfg, {}));
        } else if (*dump_cmd) {
            if (!omega_path.empty()) shared_omega(cfg).dump(omega_path);
            if (!csv_path.empty()) emit_csv(cfg, csv_path);
            if (omega_path.empty() && csv_path.empty()) {
                std::cout << "exponent tuples:\n";
                for (const auto& t : z_tuples())
                    std::cout << "  (" << t.U << ", " << t.V << ", " << t.W << ", " << t.X << ", "
                              << t.Y << ", " << t.Z << ")\n";
                std::cout << "claims:\n";
                for (const auto& c : catalog_claims()) std::cout << "  " << c.id << "\n";
                std::cout << "cases:\n";
                for (const auto& c : combinatorics_cases()) std::cout << "  " << c.id << "\n";
            }
            return 0;
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return write_and_score(cfg, claims, report_path, wall);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
