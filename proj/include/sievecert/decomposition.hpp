#pragma once

// The frozen catalog of the six sieve-decomposition cases: per a-case lists
// of theta terms (nested omega integrals or closed-form log-power bounds)
// with their transcribed bounds, plus the verification routines.

#include "sievecert/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sievecert {

struct ThetaSpec {
    int index = 0;                       // 1-based within its case
    std::vector<IntegralSpec> integrals; // summed components (union domains split here)
    std::vector<ArithTerm> arith;        // closed-form components
    double claimed_bound = 0.0;
    std::string anchor;                  // structural id, e.g. "harman/0.53-0.545/theta-10"
    std::string bound_text;              // the bound as printed at the source
};

struct DecompositionCase {
    std::string id;          // "a<=0.53", "0.53-0.545", ...
    double a_lo = 0.0, a_hi = 0.0;
    double beta = 0.0;
    std::vector<ThetaSpec> thetas;
    double claimed_total = 0.0;
};

struct ThetaReport {
    int index = 0;
    double value = 0.0;
    double err = 0.0;
    double bound = 0.0;
    bool pass = false;          // value + err < bound
    bool empty_domain = false;  // computed exactly 0 (flagged for review)
    std::int64_t evaluations = 0;
    std::string anchor;
};

struct CaseReport {
    std::string id;
    std::vector<ThetaReport> thetas;
    double total_computed = 0.0;
    double total_err = 0.0;
    double claimed_total = 0.0;
    bool all_thetas_pass = false;
    bool total_pass = false;   // total_computed + total_err < claimed_total
    bool budget_pass = false;  // total_computed + total_err < 0.99999
    bool aborted = false;
    double wall_seconds = 0.0;
};

inline constexpr double kGammaBudget = 0.99999;

std::vector<DecompositionCase> case_catalog();

CaseReport verify_case(const DecompositionCase& c, const PiecewiseOmega& omega, double tol,
                       double eps1 = 0.0, bool use_omega_upper = false, int jobs = 1);

std::vector<CaseReport> verify_all(const PiecewiseOmega& omega, double tol,
                                   double eps1 = 0.0, int jobs = 1);

}  // namespace sievecert
