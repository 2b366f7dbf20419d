#pragma once

// Nested integrals with min/max-of-affine limits and omega kernels.
//
// The innermost variable of an omega-kernel integral always enters as
// w((1-sum)/a_k) / (prod * a_k^2)  or  w((1-sum)/a_k) / (c * prod * a_k),
// which substitutes to a difference of the table's cumulative integrals.
// Only the outer dimensions are integrated numerically (adaptive Simpson
// with per-cell Richardson-style error estimates). The argument floor
// w-argument >= 1 is an exact cap on the innermost upper limit.

#include "sievecert/buchstab.hpp"
#include "sievecert/expr.hpp"

#include <cstdint>
#include <vector>

namespace sievecert {

enum class KernelKind {
    OmegaSq,   // w((1-sum)/a_k) / (a_1...a_{k-1} * a_k^2)
    OmegaLin,  // w((1-sum)/a_k) / (lin_denom * a_1...a_{k-1} * a_k)
    Closed,    // constant kernel (closed-form value expression)
};

struct IntegralSpec {
    int vars = 0;                                // k <= 6
    std::vector<std::pair<Expr, Expr>> limits;   // per-variable lower/upper
    KernelKind kernel = KernelKind::OmegaSq;
    double lin_denom = 1.0;                      // the c of OmegaLin
    Expr closed_value = Expr(1.0);               // kernel value for Closed
    double prefactor = 1.0;
};

struct IntegralResult {
    double value = 0.0;
    double err = 0.0;
    std::int64_t evaluations = 0;
    bool budget_exhausted = false;
};

struct IntegrateOptions {
    double eps1 = 0.0;
    bool use_omega_upper = false;    // replace w by max(0.6, 1/u)
    std::int64_t max_evaluations = 400000000;
};

IntegralResult integrate(const IntegralSpec& spec, const PiecewiseOmega& omega,
                         double tol, const IntegrateOptions& opt = {});

// Closed-form log-power bounds ("two close prime factors" terms):
// sum over terms of  prod_i ln(ratio_i)^power_i / denom.
struct ArithTerm {
    struct LogFactor {
        double ratio = 1.0;
        int power = 1;
    };
    std::vector<LogFactor> factors;
    double denom = 1.0;
};

double eval_arith_bound(const std::vector<ArithTerm>& terms);

}  // namespace sievecert
