#include "sievecert/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace sievecert {

namespace {

struct Budget {
    std::int64_t used = 0;
    std::int64_t cap = 0;
    bool exhausted = false;
    void charge(std::int64_t n) {
        used += n;
        if (used > cap) exhausted = true;
    }
};

struct Nested {
    const IntegralSpec& spec;
    const PiecewiseOmega& omega;
    const IntegrateOptions& opt;
    Budget& budget;

    struct Value {
        double v = 0.0;
        double e = 0.0;
    };

    Point make_point(const std::vector<double>& prefix) const {
        Point p(opt.eps1);
        for (std::size_t i = 0; i < prefix.size(); ++i)
            p.set(static_cast<Var>(static_cast<int>(Var::alpha1) + static_cast<int>(i)), prefix[i]);
        return p;
    }

    // Innermost omega integral over [lo, hi] given the outer variables.
    Value innermost_omega(const std::vector<double>& prefix, double lo, double hi) const {
        double sum = 0.0, prod = 1.0;
        for (double a : prefix) {
            sum += a;
            prod *= a;
        }
        double c = 1.0 - sum;
        if (c <= 0.0) return {};
        hi = std::min(hi, 0.5 * c);  // keeps the w-argument >= 1
        if (hi <= lo) return {};
        if (lo <= 0.0) throw std::domain_error("integrate: nonpositive inner lower limit");
        double u_hi = c / lo - 1.0;  // larger u at the lower endpoint
        double u_lo = c / hi - 1.0;
        if (u_hi > omega.u_max() + 1e-9 && !opt.use_omega_upper)
            throw std::domain_error("integrate: w-argument exceeds the table range");
        if (spec.kernel == KernelKind::OmegaSq) {
            if (opt.use_omega_upper)
                return {omega_upper_integral(u_lo, u_hi) / (c * prod), 0.0};
            OmegaValue r = omega.integral(u_lo, u_hi);
            return {r.value / (c * prod), r.err / (c * prod)};
        }
        double d = spec.lin_denom * prod;
        if (opt.use_omega_upper)
            return {omega_upper_integral_over_up1(u_lo, u_hi) / d, 0.0};
        OmegaValue r = omega.integral_over_up1(u_lo, u_hi);
        return {r.value / d, r.err / d};
    }

    Value innermost_closed(const std::vector<double>& prefix, double lo, double hi) const {
        Point p = make_point(prefix);
        p.set(static_cast<Var>(static_cast<int>(Var::alpha1) + spec.vars - 1), 0.5 * (lo + hi));
        return {spec.closed_value.eval(p) * (hi - lo), 0.0};
    }

    Value eval_level(std::vector<double>& prefix, int dim, double tol_abs) {
        Point p = make_point(prefix);
        double lo = spec.limits[dim].first.eval(p);
        double hi = spec.limits[dim].second.eval(p);
        if (!(hi > lo)) return {};
        if (dim == spec.vars - 1) {
            budget.charge(1);
            if (spec.kernel == KernelKind::Closed) return innermost_closed(prefix, lo, hi);
            return innermost_omega(prefix, lo, hi);
        }
        return adaptive(prefix, dim, lo, hi, tol_abs);
    }

    // Adaptive Simpson on [lo, hi] for dimension dim; f(x) = eval_level(dim+1).
    // Half the absolute budget goes to this level's quadrature error, the
    // other half to the children (scaled by the length so that the weighted
    // sum of child errors stays within it).
    Value adaptive(std::vector<double>& prefix, int dim, double lo, double hi, double tol_abs) {
        const double quad_budget = 0.5 * tol_abs;
        const double child_tol = 0.5 * tol_abs / (hi - lo);
        prefix.push_back(0.0);
        auto f = [&](double x) -> Value {
            prefix.back() = x;
            return eval_level(prefix, dim + 1, child_tol);
        };
        struct Cell {
            double a, b;
            Value fa, fm, fb;
            double S;
            int depth;
        };
        auto simpson = [](double a, double b, const Value& fa, const Value& fm, const Value& fb) {
            return (b - a) / 6.0 * (fa.v + 4.0 * fm.v + fb.v);
        };
        const double full = hi - lo;
        Value fa = f(lo), fm = f(0.5 * (lo + hi)), fb = f(hi);
        std::vector<Cell> stack{{lo, hi, fa, fm, fb, simpson(lo, hi, fa, fm, fb), 0}};
        double acc_v = 0.0, acc_e = 0.0;
        while (!stack.empty()) {
            if (budget.exhausted) break;
            Cell c = stack.back();
            stack.pop_back();
            double m = 0.5 * (c.a + c.b);
            Value fl = f(0.5 * (c.a + m));
            Value fr = f(0.5 * (m + c.b));
            double Sl = simpson(c.a, m, c.fa, fl, c.fm);
            double Sr = simpson(m, c.b, c.fm, fr, c.fb);
            double est = std::fabs(Sl + Sr - c.S);
            double target = quad_budget * ((c.b - c.a) / full);
            if (est <= target || c.depth >= 48 || (c.b - c.a) < 1e-13) {
                acc_v += Sl + Sr;
                // inherited error: Simpson weights are positive and sum to the length
                double child = (c.b - c.a) / 6.0 *
                               (c.fa.e + 4.0 * fl.e + 2.0 * c.fm.e + 4.0 * fr.e + c.fb.e) * 0.5;
                acc_e += est + child;
            } else {
                stack.push_back({c.a, m, c.fa, fl, c.fm, Sl, c.depth + 1});
                stack.push_back({m, c.b, c.fm, fr, c.fb, Sr, c.depth + 1});
            }
        }
        prefix.pop_back();
        return {acc_v, acc_e};
    }
};

}  // namespace

IntegralResult integrate(const IntegralSpec& spec, const PiecewiseOmega& omega,
                         double tol, const IntegrateOptions& opt) {
    if (spec.vars < 1 || spec.vars > 6 ||
        spec.limits.size() != static_cast<std::size_t>(spec.vars))
        throw std::invalid_argument("integrate: malformed spec");
    if (!(tol >= 1e-8 && tol <= 1e-2))
        throw std::invalid_argument("integrate: tol must lie in [1e-8, 1e-2]");

    Budget budget;
    budget.cap = opt.max_evaluations;
    Nested nest{spec, omega, opt, budget};

    std::vector<double> prefix;
    prefix.reserve(spec.vars);
    Nested::Value r = nest.eval_level(prefix, 0, tol / std::max(1e-12, std::fabs(spec.prefactor)));

    IntegralResult out;
    out.value = spec.prefactor * r.v;
    out.err = std::fabs(spec.prefactor) * r.e;
    out.evaluations = budget.used;
    out.budget_exhausted = budget.exhausted;
    return out;
}

double eval_arith_bound(const std::vector<ArithTerm>& terms) {
    double total = 0.0;
    for (const auto& t : terms) {
        if (!(t.denom > 0.0)) throw std::invalid_argument("arith bound: denom must be positive");
        double prod = 1.0;
        for (const auto& lf : t.factors) {
            if (!(lf.ratio > 1.0)) throw std::invalid_argument("arith bound: ratios must exceed 1");
            prod *= std::pow(std::log(lf.ratio), lf.power);
        }
        total += prod / t.denom;
    }
    return total;
}

}  // namespace sievecert
