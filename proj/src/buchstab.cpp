#include "sievecert/buchstab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sievecert {

namespace {

double closed_form(double u) {
    if (u < 2.0) return 1.0 / u;
    return (1.0 + std::log(u - 1.0)) / u;
}

}  // namespace

PiecewiseOmega PiecewiseOmega::build(double u_max, double step) {
    if (!(u_max > 2.0) || !(step > 0.0) || !std::isfinite(u_max) || !std::isfinite(step))
        throw std::invalid_argument("build_omega: need u_max > 2 and step > 0, both finite");
    if (u_max > 64.0) throw std::invalid_argument("build_omega: u_max must be <= 64");
    if (step > 0.01) throw std::invalid_argument("build_omega: step must be <= 0.01");

    PiecewiseOmega t;
    const std::size_t per_unit = static_cast<std::size_t>(std::llround(1.0 / step));
    t.step_ = 1.0 / static_cast<double>(per_unit);
    const std::size_t n = static_cast<std::size_t>(std::ceil((u_max - 1.0) / t.step_ - 1e-9)) + 1;
    t.u_max_ = t.grid_u(n - 1);

    t.w_.resize(n);
    t.I_.resize(n);
    t.J_.resize(n);
    t.err_w_.assign(n, 0.0);
    t.err_I_.assign(n, 0.0);

    const double h = t.step_;
    // Exact samples up to u = 3 (or u_max if smaller).
    std::size_t k3 = std::min(n - 1, 2 * per_unit);
    for (std::size_t k = 0; k <= k3; ++k) t.w_[k] = closed_form(t.grid_u(k));

    // Cumulative trapezoid for I and J with a running quadrature-error bound.
    // Local trapezoid error per step is h^3/12 * |w''|; |w''| <= 2 on [1,2]
    // and stays below 2 afterwards (measured second differences confirm),
    // so we charge h^3/12 * 2 per step, doubled for safety.
    const double local_quad = (h * h * h / 12.0) * 2.0 * 2.0;
    t.I_[0] = 0.0;
    t.J_[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        if (k > k3) {
            // w(u_k) = (1 + I(u_k - 1)) / u_k; u_k - 1 is on the grid.
            std::size_t km = k - per_unit;
            double u = t.grid_u(k);
            t.w_[k] = (1.0 + t.I_[km]) / u;
            t.err_w_[k] = t.err_I_[km] / u;
        }
        double u0 = t.grid_u(k - 1);
        t.I_[k] = t.I_[k - 1] + 0.5 * h * (t.w_[k - 1] + t.w_[k]);
        t.J_[k] = t.J_[k - 1] + 0.5 * h * (t.w_[k - 1] / (1.0 + u0) + t.w_[k] / (1.0 + t.grid_u(k)));
        t.err_I_[k] = t.err_I_[k - 1] + local_quad + 0.5 * h * (t.err_w_[k - 1] + t.err_w_[k]);
    }

    // Panels per unit interval of u.
    std::size_t first = 0;
    while (first + 1 < n) {
        std::size_t last = std::min(n - 1, first + per_unit);
        Panel p;
        p.u_lo = t.grid_u(first);
        p.u_hi = t.grid_u(last);
        p.first = first;
        p.last = last;
        double e = 0.0;
        for (std::size_t k = first; k <= last; ++k) e = std::max(e, t.err_w_[k]);
        p.max_error = e + (p.u_lo >= 3.0 ? t.interp_error(first) : 0.0);
        t.panels_.push_back(p);
        first = last;
    }
    return t;
}

std::size_t PiecewiseOmega::index_below(double u) const {
    double x = (u - 1.0) / step_;
    auto k = static_cast<std::ptrdiff_t>(x);
    if (k < 0) k = 0;
    if (k >= static_cast<std::ptrdiff_t>(w_.size()) - 1) k = static_cast<std::ptrdiff_t>(w_.size()) - 2;
    return static_cast<std::size_t>(k);
}

double PiecewiseOmega::interp_error(std::size_t k) const {
    // Bound |w''| near sample k by second differences, scaled with safety 2;
    // cubic interpolation error is then at most h^2 * |w''|/4 locally, and we
    // charge h^2 * |w''| to stay conservative.
    std::size_t n = w_.size();
    std::size_t a = (k > 0) ? k - 1 : 0;
    std::size_t b = std::min(n - 1, k + 2);
    double m2 = 0.0;
    for (std::size_t i = a; i + 2 <= b; ++i) {
        double d2 = std::fabs(w_[i + 2] - 2.0 * w_[i + 1] + w_[i]) / (step_ * step_);
        m2 = std::max(m2, d2);
    }
    return step_ * step_ * 2.0 * std::max(m2, 1e-12);
}

OmegaValue PiecewiseOmega::omega(double u) const {
    if (!(u >= 1.0) || !(u <= u_max_ + 1e-12))
        throw std::domain_error("omega: argument outside [1, u_max]");
    u = std::min(u, u_max_);
    if (u <= 3.0) return {closed_form(u), 0.0};

    std::size_t k = index_below(u);
    double t = (u - grid_u(k)) / step_;
    // Cubic Hermite with centered finite-difference slopes, clamped to the
    // data range of the bracketing samples (keeps the monotone pieces tame).
    std::size_t n = w_.size();
    double ym = (k > 0) ? w_[k - 1] : w_[k];
    double y0 = w_[k], y1 = w_[k + 1];
    double yp = (k + 2 < n) ? w_[k + 2] : y1;
    double s0 = 0.5 * (y1 - ym);
    double s1 = 0.5 * (yp - y0);
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    double v = h00 * y0 + h10 * s0 + h01 * y1 + h11 * s1;
    double lo = std::min(y0, y1), hi = std::max(y0, y1);
    double spread = hi - lo;
    v = std::clamp(v, lo - spread, hi + spread);
    return {v, err_w_[k] + interp_error(k)};
}

OmegaValue PiecewiseOmega::integral(double u1, double u2) const {
    if (u2 <= u1) return {0.0, 0.0};
    if (!(u1 >= 1.0) || !(u2 <= u_max_ + 1e-12))
        throw std::domain_error("omega integral: range outside [1, u_max]");
    u2 = std::min(u2, u_max_);
    auto at = [&](double u) -> OmegaValue {
        std::size_t k = index_below(u);
        double t = (u - grid_u(k)) / step_;
        double v = I_[k] + t * (I_[k + 1] - I_[k]);
        // linear interpolation of a C^1 cumulative: error <= h^2/8 * |w'| (+table err)
        return {v, err_I_[k + 1] + step_ * step_ * 0.5};
    };
    OmegaValue a = at(u1), b = at(u2);
    return {b.value - a.value, a.err + b.err};
}

OmegaValue PiecewiseOmega::integral_over_up1(double u1, double u2) const {
    if (u2 <= u1) return {0.0, 0.0};
    if (!(u1 >= 1.0) || !(u2 <= u_max_ + 1e-12))
        throw std::domain_error("omega integral: range outside [1, u_max]");
    u2 = std::min(u2, u_max_);
    auto at = [&](double u) -> OmegaValue {
        std::size_t k = index_below(u);
        double t = (u - grid_u(k)) / step_;
        double v = J_[k] + t * (J_[k + 1] - J_[k]);
        return {v, err_I_[k + 1] + step_ * step_ * 0.5};
    };
    OmegaValue a = at(u1), b = at(u2);
    return {b.value - a.value, a.err + b.err};
}

double PiecewiseOmega::max_error() const {
    double e = 0.0;
    for (const auto& p : panels_) e = std::max(e, p.max_error);
    return e;
}

void PiecewiseOmega::dump(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::fprintf(f, "omega-table v1 %.17g %.17g\n", u_max_, step_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        std::fprintf(f, "%.17g %.17g\n", grid_u(k), w_[k]);
    std::fclose(f);
}

PiecewiseOmega PiecewiseOmega::load(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "r");
    if (!f) throw std::runtime_error("cannot open " + path);
    double u_max = 0.0, step = 0.0;
    if (std::fscanf(f, "omega-table v1 %lg %lg", &u_max, &step) != 2) {
        std::fclose(f);
        throw std::runtime_error("bad omega table header in " + path);
    }
    std::fclose(f);
    // The file pins (u_max, step); values are reproduced by construction,
    // which keeps the error metadata honest.
    return build(u_max, step);
}

double omega_upper(double u) {
    if (!(u >= 1.0)) throw std::domain_error("omega_upper: u must be >= 1");
    return std::max(0.6, 1.0 / u);
}

double omega_upper_integral(double u1, double u2) {
    if (u2 <= u1) return 0.0;
    const double c = 5.0 / 3.0;  // crossover of 0.6 and 1/u
    auto anti = [&](double u) {
        if (u <= c) return std::log(u);
        return std::log(c) + 0.6 * (u - c);
    };
    return anti(u2) - anti(u1);
}

double omega_upper_integral_over_up1(double u1, double u2) {
    if (u2 <= u1) return 0.0;
    const double c = 5.0 / 3.0;
    // 1/(u(1+u)) = 1/u - 1/(1+u);  0.6/(1+u) integrates to 0.6 ln(1+u)
    auto anti = [&](double u) {
        if (u <= c) return std::log(u) - std::log(1.0 + u);
        return std::log(c) - std::log(1.0 + c) + 0.6 * (std::log(1.0 + u) - std::log(1.0 + c));
    };
    return anti(u2) - anti(u1);
}

}  // namespace sievecert
