#pragma once

// Buchstab's function w(u), tabulated with certified error bounds.
//
// w(u) = 1/u on [1,2] and (1+ln(u-1))/u on [2,3] (closed forms); beyond 3 the
// table is built by forward integration of  u*w(u) = 1 + int_1^{u-1} w(s) ds.
// Two cumulative integrals are carried alongside because the innermost
// variable of every omega-kernel integral reduces to them:
//   I(v) = int_1^v w(s) ds        J(v) = int_1^v w(s)/(1+s) ds.

#include <cstddef>
#include <string>
#include <vector>

namespace sievecert {

struct OmegaValue {
    double value = 0.0;
    double err = 0.0;  // |value - w(u)| <= err
};

class PiecewiseOmega {
  public:
    struct Panel {
        double u_lo = 0.0;
        double u_hi = 0.0;
        std::size_t first = 0;   // index of the grid sample at u_lo
        std::size_t last = 0;    // index of the grid sample at u_hi
        double max_error = 0.0;  // certified bound over the panel (table + interpolation)
    };

    // step must divide 1 exactly enough that u-1 lands on the grid; it is
    // rounded to 1/round(1/step) internally.
    static PiecewiseOmega build(double u_max, double step);

    OmegaValue omega(double u) const;          // 1 <= u <= u_max, else throws
    OmegaValue integral(double u1, double u2) const;           // int w
    OmegaValue integral_over_up1(double u1, double u2) const;  // int w/(1+u)

    double u_max() const { return u_max_; }
    double step() const { return step_; }
    const std::vector<Panel>& panels() const { return panels_; }
    double max_error() const;  // largest per-panel certified error

    // Plain-text dump: "omega-table v1 u_max step" header then "u value" rows.
    void dump(const std::string& path) const;
    static PiecewiseOmega load(const std::string& path);

  private:
    double u_max_ = 0.0;
    double step_ = 0.0;
    std::vector<double> w_;        // samples on the uniform grid over [1, u_max]
    std::vector<double> I_;        // cumulative int_1^{u_k} w
    std::vector<double> J_;        // cumulative int_1^{u_k} w/(1+s)
    std::vector<double> err_w_;    // certified |w_[k] - w(u_k)|
    std::vector<double> err_I_;    // certified error of I_[k] (J_ shares it)
    std::vector<Panel> panels_;

    double grid_u(std::size_t k) const { return 1.0 + step_ * static_cast<double>(k); }
    std::size_t index_below(double u) const;
    double interp_error(std::size_t k) const;
};

// The crude bound w(u) <= max(0.6, 1/u) for u >= 1.
double omega_upper(double u);

// int_{u1}^{u2} max(0.6, 1/s) ds and the /(1+s) variant, in closed form;
// used when integrals are re-run with the crude bound in place of w.
double omega_upper_integral(double u1, double u2);
double omega_upper_integral_over_up1(double u1, double u2);

}  // namespace sievecert
