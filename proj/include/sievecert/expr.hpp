#pragma once

// Small expression language over named real variables. Every threshold
// function and every integration limit in the catalogs is built from these
// trees; evaluation is available pointwise (round-to-nearest) and over boxes
// (natural interval extension, outward rounding).

#include "sievecert/interval.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>

namespace sievecert {

enum class Var : int {
    a = 0, sigma, ell, beta, gamma,
    alpha1, alpha2, alpha3, alpha4, alpha5, alpha6,
    nu, eps1,
    count_
};

constexpr int kVarCount = static_cast<int>(Var::count_);

const char* var_name(Var v);

// Values of the free variables; nu and eps1 are global constants bound here.
struct Point {
    std::array<double, kVarCount> vals{};
    std::array<bool, kVarCount> bound{};

    Point() {
        set(Var::nu, 0.23);
        set(Var::eps1, 0.0);
    }
    explicit Point(double eps1) : Point() { set(Var::eps1, eps1); }

    void set(Var v, double x) {
        vals[static_cast<int>(v)] = x;
        bound[static_cast<int>(v)] = true;
    }
    double get(Var v) const {
        if (!bound[static_cast<int>(v)])
            throw std::invalid_argument(std::string("unbound variable ") + var_name(v));
        return vals[static_cast<int>(v)];
    }
};

struct Box {
    std::array<Interval, kVarCount> iv{};
    std::array<bool, kVarCount> bound{};

    Box() {
        set(Var::nu, Interval(0.23));
        set(Var::eps1, Interval(0.0));
    }
    explicit Box(double eps1) : Box() { set(Var::eps1, Interval(eps1)); }

    void set(Var v, Interval x) {
        iv[static_cast<int>(v)] = x;
        bound[static_cast<int>(v)] = true;
    }
    Interval get(Var v) const {
        if (!bound[static_cast<int>(v)])
            throw std::invalid_argument(std::string("variable not covered by box: ") + var_name(v));
        return iv[static_cast<int>(v)];
    }
    Point midpoint() const {
        Point p;
        for (int i = 0; i < kVarCount; ++i)
            if (bound[i]) p.set(static_cast<Var>(i), iv[i].mid());
        return p;
    }
};

class Expr {
  public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Min, Max, Neg };

    Expr() : Expr(0.0) {}
    Expr(double c);
    Expr(Var v);

    static Expr constant(double c) { return Expr(c); }
    static Expr variable(Var v) { return Expr(v); }

    double eval(const Point& p) const;
    // Natural interval extension. Division by a zero-straddling interval
    // produces half-infinite bounds (see interval.hpp); eval_checked below
    // turns those into errors per the module contract.
    Interval eval(const Box& b) const;
    Interval eval_checked(const Box& b) const;

    std::string to_string() const;

    friend Expr operator+(Expr, Expr);
    friend Expr operator-(Expr, Expr);
    friend Expr operator*(Expr, Expr);
    friend Expr operator/(Expr, Expr);
    friend Expr operator-(Expr);
    friend Expr min(Expr, Expr);
    friend Expr max(Expr, Expr);

    struct Node;  // defined in expr.cpp

  private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Kind k, Expr l, Expr r);
    std::shared_ptr<const Node> node_;
};

inline Expr min(Expr a, Expr b, Expr c) { return min(min(a, b), c); }
inline Expr max(Expr a, Expr b, Expr c) { return max(max(a, b), c); }
inline Expr min(Expr a, Expr b, Expr c, Expr d) { return min(min(a, b), min(c, d)); }

// Shorthands used throughout the catalogs.
inline Expr ea() { return Expr(Var::a); }
inline Expr esigma() { return Expr(Var::sigma); }
inline Expr eell() { return Expr(Var::ell); }
inline Expr egamma() { return Expr(Var::gamma); }
inline Expr enu() { return Expr(Var::nu); }
inline Expr eeps1() { return Expr(Var::eps1); }
inline Expr ealpha(int i) {
    return Expr(static_cast<Var>(static_cast<int>(Var::alpha1) + (i - 1)));
}

}  // namespace sievecert
