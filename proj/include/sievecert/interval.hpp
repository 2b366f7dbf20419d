#pragma once

// Closed interval arithmetic with outward rounding by one ulp.
// Division by an interval touching zero yields a half-infinite (or whole-line)
// enclosure instead of an error; callers that need a finite result check
// is_finite() and split their box.

#include <algorithm>
#include <cmath>
#include <limits>

namespace sievecert {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}

    static Interval whole() {
        double inf = std::numeric_limits<double>::infinity();
        return Interval(-inf, inf);
    }

    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

namespace detail {
inline double down(double x) {
    if (!std::isfinite(x)) return x;
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    if (!std::isfinite(x)) return x;
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

inline Interval operator+(Interval a, Interval b) {
    return Interval(detail::down(a.lo + b.lo), detail::up(a.hi + b.hi));
}
inline Interval operator-(Interval a, Interval b) {
    return Interval(detail::down(a.lo - b.hi), detail::up(a.hi - b.lo));
}
inline Interval operator-(Interval a) { return Interval(-a.hi, -a.lo); }

inline Interval operator*(Interval a, Interval b) {
    double c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    // 0 * inf from degenerate operands: treat as 0
    auto fix = [](double v) { return std::isnan(v) ? 0.0 : v; };
    c1 = fix(c1); c2 = fix(c2); c3 = fix(c3); c4 = fix(c4);
    return Interval(detail::down(std::min(std::min(c1, c2), std::min(c3, c4))),
                    detail::up(std::max(std::max(c1, c2), std::max(c3, c4))));
}

inline Interval operator/(Interval a, Interval b) {
    double inf = std::numeric_limits<double>::infinity();
    if (b.lo > 0.0 || b.hi < 0.0) {
        double c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
        return Interval(detail::down(std::min(std::min(c1, c2), std::min(c3, c4))),
                        detail::up(std::max(std::max(c1, c2), std::max(c3, c4))));
    }
    // denominator touches zero: extended semantics
    if (a.lo > 0.0) {
        if (b.lo == 0.0 && b.hi > 0.0) return Interval(detail::down(a.lo / b.hi), inf);
        if (b.hi == 0.0 && b.lo < 0.0) return Interval(-inf, detail::up(-(a.lo / -b.lo)));
    }
    if (a.hi < 0.0) {
        if (b.lo == 0.0 && b.hi > 0.0) return Interval(-inf, detail::up(a.hi / b.hi));
        if (b.hi == 0.0 && b.lo < 0.0) return Interval(detail::down(a.hi / b.lo), inf);
    }
    return Interval::whole();
}

inline Interval min(Interval a, Interval b) {
    return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}
inline Interval max(Interval a, Interval b) {
    return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

}  // namespace sievecert
