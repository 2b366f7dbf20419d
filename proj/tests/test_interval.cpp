#include "sievecert/interval.hpp"

#include <doctest.h>

#include <random>

using namespace sievecert;

TEST_CASE("basic arithmetic encloses endpoints") {
    Interval a(1.0, 2.0), b(-0.5, 0.25);
    Interval s = a + b;
    CHECK(s.lo <= 0.5);
    CHECK(s.hi >= 2.25);
    Interval p = a * b;
    CHECK(p.lo <= -1.0);
    CHECK(p.hi >= 0.5);
    Interval d = a / Interval(2.0, 4.0);
    CHECK(d.lo <= 0.25);
    CHECK(d.hi >= 1.0);
}

TEST_CASE("division by a zero-touching interval is half-infinite") {
    Interval num(1.0, 2.0);
    Interval d1 = num / Interval(0.0, 0.5);
    CHECK(d1.lo <= 2.0);
    CHECK(d1.lo > 0.0);
    CHECK(std::isinf(d1.hi));
    Interval d2 = num / Interval(-0.5, 0.0);
    CHECK(std::isinf(d2.lo));
    CHECK(d2.hi < 0.0);
    Interval d3 = num / Interval(-0.5, 0.5);
    CHECK(!d3.is_finite());
    Interval d4 = Interval(-1.0, 1.0) / Interval(0.0, 0.5);
    CHECK(!d4.is_finite());
}

TEST_CASE("random sample points stay inside interval results") {
    std::mt19937_64 rng(7);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    };
    for (int it = 0; it < 20000; ++it) {
        double alo = u(-3, 3), ahi = alo + u(0, 2);
        double blo = u(-3, 3), bhi = blo + u(0, 2);
        Interval A(alo, ahi), B(blo, bhi);
        double x = u(alo, ahi), y = u(blo, bhi);
        CHECK((A + B).contains(x + y));
        CHECK((A - B).contains(x - y));
        CHECK((A * B).contains(x * y));
        if (!B.contains_zero()) CHECK((A / B).contains(x / y));
        CHECK(min(A, B).contains(std::min(x, y)));
        CHECK(max(A, B).contains(std::max(x, y)));
    }
}
