#include "sievecert/exponents.hpp"
#include "sievecert/expr.hpp"

#include <doctest.h>

#include <random>

using namespace sievecert;

TEST_CASE("point evaluation basics") {
    Point p;
    CHECK(Expr(0.23).eval(p) == 0.23);

    p.set(Var::a, 0.5);
    Expr sym = min(ea(), Expr(1.0) - ea());
    CHECK(sym.eval(p) == doctest::Approx(0.5));

    CHECK_THROWS_AS(esigma().eval(p), std::invalid_argument);
    CHECK_THROWS_AS((ea() / Expr(0.0)).eval(p), std::domain_error);
}

TEST_CASE("the E(a,sigma) hand evaluation") {
    // at (a, sigma) = (0.6, 0.8) with eps1 = 0: B = max{0.2, 0.23} = 0.23,
    // E = min{2.03/2.49, 1.34/1.57}
    Point p;
    p.set(Var::a, 0.6);
    p.set(Var::sigma, 0.8);
    Expr B = fn::B_max();
    CHECK(B.eval(p) == doctest::Approx(0.23));
    double e = fn::E_of(B).eval(p);
    CHECK(e == doctest::Approx(2.03 / 2.49).epsilon(1e-12));
    CHECK(e == doctest::Approx(0.81526).epsilon(1e-4));
}

TEST_CASE("interval evaluation: identity, dependency, monotone pieces") {
    Box b;
    b.set(Var::a, Interval(0.53, 0.545));
    Interval id = ea().eval(b);
    CHECK(id.lo == 0.53);
    CHECK(id.hi == 0.545);

    Box b2;
    b2.set(Var::a, Interval(0.0, 1.0));
    Interval dep = (ea() - ea()).eval(b2);
    CHECK(dep.contains(0.0));
    CHECK(dep.lo <= -0.999);  // dependency is not tracked
    CHECK(dep.hi >= 0.999);

    // max(0.6, 1/u) on u in [2,4] is exactly 0.6 up to outward rounding
    Box b3;
    b3.set(Var::ell, Interval(2.0, 4.0));
    Interval m = max(Expr(0.6), Expr(1.0) / eell()).eval(b3);
    CHECK(m.lo == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(m.hi == doctest::Approx(0.6).epsilon(1e-12));
}

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
    auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
    if (depth == 0 || u() < 0.3) {
        if (u() < 0.5) return Expr(u() * 4.0 - 2.0);
        return u() < 0.5 ? ea() : esigma();
    }
    Expr l = random_expr(rng, depth - 1);
    Expr r = random_expr(rng, depth - 1);
    switch (rng() % 5) {
        case 0: return l + r;
        case 1: return l - r;
        case 2: return l * r;
        case 3: return min(l, r);
        default: return max(l, r);
    }
}

}  // namespace

TEST_CASE("soundness: sampled points land inside the interval extension") {
    std::mt19937_64 rng(2024);
    auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
    for (int it = 0; it < 3000; ++it) {
        Expr e = random_expr(rng, 5);
        double alo = u(), ahi = alo + u();
        double slo = u(), shi = slo + u();
        Box box;
        box.set(Var::a, Interval(alo, ahi));
        box.set(Var::sigma, Interval(slo, shi));
        Interval enc = e.eval(box);
        for (int s = 0; s < 12; ++s) {
            Point p;
            p.set(Var::a, alo + (ahi - alo) * u());
            p.set(Var::sigma, slo + (shi - slo) * u());
            CHECK(enc.contains(e.eval(p)));
        }
    }
}

TEST_CASE("debug dump renders parenthesized infix") {
    Expr e = min(ea(), Expr(1.0) - esigma());
    CHECK(e.to_string() == "min(a, (1 - sigma))");
}
