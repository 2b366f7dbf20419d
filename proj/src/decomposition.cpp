#include "sievecert/decomposition.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace sievecert {

namespace {

Expr a1() { return ealpha(1); }
Expr a2() { return ealpha(2); }
Expr a3() { return ealpha(3); }
Expr a4() { return ealpha(4); }
Expr a5() { return ealpha(5); }

Expr sum3() { return a1() + a2() + a3(); }

// (1 - a1 - a2 - a3)/2, the standard cap of the fourth variable.
Expr half_rest3() { return (Expr(1.0) - sum3()) / Expr(2.0); }
Expr half1() { return (Expr(1.0) - a1()) / Expr(2.0); }

IntegralSpec omega2(Expr lo1, Expr hi1, Expr lo2, Expr hi2) {
    IntegralSpec s;
    s.vars = 2;
    s.kernel = KernelKind::OmegaSq;
    s.limits = {{lo1, hi1}, {lo2, hi2}};
    return s;
}

IntegralSpec omega4(Expr lo1, Expr hi1, Expr lo2, Expr hi2, Expr lo3, Expr hi3, Expr lo4,
                    Expr hi4) {
    IntegralSpec s;
    s.vars = 4;
    s.kernel = KernelKind::OmegaSq;
    s.limits = {{lo1, hi1}, {lo2, hi2}, {lo3, hi3}, {lo4, hi4}};
    return s;
}

IntegralSpec omega6(Expr lo1, Expr hi1, Expr lo2, Expr hi2, double rest_lo, double rest_hi,
                    double pref, double lin_denom) {
    IntegralSpec s;
    s.vars = 6;
    s.kernel = KernelKind::OmegaLin;
    s.lin_denom = lin_denom;
    s.prefactor = pref;
    s.limits = {{lo1, hi1}, {lo2, hi2}};
    for (int i = 0; i < 4; ++i) s.limits.push_back({Expr(rest_lo), Expr(rest_hi)});
    return s;
}

ArithTerm logterm(std::vector<std::pair<double, int>> factors, double denom) {
    ArithTerm t;
    t.denom = denom;
    for (auto [r, p] : factors) t.factors.push_back({r, p});
    return t;
}

ThetaSpec theta(int idx, std::vector<IntegralSpec> specs, double bound, std::string case_id,
                std::string bound_text) {
    ThetaSpec t;
    t.index = idx;
    t.integrals = std::move(specs);
    t.claimed_bound = bound;
    t.anchor = "harman/" + case_id + "/theta-" + std::to_string(idx);
    t.bound_text = std::move(bound_text);
    return t;
}

ThetaSpec theta_arith(int idx, std::vector<ArithTerm> terms, double bound, std::string case_id,
                      std::string bound_text) {
    ThetaSpec t;
    t.index = idx;
    t.arith = std::move(terms);
    t.claimed_bound = bound;
    t.anchor = "harman/" + case_id + "/theta-" + std::to_string(idx);
    t.bound_text = std::move(bound_text);
    return t;
}

const double F6 = 720.0, F5 = 120.0, F42 = 48.0;

DecompositionCase case_le_053() {
    DecompositionCase c;
    c.id = "a<=0.53";
    c.a_lo = 0.475;
    c.a_hi = 0.53;
    c.beta = 0.07;
    c.claimed_total = 0.938;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1,
        {omega2(Expr(0.36), Expr(0.5) + e1, (Expr(0.71) - a1()) / Expr(2.0), Expr(0.64) - a1()),
         omega2(Expr(0.36), Expr(0.5) + e1, Expr(0.71) - a1(), half1())},
        0.513, id, "0.513"));
    c.thetas.push_back(theta(
        2,
        {omega4(Expr(0.36), Expr(0.5) + e1, Expr(0.07), min(a1(), (Expr(0.71) - a1()) / Expr(2.0)),
                Expr(0.07), min(a2(), Expr(0.64) - a1() - a2()), Expr(0.07), a3())},
        0.079, id, "0.079"));
    c.thetas.push_back(
        theta(3, {omega2(Expr(0.07), Expr(0.29), (Expr(0.71) - a1()) / Expr(2.0), a1())}, 0.08, id,
              "0.08"));
    c.thetas.push_back(theta(
        4,
        {omega4(Expr(0.22), Expr(0.29), Expr(0.07), min(a1(), (Expr(0.71) - a1()) / Expr(2.0)),
                Expr(0.07), a2(),
                max(Expr(0.36) - a1(), (Expr(0.71) - sum3()) / Expr(2.0)), a3())},
        0.112, id, "0.112"));
    c.thetas.push_back(theta(
        5,
        {omega4(Expr(0.07), Expr(0.22), Expr(0.07), min(a1(), (Expr(0.71) - a1()) / Expr(2.0)),
                Expr(0.07), a2(), max(Expr(0.07), (Expr(0.71) - sum3()) / Expr(2.0)), a3())},
        0.063, id, "0.063"));
    c.thetas.push_back(theta(
        6, {omega6(Expr(0.18), Expr(0.29), Expr(0.145), Expr(0.29), 0.07, 0.145, 1.0 / 24.0, 0.07)},
        0.056, id, "0.056"));
    c.thetas.push_back(theta(
        7, {omega6(Expr(0.07), Expr(0.29), Expr(0.07), Expr(0.145), 0.07, 0.145, 1.0 / 120.0, 0.07)},
        0.035, id, "0.035"));
    return c;
}

DecompositionCase case_053_0545() {
    DecompositionCase c;
    c.id = "0.53-0.545";
    c.a_lo = 0.53;
    c.a_hi = 0.545;
    c.beta = 0.08;
    c.claimed_total = 0.887;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1,
        {omega2(Expr(0.474), Expr(0.5) + e1,
                min(Expr(0.595) - a1(), (Expr(0.715) - a1()) / Expr(2.0)), half1())},
        0.185, id, "0.185"));
    c.thetas.push_back(theta(
        2,
        {omega4(Expr(0.474), Expr(0.5) + e1, Expr(0.09),
                min(Expr(0.595) - a1(), (Expr(0.715) - a1()) / Expr(2.0)), Expr(0.09), a2(),
                Expr(0.09), min(a3(), half_rest3()))},
        0.001, id, "0.001"));
    c.thetas.push_back(theta(
        3,
        {omega2(Expr(0.375), Expr(0.427), Expr(0.573) - a1(), Expr(0.655) - a1()),
         omega2(Expr(0.375), Expr(0.427), Expr(0.685) - a1(), half1())},
        0.175, id, "0.175"));
    c.thetas.push_back(theta(
        4,
        {omega2(Expr(0.375), Expr(0.427),
                max(Expr(0.08), Expr(0.474) - a1(), (Expr(0.655) - a1()) / Expr(2.0)),
                Expr(0.526) - a1())},
        0.01, id, "0.01"));
    c.thetas.push_back(theta(
        5,
        {omega4(Expr(0.375), Expr(0.427), max(Expr(0.08), Expr(0.474) - a1()),
                min(Expr(0.526) - a1(), (Expr(0.655) - a1()) / Expr(2.0)), Expr(0.08), a2(),
                Expr(0.08), min(a3(), half_rest3()))},
        0.013, id, "0.013"));
    c.thetas.push_back(theta(
        6,
        {omega2(Expr(0.285), Expr(0.315), Expr(0.595) - a1(), min(a1(), half1())),
         omega2(Expr(0.345), Expr(0.375), Expr(0.595) - a1(), min(a1(), half1()))},
        0.08, id, "0.08"));
    c.thetas.push_back(theta(
        7,
        {omega2(Expr(0.285), Expr(0.315),
                max(Expr(0.485) - a1(), (Expr(0.655) - a1()) / Expr(2.0)), Expr(0.515) - a1()),
         omega2(Expr(0.345), Expr(0.375),
                max(Expr(0.485) - a1(), (Expr(0.655) - a1()) / Expr(2.0)), Expr(0.515) - a1())},
        0.062, id, "0.062"));
    c.thetas.push_back(theta(
        8,
        {omega4(Expr(0.345), Expr(0.375), Expr(0.485) - a1(), (Expr(0.655) - a1()) / Expr(2.0),
                Expr(0.08), a2(), Expr(0.08), min(a3(), half_rest3()))},
        0.012, id, "0.012"));
    c.thetas.push_back(theta(
        9,
        {omega4(Expr(0.285), Expr(0.315), Expr(0.08), Expr(0.405) - a1(), Expr(0.08), a2(),
                Expr(0.08), min(a3(), half_rest3()))},
        0.003, id, "0.003"));
    c.thetas.push_back(theta(
        10,
        {omega2(Expr(0.655 / 3.0), Expr(0.285), (Expr(0.655) - a1()) / Expr(2.0),
                min(a1(), Expr(0.526) - a1()))},
        0.01, id, "0.01"));
    c.thetas.push_back(theta(
        11,
        {omega4(Expr(0.08), Expr(0.285), Expr(0.08), min(a1(), (Expr(0.655) - a1()) / Expr(2.0)),
                Expr(0.08), a2(), max(Expr(0.08), (Expr(0.655) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.296, id, "0.296"));
    c.thetas.push_back(theta_arith(
        12,
        {logterm({{0.17 / 0.08, 6}}, 0.08 * F6),
         logterm({{0.17 / 0.08, 5}, {0.285 / 0.17, 1}}, 0.08 * F5),
         logterm({{0.17 / 0.08, 4}, {0.285 / 0.17, 2}}, 0.08 * F42)},
        0.04, id, "0.04"));
    return c;
}

DecompositionCase case_0545_057() {
    DecompositionCase c;
    c.id = "0.545-0.57";
    c.a_lo = 0.545;
    c.a_hi = 0.57;
    c.beta = 0.075;
    c.claimed_total = 0.867;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1, {omega2(Expr(0.475), Expr(0.5) + e1, Expr(0.6) - a1(), half1())}, 0.166, id, "0.166"));
    c.thetas.push_back(theta(
        2, {omega2(Expr(0.3), Expr(0.4), Expr(0.6) - a1(), min(a1(), half1()))}, 0.187, id,
        "0.187"));
    c.thetas.push_back(theta(
        3,
        {omega2(Expr(0.475 / 2.0), Expr(0.385), max(Expr(0.14), Expr(0.475) - a1()),
                min(a1(), Expr(0.525) - a1()))},
        0.302, id, "0.302"));
    c.thetas.push_back(theta(
        4,
        {omega4(Expr(0.335), Expr(0.4), Expr(0.475) - a1(),
                min(Expr(0.14), Expr(0.525) - a1()), Expr(0.075), a2(), Expr(0.075),
                min(a3(), half_rest3()))},
        0.032, id, "0.032"));
    c.thetas.push_back(theta(
        5,
        {omega4(Expr(0.075), Expr(0.325), Expr(0.075), min(a1(), Expr(0.4) - a1()), Expr(0.075),
                a2(),
                max((Expr(0.615) - sum3()) / Expr(2.0), Expr(0.475) - a1() - a2()),
                min(a3(), half_rest3()))},
        0.07, id, "0.07"));
    c.thetas.push_back(theta(
        6,
        {omega4(Expr(0.075), Expr(0.325), Expr(0.075), min(a1(), Expr(0.4) - a1()), Expr(0.075),
                a2(), max(Expr(0.075), (Expr(0.615) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3(), Expr(0.4) - a1() - a2()))},
        0.01, id, "0.01"));
    c.thetas.push_back(theta_arith(
        7,
        {logterm({{0.155 / 0.075, 6}}, 0.075 * F6),
         logterm({{0.155 / 0.075, 5}, {0.4 / 0.155, 1}}, 0.075 * F5),
         logterm({{0.155 / 0.075, 4}, {0.4 / 0.155, 2}}, 0.075 * F42)},
        0.1, id, "0.1"));
    return c;
}

DecompositionCase case_057_059() {
    DecompositionCase c;
    c.id = "0.57-0.59";
    c.a_lo = 0.57;
    c.a_hi = 0.59;
    c.beta = 0.075;
    c.claimed_total = 0.9855;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1, {omega2(Expr(0.455), Expr(0.5) + e1, Expr(0.62) - a1(), half1())}, 0.2029, id,
        "0.2029"));
    c.thetas.push_back(theta(
        2,
        {omega2(Expr(0.455), Expr(0.475), (Expr(0.685) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.0099, id, "0.0099"));
    c.thetas.push_back(theta(
        3,
        {omega4(Expr(0.455), Expr(0.5) + e1, Expr(0.075),
                min(Expr(0.58) - a1(), (Expr(0.685) - a1()) / Expr(2.0)), Expr(0.075), a2(),
                Expr(0.075), min(a3(), half_rest3()))},
        0.0038, id, "0.0038"));
    c.thetas.push_back(theta(
        4, {omega2(Expr(0.42), Expr(0.455), Expr(0.685) - a1(), half1())}, 0.0345, id, "0.0345"));
    c.thetas.push_back(theta(
        5,
        {omega2(Expr(0.42), Expr(0.455), (Expr(0.685) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.0502, id, "0.0502"));
    c.thetas.push_back(theta(
        6,
        {omega4(Expr(0.42), Expr(0.455), Expr(0.105), (Expr(0.685) - a1()) / Expr(2.0),
                Expr(0.105), a2(), Expr(0.105), min(a3(), half_rest3()))},
        0.0004, id, "0.0004"));
    c.thetas.push_back(theta(
        7, {omega2(Expr(0.315), Expr(0.38), Expr(0.62) - a1(), min(a1(), half1()))}, 0.0889, id,
        "0.0889"));
    c.thetas.push_back(theta(
        8,
        {omega2(Expr(0.315), Expr(0.38), max(Expr(0.145), (Expr(0.62) - a1()) / Expr(2.0)),
                Expr(0.545) - a1())},
        0.1993, id, "0.1993"));
    c.thetas.push_back(theta(
        9,
        {omega4(Expr(0.315), Expr(0.38), Expr(0.455) - a1(),
                max(Expr(0.145), (Expr(0.62) - a1()) / Expr(2.0)), Expr(0.455) - a1(), a2(),
                Expr(0.455) - a1(), min(a3(), half_rest3()))},
        0.0114, id, "0.0114"));
    c.thetas.push_back(theta(
        10, {omega2(Expr(0.31), Expr(0.315), Expr(0.62) - a1(), a1())}, 0.0007, id, "0.0007"));
    c.thetas.push_back(theta(
        11,
        {omega2(Expr(0.29), Expr(0.315), (Expr(0.62) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.1343, id, "0.1343"));
    c.thetas.push_back(theta(
        12,
        {omega4(Expr(0.29), Expr(0.315), Expr(0.42) - a1(), (Expr(0.62) - a1()) / Expr(2.0),
                Expr(0.42) - a1(), a2(), Expr(0.42) - a1(), min(a3(), half_rest3()))},
        0.0020, id, "0.0020"));
    c.thetas.push_back(theta(
        13,
        {omega4(Expr(0.29), Expr(0.305), Expr(0.075), (Expr(0.62) - a1()) / Expr(2.0), Expr(0.075),
                a2(), Expr(0.075), min(Expr(0.38) - a1(), a3(), half_rest3()))},
        0.0092, id, "0.0092"));
    c.thetas.push_back(theta(
        14,
        {omega2(Expr(0.075), Expr(0.29), min(Expr(0.2275), (Expr(0.685) - a1()) / Expr(2.0)),
                a1())},
        0.1145, id, "0.1145"));
    c.thetas.push_back(theta(
        15,
        {omega4(Expr(0.075), Expr(0.29), Expr(0.455) - a1(),
                min(a1(), (Expr(0.685) - a1()) / Expr(2.0)), Expr(0.075), Expr(0.38) - a1(),
                max(Expr(0.075), (Expr(0.62) - sum3()) / Expr(2.0)), min(a3(), half_rest3()))},
        0.0116, id, "0.0116"));
    c.thetas.push_back(theta(
        16,
        {omega4(Expr(0.075), Expr(0.29), Expr(0.455) - a1(),
                min(a1(), (Expr(0.685) - a1()) / Expr(2.0)), Expr(0.42) - a1(), a2(),
                max(Expr(0.075), (Expr(0.62) - sum3()) / Expr(2.0)),
                min(a3(), Expr(0.38) - a1(), half_rest3()))},
        0.0129, id, "0.0129"));
    c.thetas.push_back(theta(
        17,
        {omega4(Expr(0.075), Expr(0.29), Expr(0.455) - a1(),
                min(a1(), (Expr(0.685) - a1()) / Expr(2.0)), Expr(0.42) - a1(), a2(),
                max(Expr(0.42) - a1(), (Expr(0.62) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0027, id, "0.0027"));
    c.thetas.push_back(theta(
        18,
        {omega4(Expr(0.105), Expr(0.29), Expr(0.42) - a1(), min(a1(), Expr(0.455) - a1()),
                Expr(0.105), a2(), max(Expr(0.42) - a1(), (Expr(0.62) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0012, id, "0.0012"));
    c.thetas.push_back(theta(
        19,
        {omega4(Expr(0.075), Expr(0.29), max(Expr(0.075), Expr(0.315) - a1()),
                min(a1(), Expr(0.38) - a1()), Expr(0.075), a2(), Expr(0.455) - a2() - a3(),
                min(a3(), half_rest3()))},
        0.0048, id, "0.0048"));
    c.thetas.push_back(theta(
        20,
        {omega4(Expr(0.075), Expr(0.29), max(Expr(0.075), Expr(0.315) - a1()),
                min(a1(), Expr(0.38) - a1()), Expr(0.075), a2(), Expr(0.455) - a1() - a2(),
                min(a3(), Expr(0.38) - a2() - a3()))},
        0.0252, id, "0.0252"));
    c.thetas.push_back(theta(
        21,
        {omega4(Expr(0.075), Expr(0.29), Expr(0.075), min(a1(), Expr(0.315) - a1()), Expr(0.075),
                a2(), max(Expr(0.075), (Expr(0.62) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0127, id, "0.0127"));
    c.thetas.push_back(theta_arith(
        22,
        {logterm({{0.16 / 0.075, 6}}, 0.075 * F6),
         logterm({{0.16 / 0.075, 5}, {0.29 / 0.16, 1}}, 0.075 * F5),
         logterm({{0.16 / 0.075, 4}, {0.29 / 0.16, 2}}, 0.075 * F42)},
        0.0524, id, "0.0524"));
    return c;
}

DecompositionCase case_059_061() {
    DecompositionCase c;
    c.id = "0.59-0.61";
    c.a_lo = 0.59;
    c.a_hi = 0.61;
    c.beta = 0.07;
    c.claimed_total = 0.9937;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1, {omega2(Expr(0.435), Expr(0.5) + e1, Expr(0.635) - a1(), half1())}, 0.2182, id,
        "0.2182"));
    c.thetas.push_back(theta(
        2,
        {omega2(Expr(0.435), Expr(0.5) + e1, min(Expr(0.105), (Expr(0.67) - a1()) / Expr(2.0)),
                Expr(0.58) - a1())},
        0.0921, id, "0.0921"));
    c.thetas.push_back(theta(
        3,
        {omega4(Expr(0.435), Expr(0.5) + e1, Expr(0.07),
                min(Expr(0.58) - a1(), Expr(0.105), (Expr(0.67) - a1()) / Expr(2.0)), Expr(0.07),
                a2(), Expr(0.07), min(a3(), half_rest3()))},
        0.0083, id, "0.0083"));
    c.thetas.push_back(theta(
        4, {omega2(Expr(0.42), Expr(0.435), Expr(0.67) - a1(), half1())}, 0.0189, id, "0.0189"));
    c.thetas.push_back(theta(
        5, {omega2(Expr(0.42), Expr(0.435), (Expr(0.67) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.0356, id, "0.0356"));
    c.thetas.push_back(theta(
        6,
        {omega4(Expr(0.42), Expr(0.435), Expr(0.09), (Expr(0.67) - a1()) / Expr(2.0), Expr(0.09),
                a2(), Expr(0.09), min(a3(), half_rest3()))},
        0.001, id, "0.001"));
    c.thetas.push_back(theta(
        7, {omega2(Expr(0.33), Expr(0.365), Expr(0.635) - a1(), min(a1(), half1()))}, 0.0367, id,
        "0.0367"));
    c.thetas.push_back(theta(
        8, {omega2(Expr(0.33), Expr(0.365), Expr(0.1524), Expr(0.565) - a1())}, 0.1186, id,
        "0.1186"));
    c.thetas.push_back(theta(
        9,
        {omega4(Expr(0.33), Expr(0.365), Expr(0.435) - a1(), Expr(0.1524), Expr(0.435) - a1(),
                a2(), Expr(0.435) - a1(), min(a3(), half_rest3()))},
        0.0211, id, "0.0211"));
    c.thetas.push_back(theta(
        10, {omega2(Expr(0.305), Expr(0.33), Expr(0.635) - a1(), a1())}, 0.0043, id, "0.0043"));
    c.thetas.push_back(theta(
        11,
        {omega2(Expr(0.305), Expr(0.33), (Expr(0.635) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.1178, id, "0.1178"));
    c.thetas.push_back(theta(
        12,
        {omega4(Expr(0.305), Expr(0.33), Expr(0.42) - a1(), (Expr(0.635) - a1()) / Expr(2.0),
                Expr(0.42) - a1(), a2(), Expr(0.42) - a1(), min(a3(), half_rest3()))},
        0.0062, id, "0.0062"));
    c.thetas.push_back(theta(
        13, {omega2(Expr(0.2099), Expr(0.305), Expr(0.2099), min(a1(), Expr(0.58) - a1()))},
        0.1723, id, "0.1723"));
    c.thetas.push_back(theta(
        14,
        {omega4(Expr(0.21), Expr(0.305), Expr(0.42) - a1(), Expr(0.2099), Expr(0.42) - a1(), a2(),
                Expr(0.42) - a1(), min(a3(), half_rest3()))},
        0.0104, id, "0.0104"));
    c.thetas.push_back(theta(
        15,
        {omega4(Expr(0.21), Expr(0.305), Expr(0.42) - a1(), Expr(0.2099), Expr(0.42) - a1(), a2(),
                Expr(0.07), min(a3(), half_rest3(), Expr(0.365) - a1()))},
        0.0212, id, "0.0212"));
    c.thetas.push_back(theta(
        16,
        {omega4(Expr(0.21), Expr(0.305), Expr(0.42) - a1(), Expr(0.2099), Expr(0.07),
                min(a2(), Expr(0.365) - a1()), Expr(0.07), min(a3(), Expr(0.365) - a1()))},
        0.0397, id, "0.0397"));
    c.thetas.push_back(theta(
        17,
        {omega4(Expr(0.07), Expr(0.295), Expr(0.07), min(a1(), Expr(0.365) - a1()), Expr(0.07),
                a2(), max((Expr(0.635) - sum3()) / Expr(2.0), Expr(0.42) - a2() - a3()),
                min(a3(), half_rest3()))},
        0.0105, id, "0.0105"));
    c.thetas.push_back(theta(
        18,
        {omega4(Expr(0.07), Expr(0.295), Expr(0.07), min(a1(), Expr(0.365) - a1()), Expr(0.07),
                a2(), max(Expr(0.07), (Expr(0.635) - sum3()) / Expr(2.0)),
                min(a3(), Expr(0.365) - a2() - a3()))},
        0.023, id, "0.023"));
    c.thetas.push_back(theta_arith(
        19,
        {logterm({{0.2 / 0.07, 6}}, 0.07 * F6),
         logterm({{0.165 / 0.07, 5}, {0.23 / 0.2, 1}}, 0.07 * F5),
         logterm({{0.135 / 0.07, 5}, {0.295 / 0.23, 1}}, 0.07 * F5)},
        0.0379, id, "0.0379"));
    return c;
}

DecompositionCase case_gt_061() {
    DecompositionCase c;
    c.id = "a>0.61";
    c.a_lo = 0.61;
    c.a_hi = 0.77;
    c.beta = 0.065;
    c.claimed_total = 0.9921;
    const std::string& id = c.id;
    Expr e1 = eeps1();

    c.thetas.push_back(theta(
        1, {omega2(Expr(0.42), Expr(0.5) + e1, Expr(0.645) - a1(), half1())}, 0.2194, id,
        "0.2194"));
    c.thetas.push_back(theta(
        2, {omega2(Expr(0.42), Expr(0.48), Expr(0.1), Expr(0.58) - a1())}, 0.1769, id, "0.1769"));
    c.thetas.push_back(theta(
        3,
        {omega4(Expr(0.42), Expr(0.5), Expr(0.065), min(Expr(0.1), Expr(0.58) - a1()),
                Expr(0.065), a2(), Expr(0.065), min(a3(), half_rest3()))},
        0.0170, id, "0.0170"));
    c.thetas.push_back(theta(
        4, {omega2(Expr(0.3225), Expr(0.355), Expr(0.645) - a1(), min(a1(), half1()))}, 0.0191,
        id, "0.0191"));
    c.thetas.push_back(theta(
        5, {omega2(Expr(0.325), Expr(0.355), (Expr(0.645) - a1()) / Expr(2.0), Expr(0.58) - a1())},
        0.1266, id, "0.1266"));
    c.thetas.push_back(theta(
        6,
        {omega4(Expr(0.325), Expr(0.355), Expr(0.42) - a1(), (Expr(0.645) - a1()) / Expr(2.0),
                Expr(0.42) - a1(), a2(), Expr(0.42) - a1(), min(a3(), half_rest3()))},
        0.0282, id, "0.0282"));
    c.thetas.push_back(theta(
        7, {omega2(Expr(0.2099), Expr(0.325), Expr(0.2099), min(a1(), Expr(0.58) - a1()))},
        0.2102, id, "0.2102"));
    c.thetas.push_back(theta(
        8,
        {omega4(Expr(0.21), Expr(0.325), Expr(0.42) - a1(), Expr(0.21), Expr(0.065),
                min(a2(), Expr(0.355) - a1()),
                max(Expr(0.065), (Expr(0.42) - a2() - a3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0249, id, "0.0249"));
    c.thetas.push_back(theta(
        9,
        {omega4(Expr(0.21), Expr(0.325), Expr(0.42) - a1(), Expr(0.21), Expr(0.42) - a1(), a2(),
                max(Expr(0.065), (Expr(0.42) - a2() - a3()) / Expr(2.0)),
                min(a3(), Expr(0.355) - a1(), half_rest3()))},
        0.0191, id, "0.0191"));
    c.thetas.push_back(theta(
        10,
        {omega4(Expr(0.21), Expr(0.325), Expr(0.42) - a1(), Expr(0.21), Expr(0.42) - a1(), a2(),
                max(Expr(0.42) - a1(), (Expr(0.42) - a2() - a3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0280, id, "0.0280"));
    c.thetas.push_back(theta_arith(
        11,
        {logterm({{0.325 / 0.21, 1}, {0.145 / 0.065, 5}}, 0.065 * F5),
         logterm({{0.325 / 0.21, 1}, {0.18 / 0.145, 1}, {0.145 / 0.065, 4}}, 0.065 * 24.0),
         logterm({{0.325 / 0.21, 1}, {0.21 / 0.18, 1}, {0.11 / 0.065, 4}}, 0.065 * 24.0)},
        0.0471, id, "0.0471"));
    c.thetas.push_back(theta(
        12,
        {omega4(Expr(0.065), Expr(0.325), Expr(0.065), min(a1(), Expr(0.355) - a1()), Expr(0.065),
                a2(), max(Expr(0.065), (Expr(0.645) - sum3()) / Expr(2.0)),
                min(a3(), half_rest3()))},
        0.0180, id, "0.0180"));
    c.thetas.push_back(theta_arith(
        13,
        {logterm({{0.1775 / 0.065, 6}}, 0.065 * F6),
         logterm({{0.22 / 0.1775, 1}, {0.1775 / 0.065, 5}}, 0.065 * F5),
         logterm({{0.29 / 0.22, 1}, {0.135 / 0.065, 5}}, 0.065 * F5)},
        0.0576, id, "0.0576"));
    return c;
}

}  // namespace

std::vector<DecompositionCase> case_catalog() {
    return {case_le_053(), case_053_0545(), case_0545_057(),
            case_057_059(), case_059_061(), case_gt_061()};
}

CaseReport verify_case(const DecompositionCase& c, const PiecewiseOmega& omega, double tol,
                       double eps1, bool use_omega_upper, int jobs) {
    auto start = std::chrono::steady_clock::now();
    CaseReport rep;
    rep.id = c.id;
    rep.claimed_total = c.claimed_total;
    rep.thetas.resize(c.thetas.size());

    auto run_theta = [&](std::size_t i) {
        const ThetaSpec& t = c.thetas[i];
        ThetaReport r;
        r.index = t.index;
        r.bound = t.claimed_bound;
        r.anchor = t.anchor;
        IntegrateOptions opt;
        opt.eps1 = eps1;
        opt.use_omega_upper = use_omega_upper;
        for (const auto& spec : t.integrals) {
            IntegralResult ir = integrate(spec, omega, tol / std::max<std::size_t>(1, t.integrals.size()), opt);
            if (ir.budget_exhausted) throw std::runtime_error("evaluation budget exhausted");
            r.value += ir.value;
            r.err += ir.err;
            r.evaluations += ir.evaluations;
        }
        if (!t.arith.empty()) r.value += eval_arith_bound(t.arith);
        r.pass = (r.value + r.err) < r.bound;
        r.empty_domain = (r.value == 0.0 && t.arith.empty());
        rep.thetas[i] = r;
    };

    try {
        if (jobs > 1) {
            std::vector<std::future<void>> fs;
            std::size_t next = 0;
            while (next < c.thetas.size()) {
                fs.clear();
                for (int j = 0; j < jobs && next < c.thetas.size(); ++j, ++next)
                    fs.push_back(std::async(std::launch::async, run_theta, next));
                for (auto& f : fs) f.get();
            }
        } else {
            for (std::size_t i = 0; i < c.thetas.size(); ++i) run_theta(i);
        }
    } catch (const std::exception&) {
        rep.aborted = true;
    }

    rep.all_thetas_pass = !rep.aborted;
    for (const auto& r : rep.thetas) {
        rep.total_computed += r.value;
        rep.total_err += r.err;
        if (!r.pass) rep.all_thetas_pass = false;
    }
    rep.total_pass = !rep.aborted && (rep.total_computed + rep.total_err) < rep.claimed_total;
    rep.budget_pass = !rep.aborted && (rep.total_computed + rep.total_err) < kGammaBudget;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<CaseReport> verify_all(const PiecewiseOmega& omega, double tol, double eps1, int jobs) {
    std::vector<CaseReport> out;
    for (const auto& c : case_catalog()) out.push_back(verify_case(c, omega, tol, eps1, jobs));
    return out;
}

}  // namespace sievecert
