#include "sievecert/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace sievecert {

namespace {

Expr A() { return ea(); }
Expr S() { return esigma(); }
Expr G() { return egamma(); }
Expr NU() { return enu(); }
Expr E1() { return eeps1(); }

// The lemmas use B(a,sigma) in three flavours.
struct BEnv {
    Expr B;  // the bound exponent itself
    Expr D;  // a - B, kept as a separate single-occurrence tree
};

BEnv b_linear() {
    return {A() + Expr(1.0) - Expr(2.0) * S() + NU() + Expr(2.0) * E1(),
            Expr(2.0) * S() - Expr(1.0) - NU() - Expr(2.0) * E1()};
}
BEnv b_high() {
    return {Expr(1.0) - S() - E1(), A() - Expr(1.0) + S() + E1()};
}
BEnv b_max() {
    BEnv l = b_linear(), h = b_high();
    return {max(l.B, h.B), min(l.D, h.D)};
}

// G = (3a+B-2e)/(3a+3B-6e), H = (3a-2B+4e)/(3a-B+2e); E = min(G, H).
// G - c and H - c rewritten so that B enters once (through D = a - B),
// which keeps interval enclosures tight near E = c.
Expr g_direct(const BEnv& b) {
    return (Expr(3.0) * A() + b.B - Expr(2.0) * E1()) /
           (Expr(3.0) * A() + Expr(3.0) * b.B - Expr(6.0) * E1());
}
Expr h_direct(const BEnv& b) {
    return (Expr(3.0) * A() - Expr(2.0) * b.B + Expr(4.0) * E1()) /
           (Expr(3.0) * A() - b.B + Expr(2.0) * E1());
}
Expr e_direct(const BEnv& b) { return min(g_direct(b), h_direct(b)); }

Expr g_minus(const BEnv& b, double c) {
    return (Expr(4.0 - 6.0 * c) * A() - Expr(1.0 - 3.0 * c) * b.D - Expr(2.0 - 6.0 * c) * E1()) /
           (Expr(6.0) * A() - Expr(3.0) * b.D - Expr(6.0) * E1());
}
Expr h_minus(const BEnv& b, double c) {
    return (Expr(1.0 - 2.0 * c) * A() + Expr(2.0 - c) * b.D + Expr(4.0 - 2.0 * c) * E1()) /
           (Expr(2.0) * A() + b.D + Expr(2.0) * E1());
}
Expr e_minus(const BEnv& b, double c) { return min(g_minus(b, c), h_minus(b, c)); }

// ---------------------------------------------------------------------------
// the nine exponent tuples

const std::vector<ZTuple>& Z() {
    static const std::vector<ZTuple> z = {
        {1.0, 4.0, 4.0, 3.0, 4.0, 1.0},
        {0.5, 2.0, 1.5, 1.5, 2.0, 0.5},
        {2.0 / 5, 16.0 / 5, 12.0 / 5, 12.0 / 5, 16.0 / 5, 4.0 / 5},
        {2.0 / 5, 4.0 / 5, 3.0 / 5, 6.0 / 5, 8.0 / 5, 2.0 / 5},
        {1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0, 4.0 / 3, 1.0 / 3},
        {2.0 / 7, 16.0 / 21, 8.0 / 21, 8.0 / 7, 32.0 / 21, 8.0 / 21},
        {3.0 / 8, 2.0, 1.5, 15.0 / 8, 2.5, 5.0 / 8},
        {1.0 / 9, 16.0 / 9, 8.0 / 9, 5.0 / 3, 20.0 / 9, 5.0 / 9},
        {1.0 / 4, 4.0 / 3, 2.0 / 3, 5.0 / 4, 5.0 / 3, 5.0 / 12},
    };
    return z;
}

// membership helpers for the tuple families
bool in_z1(const ZTuple& t) { return t.V == 2.0; }
bool is_z21(const ZTuple& t) { return t.V == 4.0; }
bool is_z22(const ZTuple& t) { return t.V == 16.0 / 5; }
bool in_z3(const ZTuple& t) { return t.V < 2.0; }

// ---------------------------------------------------------------------------
// the Lambda/Upsilon family of the small-sigma and medium-tau lemmas

Expr lambda_star(const ZTuple& t, const BEnv& b) {
    auto [U, V, W, X, Y, Zc] = t;
    if (in_z1(t))
        return Expr(-2.0 * U) * A() - Expr(2.0 * (X - 2.0)) + Expr(2.0 * (Y - V)) * S() -
               Expr(2.0 * Zc) * NU() + Expr(4.0) * E1();
    if (is_z22(t)) {
        Expr head = Expr(2.0) * A() + Expr(2.0) + Expr(4.0) * NU() - Expr(10.0) * E1();
        Expr first = (head - Expr(6.0) * e_direct(b)) /
                     (Expr(6.0) * (Expr(0.0) - e_minus(b, 1.0 / 3.0)));
        Expr t0 = Expr(-1.5) * (head / Expr(6.0) + b.B / Expr(2.0) - Expr(1.0) - E1());
        auto tlm = [&](double lam, double mu) {
            return (head / Expr(6.0) + b.B / Expr(mu) - A() / Expr(mu) - Expr(lam / mu) -
                    Expr(2.0) * E1() / Expr(mu)) /
                   Expr(1.0 / 3.0 - lam / mu);
        };
        return min(first, max(t0, min(tlm(1, 2), tlm(4, 6))));
    }
    // Z3 tuples (V < 2): the compound a < 0.64 definition
    double dwv2 = (W - 2.0) / (V - 2.0);
    Expr A2 = (Expr(U) * A() + Expr(X - 2.0) - Expr(Y - V) * S() + Expr(Zc) * NU() -
               Expr(2.0) * E1()) /
              Expr(V - 2.0);
    Expr simple = (S() - A2) / e_minus(b, dwv2);
    Expr t1 = (Expr(0.0) - A2 + (Expr(2.0) + Expr(2.0) * S() - Expr(7.0) * E1()) / Expr(4.0)) /
              Expr(1.0 - dwv2);
    auto ts = [&](double lam, double mu) {
        return (Expr(0.0) - A2 +
                (Expr(2.0) + Expr(mu) * S() - A() - Expr(7.0) * E1()) / Expr(2.0 + mu)) /
               Expr((lam + 2.0) / (mu + 2.0) - dwv2);
    };
    return min(simple, max(t1, min(ts(1, 2), ts(4, 6), ts(11, 14))));
}

Expr upsilon_star(const BEnv& b) {  // only for (1,4,4,3,4,1)
    Expr head = (A() + Expr(1.0) + NU() - Expr(2.0) * E1()) / Expr(2.0);
    Expr first = (A() + Expr(1.0) + NU() - Expr(2.0) * e_direct(b) - Expr(2.0) * E1()) /
                 (Expr(2.0) * (Expr(0.0) - e_minus(b, 1.0)));
    auto u = [&](double lam, double mu) {
        return (head + b.B / Expr(mu) - A() / Expr(mu) - Expr(lam / mu) -
                Expr(2.0) * E1() / Expr(mu)) /
               Expr(1.0 - lam / mu);
    };
    return max(first, max(u(1, 2), u(4, 6)));
}

Expr upsilon2(const ZTuple& t, const BEnv& b) {
    auto [U, V, W, X, Y, Zc] = t;
    if (in_z1(t))
        return Expr(2.0 * (U - 1.0)) * A() + Expr(2.0 * (X - 1.0)) - Expr(2.0 * (Y - V)) * S() +
               Expr(2.0 * Zc) * NU() - Expr(4.0) * E1();
    Expr A1 = (Expr(U - 1.0) * A() + Expr(X - 1.0) - Expr(Y - V) * S() + Expr(Zc) * NU() -
               Expr(2.0) * E1()) /
              Expr(V - 2.0);
    double dwv1 = (W - 1.0) / (V - 2.0);
    if (is_z21(t) || is_z22(t)) {
        Expr num_const = Expr(U - 1.0) * A() + Expr(X - 1.0) + Expr(Zc) * NU() - Expr(2.0) * E1();
        Expr d1 = (num_const - Expr(V - 2.0) * e_direct(b)) /
                  (Expr(0.0) - Expr(V - 2.0) * e_minus(b, dwv1));
        double c2 = 1.0 / ((W - 4.0) / (V - 6.0) - dwv1);
        Expr d2 = Expr(c2) * ((Expr(4.0 * (U - 1.0)) * A() + Expr(4.0 * X - 3.0 * V + 2.0) +
                               Expr(4.0 * Zc) * NU() - Expr(8.0) * E1()) /
                              Expr((V - 2.0) * (V - 6.0)));
        Expr d3 = (num_const / Expr(V - 2.0) + b.B / Expr(2.0) - Expr(1.0) - E1()) /
                  Expr(dwv1 - 1.0);
        auto d4 = [&](double lam, double mu) {
            return (num_const / Expr(V - 2.0) + (b.B - A() - Expr(lam) - Expr(2.0) * E1()) / Expr(mu)) /
                   Expr(dwv1 - lam / mu);
        };
        return max(d1, max(d2, min(d3, max(d4(1, 2), d4(4, 6)))));
    }
    // Z3 tuples
    Expr s4 = (S() - A1) / e_minus(b, dwv1);
    Expr a0 = (Expr(0.0) - A1 + (Expr(2.0) + Expr(2.0) * S() - Expr(7.0) * E1()) / Expr(4.0)) /
              Expr(1.0 - dwv1);
    auto alt = [&](double lam, double mu) {
        return (Expr(0.0) - A1 +
                (Expr(2.0) + Expr(mu) * S() - A() - Expr(7.0) * E1()) / Expr(2.0 + mu)) /
               Expr((lam + 2.0) / (mu + 2.0) - dwv1);
    };
    return max(s4, min(a0, max(alt(1, 2), alt(4, 6), alt(11, 14))));
}

Expr upsilon6(const ZTuple& t, const BEnv& b) {
    auto [U, V, W, X, Y, Zc] = t;
    double c = (4.0 - W) / (6.0 - V);
    return (Expr(U - 1.0) * A() + Expr(X - 4.0) - Expr(Y - 6.0) * S() + Expr(Zc) * NU() -
            Expr(2.0) * E1()) /
           (Expr(6.0 - V) * e_minus(b, c));
}

Expr lambda_row_expr(const BEnv& b) {
    Expr m = Expr(-10.0);
    for (const auto& t : Z())
        if (!is_z21(t)) m = max(m, lambda_star(t, b));
    return m;
}

Expr upsilon_row_expr(const BEnv& b) {
    Expr m = upsilon_star(b);
    for (const auto& t : Z()) m = min(m, upsilon2(t, b));
    return m;
}

Expr upsilon6_row_expr(const BEnv& b) {
    Expr m = upsilon_star(b);
    for (const auto& t : Z()) m = min(m, max(upsilon2(t, b), upsilon6(t, b)));
    return m;
}

// ---------------------------------------------------------------------------
// the small-tau thresholds

Expr M_expr() {
    return min(Expr(3.0) * A() / (Expr(6.0) * S() - Expr(2.0)),
               max(Expr(3.0) * A() / (Expr(20.0) * S() - Expr(14.0)),
                   Expr(2.0) * A() / (Expr(4.0) * S() - Expr(1.0))));
}

Expr m_part(Expr t, int which) {
    Expr first = (A() - Expr(3.0) - NU()) / (Expr(4.0) * (Expr(1.0) - Expr(2.0) * t));
    Expr second;
    if (which == 1)
        second = A() * (Expr(3.0) - Expr(3.0) * t) /
                 ((Expr(3.0) * t - Expr(1.0)) * (Expr(1.0) - Expr(2.0) * t));
    else if (which == 2)
        second = A() * (Expr(3.0) - Expr(3.0) * t) /
                 ((Expr(10.0) * t - Expr(7.0)) * (Expr(1.0) - Expr(2.0) * t));
    else
        second = A() * (Expr(4.0) - Expr(4.0) * t) /
                 ((Expr(4.0) * t - Expr(1.0)) * (Expr(1.0) - Expr(2.0) * t));
    return first + second;
}

Expr m_expr() {
    Expr s1 = min(Expr(1.0), A() + Expr(1.0 / 3.0));
    Expr s2 = max(Expr(0.3) * A() + Expr(0.7), A() + Expr(0.25));
    Expr m1 = min(m_part(S(), 1), m_part(s1, 1));
    Expr m2 = min(m_part(S(), 2), m_part(s2, 2));
    Expr m3 = min(m_part(S(), 3), m_part(s2, 3));
    return max(m1, min(m2, m3));
}

Expr smoothfull_expr() {
    BEnv b = b_max();
    Expr TG = g_direct(b);
    Expr TH = h_direct(b);
    Expr dG12 = Expr(0.0) - g_minus(b, 0.5);   // 1/2 - G
    Expr dH12 = Expr(0.0) - h_minus(b, 0.5);   // 1/2 - H
    Expr dG23 = Expr(0.0) - g_minus(b, 2.0 / 3.0);
    Expr X1 = (S() - A() / Expr(4.0) + b.B / Expr(4.0) - TG - Expr(2.0) * E1()) / dG12;
    Expr X2 = (S() - A() / Expr(4.0) + b.B / Expr(4.0) - TH - Expr(2.0) * E1()) / dH12;
    Expr X3 = (S() - A() / Expr(6.0) + b.B / Expr(12.0) - TG - Expr(2.0) * E1()) / dG12;
    Expr Y1 = (S() - (Expr(5.0 / 24.0) * A() - Expr(7.0 / 24.0) + S() / Expr(3.0) -
                      NU() / Expr(24.0) + Expr(2.0) * E1() + TG)) /
              dG12;
    Expr Y2 = (S() - (A() / Expr(6.0) - Expr(1.0 / 3.0) + S() / Expr(3.0) + Expr(2.0) * E1() + TG)) /
              dG23;
    return min(X1, X2, X3, max(Y1, Y2));
}

// S_r / S^Q / S^* membership constraints of the large-sigma lemma, in cleared
// (denominator-free) form; each returns the list "all <= 0".
std::vector<Expr> s_r_constraints(double r) {
    Expr L = eell();
    Expr c1 = (Expr(-1.0) + S() + A() + Expr(3.0) * E1()) - L * Expr(r) * (Expr(6.0) * S() - Expr(4.0));
    Expr c2 = (Expr(1.0) - S()) * (Expr(2.0 * r) * L - Expr(1.0)) + Expr(3.0) * E1();
    return {c1, c2};
}

std::vector<Expr> s_q_constraints(double r1, double r2) {
    Expr L = eell();
    Expr two_s = Expr(2.0) - Expr(2.0) * S();
    Expr one_s = Expr(1.0) - Expr(2.0) * S();
    Expr four_s = Expr(4.0) - Expr(6.0) * S();
    Expr q1 = L * (Expr(r1) * two_s + Expr(r2) * one_s) -
              (Expr(7.0 / 4.0) - A() / Expr(4.0) - Expr(2.0) * S() + NU() / Expr(4.0) -
               Expr(7.0) * E1());
    Expr q2 = L * (Expr(r1) * four_s + Expr(r2) * one_s) -
              (Expr(7.0 / 4.0) - Expr(5.0 / 4.0) * A() - Expr(2.0) * S() + NU() / Expr(4.0) -
               Expr(7.0) * E1());
    Expr q3 = (Expr(1.0) - S()) * (Expr(2.0 * (r1 + r2)) * L - Expr(2.0)) + Expr(7.0) * E1();
    Expr q4 = L * (Expr(r1) * four_s + Expr(r2) * two_s) -
              (Expr(2.0) - Expr(2.0) * S() - A() - Expr(7.0) * E1());
    return {q1, q2, q3, q4};
}

std::vector<Expr> s_star_constraints(double r1, double r2) {
    Expr L = eell();
    std::vector<Expr> out;
    for (const auto& t : Z()) {
        auto [U, V, W, X, Y, Zc] = t;
        Expr wv = Expr(W) - Expr(V) * S();
        Expr rhs1 = Expr(U) * A() + Expr(X) - Expr(Y) * S() + Expr(Zc) * NU() - Expr(2.0) * E1();
        Expr rhs2 = Expr(U - 1.0) * A() + Expr(X) - Expr(Y) * S() + Expr(Zc) * NU() -
                    Expr(2.0) * E1();
        out.push_back(L * (Expr(r1) * (Expr(2.0) - Expr(2.0) * S()) + Expr(r2) * wv) - rhs1);
        out.push_back(L * (Expr(r1) * (Expr(4.0) - Expr(6.0) * S()) + Expr(r2) * wv) - rhs2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// claim construction helpers

ClaimSpec ineq(std::string id, std::string anchor,
               std::vector<std::pair<Var, Interval>> box, Expr lhs, Relation rel, Expr rhs) {
    ClaimSpec c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.box = std::move(box);
    c.lhs = lhs;
    c.rel = rel;
    c.rhs = rhs;
    return c;
}

ClaimSpec cover(std::string id, std::string anchor,
                std::vector<std::pair<Var, Interval>> box, std::vector<CoverRegion> regions) {
    ClaimSpec c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.box = std::move(box);
    c.regions = std::move(regions);
    return c;
}

CoverRegion trivial_region() {
    // B(a,sigma) >= a + 2 eps1: the count is at most T0 <= x^B outright.
    BEnv b = b_max();
    return {"trivial-regime", {A() + Expr(2.0) * E1() - b.B}};
}

Expr smalltau_case2a_rhs() {
    Expr g = G();
    Expr one_m_2g = Expr(1.0) - Expr(2.0) * g;
    Expr base = (A() - Expr(3.0) - NU()) / (Expr(4.0) * one_m_2g);
    Expr t1 = A() * (Expr(3.0) - Expr(3.0) * g) / ((Expr(2.0) - g) * one_m_2g);
    Expr t2 = A() * (Expr(3.0) - Expr(3.0) * g) / ((Expr(3.0) * g - Expr(1.0)) * one_m_2g);
    return Expr(1.0) - base - max(t1, t2) + Expr(35.0) * E1();
}

Expr smalltau_case1a_lhs() {
    return Expr(1.0) - min(Expr(3.0) * A() / (Expr(4.0) - Expr(2.0) * G()),
                           Expr(3.0) * A() / (Expr(6.0) * G() - Expr(2.0)));
}

}  // namespace

namespace fn {
Expr B_max() { return b_max().B; }
Expr B_linear() { return b_linear().B; }
Expr B_high() { return b_high().B; }
Expr E_of(Expr B) {
    return min((Expr(3.0) * A() + B - Expr(2.0) * E1()) /
                   (Expr(3.0) * A() + Expr(3.0) * B - Expr(6.0) * E1()),
               (Expr(3.0) * A() - Expr(2.0) * B + Expr(4.0) * E1()) /
                   (Expr(3.0) * A() - B + Expr(2.0) * E1()));
}
Expr smoothfull_min() { return smoothfull_expr(); }
Expr M_small() { return M_expr(); }
Expr m_small() { return m_expr(); }
Expr lambda_row() { return lambda_row_expr(b_linear()); }
Expr upsilon_row() { return upsilon_row_expr(b_linear()); }
Expr upsilon6_row() { return upsilon6_row_expr(b_linear()); }
}  // namespace fn

const std::vector<ZTuple>& z_tuples() { return Z(); }

std::vector<Expr> c3_star_exponents() {
    // exponent of x in tau^U M^(V beta - W) x^(X - Y sigma + Z nu + eps1/2),
    // with ell = log_x(M) and beta its mean size.
    std::vector<Expr> out;
    for (const auto& t : Z()) {
        auto [U, V, W, X, Y, Zc] = t;
        out.push_back(Expr(U) * A() + (Expr(V) * Expr(Var::beta) - Expr(W)) * eell() + Expr(X) -
                      Expr(Y) * S() + Expr(Zc) * NU() + E1() / Expr(2.0));
    }
    return out;
}

std::vector<Expr> c4_star_exponents() {
    Expr ell = eell(), beta = Expr(Var::beta);
    return {Expr(-0.25) * A() + (Expr(2.0) * beta - Expr(1.0)) * ell + Expr(7.0 / 4.0) -
                Expr(2.0) * S() + NU() / Expr(4.0) - Expr(4.0) * E1(),
            (Expr(2.0) * beta - Expr(2.0)) * ell + Expr(2.0) - Expr(2.0) * S() -
                Expr(4.0) * E1()};
}

std::vector<Expr> mean_value_shapes() {
    Expr b = Expr(Var::beta);
    return {Expr(2.0) - Expr(2.0) * b, Expr(1.0) - Expr(2.0) * b, Expr(4.0) - Expr(6.0) * b,
            Expr(11.0) - Expr(14.0) * b};
}

std::vector<ClaimSpec> catalog_claims() {
    std::vector<ClaimSpec> out;
    const Interval sig_full(0.6, 1.0);

    // --- deep Buchstab-range thresholds of the long-factor lemma
    {
        struct Row {
            double alo, ahi, thr;
            const char* id;
        } rows[] = {{0.475, 0.57, 0.335, "smoothfull-0.335"},
                    {0.57, 0.61, 0.33, "smoothfull-0.33"},
                    {0.61, 0.77, 0.32, "smoothfull-0.32"}};
        for (const auto& r : rows) {
            CoverRegion main{"threshold", {smoothfull_expr() - Expr(r.thr)}};
            out.push_back(cover(r.id, "values/long-factors",
                                {{Var::a, Interval(r.alo, r.ahi)}, {Var::sigma, sig_full}},
                                {main, trivial_region()}));
        }
    }

    // --- large-tau quadratic condition: sigma >= E(a,sigma) with the max-form B
    out.push_back(ineq("largetau-quadratic", "values/large-tau",
                       {{Var::a, Interval(0.685, 0.77)}, {Var::sigma, Interval(0.6, 0.88)}},
                       e_direct(b_max()), Relation::LE, S()));

    // --- small-tau interval claims (cases 1A and 2A)
    out.push_back(ineq("smalltau-1a-0.36", "values/small-tau/1a",
                       {{Var::a, Interval(0.47, 0.53)}, {Var::gamma, Interval(0.6, 1.0)}},
                       smalltau_case1a_lhs(), Relation::GT, Expr(0.36)));
    out.push_back(ineq("smalltau-1a-0.345", "values/small-tau/1a",
                       {{Var::a, Interval(0.53, 0.545)}, {Var::gamma, Interval(0.6, 1.0)}},
                       smalltau_case1a_lhs(), Relation::GT, Expr(0.345)));
    out.push_back(ineq(
        "smalltau-1a-0.375", "values/small-tau/1a", {{Var::a, Interval(0.53, 0.545)}},
        Expr(1.0) - Expr(3.0) * A() /
                        (Expr(6.0) * (A() + NU() - E1()) - Expr(2.0)),
        Relation::GT, Expr(0.375)));
    {
        auto carve_hi = CoverRegion{"gamma-above-range", {A() + Expr(0.34) - G()}};
        out.push_back(cover("smalltau-2a-0.29", "values/small-tau/2a",
                            {{Var::a, Interval(0.47, 0.53)}, {Var::gamma, Interval(0.6, 0.87)}},
                            {{"bound", {smalltau_case2a_rhs() - Expr(0.29)}}, carve_hi}));
        out.push_back(cover("smalltau-2a-0.315", "values/small-tau/2a",
                            {{Var::a, Interval(0.53, 0.545)}, {Var::gamma, Interval(0.6, 0.885)}},
                            {{"bound", {smalltau_case2a_rhs() - Expr(0.315)}}, carve_hi}));
        auto carve_lo = CoverRegion{"gamma-below-range", {G() - (A() + NU() - E1())}};
        out.push_back(cover("smalltau-2a-0.285", "values/small-tau/2a",
                            {{Var::a, Interval(0.53, 0.545)}, {Var::gamma, Interval(0.76, 0.885)}},
                            {{"bound", {smalltau_case2a_rhs() - Expr(0.285)}}, carve_lo, carve_hi}));
    }

    // --- the numeric table of the small-sigma lemma, all four a-branches
    {
        struct Row {
            double alo, ahi, lam, ups;
            const char* tag;
        } rows[] = {{0.53, 0.545, 0.405, 0.485, "0.53-0.545"},
                    {0.545, 0.57, 0.400, 0.475, "0.545-0.57"},
                    {0.57, 0.59, 0.380, 0.455, "0.57-0.59"},
                    {0.59, 0.61, 0.365, 0.435, "0.59-0.61"}};
        const double sig_lo = (1.0 + 0.23) / 2.0;
        for (const auto& r : rows) {
            BEnv b = b_linear();
            CoverRegion out_hi{"sigma-above-range", {(A() + NU()) - S()}};
            out.push_back(cover(
                std::string("cases2-lambda-") + r.tag, "values/small-sigma/table",
                {{Var::a, Interval(r.alo, r.ahi)}, {Var::sigma, Interval(sig_lo, r.ahi + 0.23)}},
                {{"bound", {lambda_row_expr(b) - (Expr(r.lam) - E1())}}, out_hi}));
            CoverRegion trivial{"trivial-regime", {(A() + Expr(2.0) * E1()) - b.B}};
            out.push_back(cover(
                std::string("cases2-upsilon-") + r.tag, "values/small-sigma/table",
                {{Var::a, Interval(r.alo, r.ahi)}, {Var::sigma, Interval(sig_lo, 0.75)}},
                {{"bound", {(Expr(r.ups) + E1()) - upsilon_row_expr(b)}}, trivial}));
            out.push_back(cover(
                std::string("cases2-upsilon6-") + r.tag, "values/small-sigma/table",
                {{Var::a, Interval(r.alo, r.ahi)}, {Var::sigma, Interval(0.75, r.ahi + 0.23)}},
                {{"bound", {(Expr(r.ups) + E1()) - upsilon6_row_expr(b)}}, out_hi}));
        }
    }

    // --- medium-tau combined coverage, three branches
    {
        struct Row {
            double alo, ahi, llo, lhi;
            const char* tag;
        } rows[] = {{0.57, 0.59, 0.315, 0.42, "0.57-0.59"},
                    {0.59, 0.61, 0.33, 0.42, "0.59-0.61"},
                    {0.61, 0.685, 0.355, 0.42, "0.61-0.685"}};
        for (const auto& r : rows) {
            BEnv b = b_high();
            Expr lam = max(lambda_row_expr(b), Expr(0.365));
            Expr u6 = Expr(10.0);
            for (const auto& t : Z()) u6 = min(u6, upsilon6(t, b));
            Expr up = min(u6, Expr(0.42) + E1());
            Expr lq = Expr(1.0) - m_expr();
            Expr uq = Expr(1.0) - M_expr();
            Expr sig_cap = max(Expr(0.3) * A() + Expr(0.7), A() + Expr(0.25));
            double sig_hi = std::max(0.3 * r.ahi + 0.7, r.ahi + 0.25) + 1e-9;
            out.push_back(cover(
                std::string("mediumtau-") + r.tag, "values/medium-tau",
                {{Var::a, Interval(r.alo, r.ahi)},
                 {Var::sigma, Interval(r.alo + 0.23 - 1e-7, sig_hi)},
                 {Var::ell, Interval(r.llo - 1e-7, r.lhi + 1e-7)}},
                {{"window-r*", {lam - eell(), eell() - up}},
                 {"window-q", {lq - eell(), eell() - uq}},
                 {"sigma-below-range", {S() - (A() + NU() - E1())}},
                 {"sigma-above-range", {sig_cap - S()}}}));
        }
    }

    // --- large-sigma family coverage (three region-cover claims)
    {
        const double lpin = 2e-4;  // absorbs the C* eps1 fringe at the 0.2 split
        auto carve_lo = CoverRegion{"sigma-below-range", {S() - (A() + NU() - E1())}};
        out.push_back(cover(
            "largesigma-small-ell", "values/large-sigma/cover1",
            {{Var::a, Interval(0.53, 0.57)}, {Var::sigma, Interval(0.76 - 1e-7, 1.0 - 1e-6)},
             {Var::ell, Interval(0.1245, 0.2 - lpin)}},
            {{"S2", s_r_constraints(2)},
             {"S3", s_r_constraints(3)},
             {"SQ32", s_q_constraints(3, 2)},
             {"SQ43", s_q_constraints(4, 3)},
             carve_lo}));
        out.push_back(cover(
            "largesigma-0.545-0.57", "values/large-sigma/cover2a",
            {{Var::a, Interval(0.545, 0.57)}, {Var::sigma, Interval(0.775 - 1e-7, 1.0 - 1e-6)},
             {Var::ell, Interval(0.2 - lpin, 0.249)}},
            {{"S2", s_r_constraints(2)},
             {"S*22", s_star_constraints(2, 2)},
             {"S*32", s_star_constraints(3, 2)},
             carve_lo}));
        CoverRegion rect{"handled-rectangle",
                         {S() - (A() + NU() + Expr(0.025)), (A() + NU() - E1()) - S(),
                          eell() - Expr(0.215), Expr(0.2 - lpin) - eell()}};
        out.push_back(cover(
            "largesigma-0.53-0.545", "values/large-sigma/cover2b",
            {{Var::a, Interval(0.53, 0.545)}, {Var::sigma, Interval(0.76 - 1e-7, 1.0 - 1e-6)},
             {Var::ell, Interval(0.2 - lpin, 0.249)}},
            {{"S2", s_r_constraints(2)},
             {"S*22", s_star_constraints(2, 2)},
             {"S*32", s_star_constraints(3, 2)},
             {"SQ21", s_q_constraints(2, 1)},
             rect,
             carve_lo}));
    }

    return out;
}

ClaimSpec tighten_claim(const ClaimSpec& c, double delta) {
    ClaimSpec t = c;
    if (!t.is_cover()) {
        if (t.rel == Relation::LE || t.rel == Relation::LT)
            t.rhs = *t.rhs - Expr(delta);
        else
            t.rhs = *t.rhs + Expr(delta);
        t.id += "-mutant";
        return t;
    }
    for (auto& r : t.regions) {
        bool carve = r.name.find("range") != std::string::npos ||
                     r.name.find("trivial") != std::string::npos ||
                     r.name.find("rectangle") != std::string::npos;
        if (carve) continue;
        for (auto& g : r.constraints) g = g + Expr(delta);
    }
    t.id += "-mutant";
    return t;
}

// ---------------------------------------------------------------------------
// branch-and-bound certification

namespace {

struct WorkBox {
    std::vector<Interval> dims;
    int depth = 0;
};

Box to_env(const ClaimSpec& claim, const WorkBox& wb, double eps1) {
    Box b(eps1);
    for (std::size_t i = 0; i < claim.box.size(); ++i) b.set(claim.box[i].first, wb.dims[i]);
    return b;
}

Point to_point(const ClaimSpec& claim, const std::vector<double>& x, double eps1) {
    Point p(eps1);
    for (std::size_t i = 0; i < claim.box.size(); ++i) p.set(claim.box[i].first, x[i]);
    return p;
}

// point-level truth of the claim (used for witness confirmation)
bool holds_at(const ClaimSpec& claim, const Point& p) {
    if (!claim.is_cover()) {
        double l, r;
        try {
            l = claim.lhs->eval(p);
            r = claim.rhs->eval(p);
        } catch (const std::domain_error&) {
            return true;  // undefined point (measure-zero singular line): not a witness
        }
        switch (claim.rel) {
            case Relation::LE: return l <= r;
            case Relation::LT: return l < r;
            case Relation::GE: return l >= r;
            case Relation::GT: return l > r;
        }
        return true;
    }
    for (const auto& reg : claim.regions) {
        bool ok = true;
        for (const auto& g : reg.constraints) {
            double v;
            try {
                v = g.eval(p);
            } catch (const std::domain_error&) {
                ok = false;
                break;
            }
            if (!(v <= 0.0)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

Verdict certify(const ClaimSpec& claim, const CertifyOptions& opt) {
    Verdict v;
    std::deque<WorkBox> work;
    WorkBox root;
    for (const auto& [var, iv] : claim.box) {
        (void)var;
        root.dims.push_back(iv);
    }
    work.push_back(root);

    double min_margin = std::numeric_limits<double>::infinity();
    long long processed = 0;

    while (!work.empty()) {
        if (processed > opt.max_boxes) break;
        WorkBox wb = work.front();
        work.pop_front();
        ++processed;

        Box env = to_env(claim, wb, opt.eps1);
        bool decided = false;
        double slack = -std::numeric_limits<double>::infinity();

        if (!claim.is_cover()) {
            Expr g = (claim.rel == Relation::LE || claim.rel == Relation::LT)
                         ? (*claim.lhs - *claim.rhs)
                         : (*claim.rhs - *claim.lhs);
            Interval r = g.eval(env);
            if (r.hi < 0.0) {
                decided = true;
                slack = -r.hi;
            }
        } else {
            for (const auto& reg : claim.regions) {
                double reg_slack = std::numeric_limits<double>::infinity();
                bool ok = true;
                for (const auto& gc : reg.constraints) {
                    Interval r = gc.eval(env);
                    if (!(r.hi <= 0.0)) {
                        ok = false;
                        break;
                    }
                    reg_slack = std::min(reg_slack, -r.hi);
                }
                if (ok) {
                    decided = true;
                    slack = std::max(slack, reg_slack);
                }
            }
        }

        if (decided) {
            min_margin = std::min(min_margin, slack);
            continue;
        }

        // probe the midpoint for a counterexample
        std::vector<double> mid;
        for (const auto& d : wb.dims) mid.push_back(d.mid());
        if (!holds_at(claim, to_point(claim, mid, opt.eps1))) {
            v.status = Verdict::Status::Falsified;
            Witness w;
            for (std::size_t i = 0; i < claim.box.size(); ++i)
                w.point.emplace_back(claim.box[i].first, mid[i]);
            v.witness = w;
            v.boxes_processed = processed;
            return v;
        }

        int widest = 0;
        double wbest = -1.0;
        for (std::size_t i = 0; i < wb.dims.size(); ++i) {
            double wd = wb.dims[i].width();
            if (wd > wbest) {
                wbest = wd;
                widest = static_cast<int>(i);
            }
        }
        if (wb.depth >= opt.depth_limit || wbest < opt.min_width) {
            if (v.unresolved.size() < 8) {
                std::vector<std::pair<Var, Interval>> rec;
                for (std::size_t i = 0; i < claim.box.size(); ++i)
                    rec.emplace_back(claim.box[i].first, wb.dims[i]);
                v.unresolved.push_back(rec);
            } else {
                v.unresolved.resize(9);  // marker that more were dropped
            }
            continue;
        }
        WorkBox left = wb, right = wb;
        double m = wb.dims[widest].mid();
        left.dims[widest] = Interval(wb.dims[widest].lo, m);
        right.dims[widest] = Interval(m, wb.dims[widest].hi);
        left.depth = right.depth = wb.depth + 1;
        work.push_back(left);
        work.push_back(right);
    }

    v.boxes_processed = processed;
    if (!work.empty() || !v.unresolved.empty()) {
        v.status = Verdict::Status::Inconclusive;
        if (v.unresolved.empty() && !work.empty()) {
            std::vector<std::pair<Var, Interval>> rec;
            for (std::size_t i = 0; i < claim.box.size(); ++i)
                rec.emplace_back(claim.box[i].first, work.front().dims[i]);
            v.unresolved.push_back(rec);
        }
    } else {
        v.status = Verdict::Status::Certified;
        v.margin = min_margin;
    }
    return v;
}

}  // namespace sievecert
