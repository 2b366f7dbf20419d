#pragma once

// Catalog of the explicit threshold functions and certification of their
// claimed inequalities over parameter boxes by branch-and-bound interval
// evaluation.
//
// Two claim shapes cover everything:
//  * Ineq   -- lhs REL rhs must hold at every point of the box;
//  * Cover  -- every point must satisfy all constraints of at least one
//              region (constraints are expressions required <= 0).
// Boxes whose interval evaluation cannot decide are split; exhaustion yields
// INCONCLUSIVE, never a silent pass.

#include "sievecert/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sievecert {

enum class Relation { LE, LT, GE, GT };

struct CoverRegion {
    std::string name;
    std::vector<Expr> constraints;  // all must be <= 0
};

struct ClaimSpec {
    std::string id;
    std::string anchor;
    // box variables with their ranges (subset of {a, sigma, gamma, ell})
    std::vector<std::pair<Var, Interval>> box;

    // Ineq form
    std::optional<Expr> lhs;
    Relation rel = Relation::LE;
    std::optional<Expr> rhs;

    // Cover form
    std::vector<CoverRegion> regions;

    bool is_cover() const { return !regions.empty(); }
};

struct Witness {
    std::vector<std::pair<Var, double>> point;
};

struct Verdict {
    enum class Status { Certified, Falsified, Inconclusive } status = Status::Inconclusive;
    double margin = 0.0;         // worst-case slack over all certified leaves
    long long boxes_processed = 0;
    std::optional<Witness> witness;                      // Falsified only
    std::vector<std::vector<std::pair<Var, Interval>>> unresolved;  // a few leftovers
};

struct CertifyOptions {
    int depth_limit = 60;
    double min_width = 1e-5;
    double eps1 = 0.0;
    long long max_boxes = 40000000;
};

Verdict certify(const ClaimSpec& claim, const CertifyOptions& opt = {});

// The full transcription of the claims (28 entries; see catalog source for
// the per-claim anchors).
std::vector<ClaimSpec> catalog_claims();

// Tighten a claim's decisive constant by delta (mutation testing hook):
// upper-bound claims get rhs - delta, lower-bound claims rhs + delta;
// cover claims shrink every admissibility window.
ClaimSpec tighten_claim(const ClaimSpec& c, double delta);

// Named pieces of the function catalog, exposed for tests and spot checks.
namespace fn {
Expr B_max();                  // max{1-sigma-e1, a+1-2sigma+nu+2e1}
Expr B_linear();               // a+1-2sigma+nu+2e1
Expr B_high();                 // 1-sigma-e1
Expr E_of(Expr B);             // min of the two ratio forms
Expr smoothfull_min();         // min{X1,X2,X3,max{Y1,Y2}}
Expr M_small();                // the min/max threshold of the small-tau lemma
Expr m_small();                // its companion lower threshold
Expr lambda_row();             // max over the Lambda* family (B = B_linear)
Expr upsilon_row();            // min over {Ups*, Ups2} (B = B_linear)
Expr upsilon6_row();           // min over {Ups*, max(Ups2, Ups6)} (B = B_linear)
}  // namespace fn

// The nine exponent 6-tuples.
struct ZTuple {
    double U, V, W, X, Y, Z;
};
const std::vector<ZTuple>& z_tuples();

// C3*/C4* right-hand-side exponents as expressions in (a, sigma, beta_M, ell_M):
// exponent of x in tau^U * M^(V beta - W) * x^(X - Y sigma + Z nu).
std::vector<Expr> c3_star_exponents();
std::vector<Expr> c4_star_exponents();
// Montgomery/Huxley mean-value exponent shapes in beta: 2-2b, 1-2b, 4-6b, 11-14b.
std::vector<Expr> mean_value_shapes();

}  // namespace sievecert
