#pragma once

// Hypothesis checks of the combination lemma and the falsification harness
// for the case catalog: adversarially sample admissible length profiles and
// confirm that one of the options always holds.

#include "sievecert/regions.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sievecert {

enum class Family { RStar, RStarStar };

struct CaseSpec {
    std::string id;       // "I.i" .. "VI.vi", "A.a" .. "F.b"
    Family family = Family::RStar;
    double a_lo = 0.0, a_hi = 0.0;
    std::vector<int> r_choices;
    // beta: fixed value, or a range [beta_lo, beta_hi] when the condition allows it
    double beta_lo = 0.0, beta_hi = 0.0;
    // Draws an admissible (sorted, capped) tuple for a given r. Returns parts
    // in nanos; empty result means "resample".
    std::function<std::vector<nano_t>(std::mt19937_64&, int r, nano_t beta)> draw_tuple;
    std::string anchor;
};

struct XiSample {
    double a = 0.0;
    nano_t beta = 0;
    std::vector<nano_t> lstar;              // the block targets (exact nanos)
    EllSequence seq;                        // the full profile, sum == 1
    std::vector<std::vector<int>> blocks;   // indices of X_1..X_r within seq
    std::optional<int> leftover;            // index of the one unconstrained part (RStar)
};

// Conditions (A)-(E) of the combination lemma, evaluated verbatim.
struct LemmaConditions {
    bool A = false, B = false, C = false, D = false, E = false;
    bool any() const { return A || B || C || D || E; }
};

LemmaConditions lemma_conditions_check(const std::vector<double>& lstar, double beta, double rho,
                                       double b1, double b2, double a1, double a2,
                                       double eps1 = 0.0);

std::vector<CaseSpec> combinatorics_cases();

XiSample sample_xi(const CaseSpec& c, std::mt19937_64& rng, double eps1);

struct FalsifyResult {
    std::int64_t checked = 0;
    std::int64_t maybe = 0;  // samples decided only by a coarsened reachable set
    struct Counterexample {
        XiSample sample;
        std::int64_t index = 0;
    };
    std::vector<Counterexample> counterexamples;
};

// Runs check_options on `count` samples; any sample failing all three options
// (confirmed by an exact recheck) is reported. An optional chi override
// supports the mutation test.
FalsifyResult falsify_case(const CaseSpec& c, std::uint64_t seed, std::int64_t count,
                           double eps1 = 0.0,
                           const std::function<ChiTables(double)>& chi_override = nullptr,
                           std::size_t max_counterexamples = 8);

}  // namespace sievecert
