#include "sievecert/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sievecert {

namespace {

// Deterministic draws (std distributions are not portable across libraries).
double unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }
nano_t draw_nano(std::mt19937_64& rng, nano_t lo, nano_t hi) {
    if (hi <= lo) return lo;
    double u = unit(rng);
    if (u < 0.10) return lo;        // boundary hugging
    if (u < 0.20) return hi;
    return lo + static_cast<nano_t>(unit(rng) * static_cast<double>(hi - lo));
}
nano_t N(double x) { return to_nanos(x); }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr nano_t kHalf = 500000000 + 0;  // 0.5 (epsilon widening not sampled)
constexpr int kMaxParts = 200;

// Draws r descending values, value s bounded by [lo, min(prev, hi_fn(prefix))],
// rejecting when infeasible; used by most of the case table.
template <typename HiFn>
std::vector<nano_t> draw_desc(std::mt19937_64& rng, int r, nano_t lo, nano_t first_lo,
                              nano_t first_hi, HiFn&& hi_fn, nano_t sum_cap) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<nano_t> v;
        nano_t sum = 0;
        bool ok = true;
        for (int s = 0; s < r; ++s) {
            nano_t l = (s == 0) ? std::max(lo, first_lo) : lo;
            nano_t h = (s == 0) ? first_hi : v.back();
            h = std::min(h, hi_fn(s, v));
            h = std::min(h, sum_cap - sum - lo * (r - s - 1));
            if (h < l) {
                ok = false;
                break;
            }
            v.push_back(draw_nano(rng, l, h));
            sum += v.back();
        }
        if (ok && sum <= sum_cap) return v;
    }
    return {};
}

using Draw = std::function<std::vector<nano_t>(std::mt19937_64&, int, nano_t)>;

CaseSpec make_case(std::string id, Family fam, double alo, double ahi, std::vector<int> rs,
                   double blo, double bhi, Draw draw) {
    CaseSpec c;
    c.id = std::move(id);
    c.family = fam;
    c.a_lo = alo;
    c.a_hi = ahi;
    c.r_choices = std::move(rs);
    c.beta_lo = blo;
    c.beta_hi = bhi;
    c.draw_tuple = std::move(draw);
    c.anchor = std::string("computations/case-") + c.id;
    return c;
}

nano_t nmin(nano_t a, nano_t b) { return std::min(a, b); }

}  // namespace

LemmaConditions lemma_conditions_check(const std::vector<double>& lstar, double beta, double rho,
                                       double b1, double b2, double a1, double a2, double eps1) {
    LemmaConditions out;
    const int r = static_cast<int>(lstar.size());
    double total = 0.0;
    std::vector<double> prefix{0.0};
    for (double v : lstar) {
        total += v;
        prefix.push_back(total);
    }
    const bool side = (a2 - a1 >= beta);

    out.A = side && total <= a2 && (1.0 - rho) >= a1;
    for (int k = 2; k <= r && !out.B; ++k)
        out.B = side && prefix[k - 1] <= a2 && lstar[k - 1] <= b1 &&
                (1.0 - rho - (r - k + 1) * b1) >= a1;
    out.C = side && r >= 1 && (total - lstar[0]) <= a2 && lstar[0] <= b2 &&
            (1.0 - rho - b2) >= a1;
    if (a1 >= 0.5 + eps1 && total <= 1.0 - rho - (2.0 * a1 - 1.0) && side) {
        for (int k = 1; k <= r; ++k)
            if (prefix[k] >= 1.0 - a2 - (2.0 * a1 - 1.0) && prefix[k] <= a2) {
                out.D = true;
                break;
            }
    }
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        double s = 0.0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) s += lstar[i];
        if (s >= a1 && s <= a2) {
            out.E = true;
            break;
        }
    }
    return out;
}

std::vector<CaseSpec> combinatorics_cases() {
    std::vector<CaseSpec> cs;
    auto none = [](int, const std::vector<nano_t>&) { return N(0.5); };

    // ---- admissible tuples with a filler cap (cases I-VI)
    cs.push_back(make_case("I.i", Family::RStar, 0.475, 0.53, {0, 1}, 0.07, 0.07,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case("I.ii", Family::RStar, 0.475, 0.53, {2, 3}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.71) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("I.iii", Family::RStar, 0.475, 0.53, {4, 5}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 3 ? (N(0.71) - v[0] - v[1] - v[2]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("II.i", Family::RStar, 0.53, 0.545, {0, 1}, 0.08, 0.08,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case("II.ii", Family::RStar, 0.53, 0.545, {2, 3}, 0.06, 0.09,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? nmin(N(0.595) - v[0], (N(0.715) - v[0]) / 2)
                                                 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.474), kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("II.iii", Family::RStar, 0.53, 0.545, {2, 3}, 0.08, 0.08,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.655) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.427), hi, N(0.75));
                           }));
    cs.push_back(make_case("II.iv", Family::RStar, 0.53, 0.545, {4, 5}, 0.08, 0.08,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   if (s == 1) return (N(0.655) - v[0]) / 2;
                                   if (s == 3) return (N(0.655) - v[0] - v[1] - v[2]) / 2;
                                   return N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.285), hi, N(0.75));
                           }));
    cs.push_back(make_case("III.i", Family::RStar, 0.545, 0.57, {0, 1}, 0.075, 0.075,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case(
        "III.ii", Family::RStar, 0.545, 0.57, {2, 3}, 0.075, 0.075,
        [](std::mt19937_64& rng, int r, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, N(0.335), kHalf);
                nano_t lo2 = std::max(b, N(0.475) - l1);
                nano_t hi2 = std::min({l1, N(0.525) - l1, N(0.14)});
                if (hi2 < lo2) continue;
                nano_t l2 = draw_nano(rng, lo2, hi2);
                std::vector<nano_t> v{l1, l2};
                if (r == 3) v.push_back(draw_nano(rng, b, l2));
                nano_t s = 0;
                for (auto x : v) s += x;
                if (s <= N(0.75)) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("III.iii", Family::RStar, 0.545, 0.57, {2, 3}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.6) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("III.iv", Family::RStar, 0.545, 0.57, {4, 5}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   if (s == 1) return N(0.4) - v[0];
                                   if (s == 3) return (N(0.615) - v[0] - v[1] - v[2]) / 2;
                                   return N(0.5);
                               };
                               return draw_desc(rng, r, b, b, kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("IV.i", Family::RStar, 0.57, 0.59, {0, 1}, 0.075, 0.075,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case("IV.ii", Family::RStar, 0.57, 0.59, {2, 3}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? nmin(N(0.58) - v[0], (N(0.685) - v[0]) / 2)
                                                 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.455), kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("IV.iii", Family::RStar, 0.57, 0.59, {2, 3}, 0.07, 0.105,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.685) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.42), N(0.455), hi, N(0.75));
                           }));
    cs.push_back(make_case("IV.iv", Family::RStar, 0.57, 0.59, {2, 3}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? std::max(N(0.145), (N(0.62) - v[0]) / 2)
                                                 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.315), N(0.38), hi, N(0.75));
                           }));
    cs.push_back(make_case("IV.v", Family::RStar, 0.57, 0.59, {2, 3}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.62) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.29), N(0.315), hi, N(0.75));
                           }));
    cs.push_back(make_case("IV.vi", Family::RStar, 0.57, 0.59, {2, 3}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? nmin(N(0.2275), (N(0.685) - v[0]) / 2)
                                                 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.29), hi, N(0.75));
                           }));
    cs.push_back(make_case(
        "IV.vii", Family::RStar, 0.57, 0.59, {2, 3}, 0.07, 0.105,
        [](std::mt19937_64& rng, int r, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, std::max(b, N(0.21)), N(0.29));
                nano_t lo2 = std::max(b, N(0.42) - l1);
                nano_t hi2 = std::min(l1, N(0.455) - l1);
                if (hi2 < lo2) continue;
                nano_t l2 = draw_nano(rng, lo2, hi2);
                std::vector<nano_t> v{l1, l2};
                if (r == 3) v.push_back(draw_nano(rng, b, l2));
                nano_t s = 0;
                for (auto x : v) s += x;
                if (s <= N(0.75)) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("IV.viii", Family::RStar, 0.57, 0.59, {4, 5}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 3 ? (N(0.62) - v[0] - v[1] - v[2]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.29), hi, N(0.75));
                           }));
    cs.push_back(make_case("V.i", Family::RStar, 0.59, 0.61, {0, 1}, 0.07, 0.07,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case("V.ii", Family::RStar, 0.59, 0.61, {2, 3}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? nmin(N(0.105), (N(0.67) - v[0]) / 2) : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.435), kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("V.iii", Family::RStar, 0.59, 0.61, {2, 3}, 0.065, 0.09,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.67) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.42), N(0.435), hi, N(0.75));
                           }));
    cs.push_back(make_case("V.iv", Family::RStar, 0.59, 0.61, {2, 3}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>&) {
                                   return s == 1 ? N(0.1524) : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.33), N(0.365), hi, N(0.75));
                           }));
    cs.push_back(make_case("V.v", Family::RStar, 0.59, 0.61, {2, 3}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.635) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.305), N(0.33), hi, N(0.75));
                           }));
    cs.push_back(make_case("V.vi", Family::RStar, 0.59, 0.61, {2, 3}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>&) {
                                   return s == 1 ? N(0.2099) : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.305), hi, N(0.75));
                           }));
    cs.push_back(make_case("V.vii", Family::RStar, 0.59, 0.61, {4, 5}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 3 ? (N(0.635) - v[0] - v[1] - v[2]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.305), hi, N(0.75));
                           }));
    cs.push_back(make_case("VI.i", Family::RStar, 0.61, 0.77, {0, 1}, 0.065, 0.065,
                           [&](std::mt19937_64& rng, int r, nano_t b) {
                               return draw_desc(rng, r, b, b, kHalf, none, N(0.75));
                           }));
    cs.push_back(make_case("VI.ii", Family::RStar, 0.61, 0.77, {2, 3}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? nmin(N(0.58) - v[0], N(0.1)) : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.42), kHalf, hi, N(0.75));
                           }));
    cs.push_back(make_case("VI.iii", Family::RStar, 0.61, 0.77, {2, 3}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 1 ? (N(0.645) - v[0]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, N(0.325), N(0.355), hi, N(0.75));
                           }));
    cs.push_back(make_case("VI.iv", Family::RStar, 0.61, 0.77, {2, 3}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>&) {
                                   return s == 1 ? N(0.2099) : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.325), hi, N(0.75));
                           }));
    cs.push_back(make_case("VI.v", Family::RStar, 0.61, 0.77, {4, 5}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 3 ? (N(0.645) - v[0] - v[1] - v[2]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.325), hi, N(0.75));
                           }));
    cs.push_back(make_case("VI.vi", Family::RStar, 0.61, 0.77, {4, 5}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int r, nano_t b) {
                               auto hi = [](int s, const std::vector<nano_t>& v) {
                                   return s == 3 ? (N(0.42) - v[1] - v[2]) / 2 : N(0.5);
                               };
                               return draw_desc(rng, r, b, b, N(0.325), hi, N(0.75));
                           }));

    // ---- tuples without a filler cap (cases A-F); min part size varies
    auto in_union = [](nano_t x, std::initializer_list<std::pair<double, double>> bands) {
        for (auto [lo, hi] : bands)
            if (x >= N(lo) && x <= N(hi)) return true;
        return false;
    };

    cs.push_back(make_case("A.a", Family::RStarStar, 0.475, 0.53, {2}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = draw_nano(rng, N(0.29), N(0.36));
                               nano_t l2 = draw_nano(rng, b, l1);
                               return std::vector<nano_t>{l1, l2};
                           }));
    cs.push_back(make_case("A.b", Family::RStarStar, 0.475, 0.53, {2}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int, nano_t) {
                               nano_t l1 = draw_nano(rng, N(0.32), kHalf);
                               nano_t lo = std::max(N(0.64) - l1, N(0.07));
                               nano_t hi = std::min(N(0.71) - l1, l1);
                               if (hi < lo) return std::vector<nano_t>{};
                               return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
                           }));
    cs.push_back(make_case(
        "A.c", Family::RStarStar, 0.475, 0.53, {4}, 0.07, 0.07,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, kHalf);
                nano_t l2 = draw_nano(rng, b, std::min(l1, (N(0.71) - l1) / 2));
                nano_t lo3 = std::max(b, N(0.64) - l1 - l2);
                if (lo3 > l2) continue;
                nano_t l3 = draw_nano(rng, lo3, l2);
                nano_t l4 = draw_nano(rng, b, l3);
                if (l1 + l2 + l3 + l4 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("A.d", Family::RStarStar, 0.475, 0.53, {4}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = draw_nano(rng, N(0.22), N(0.29));
                               nano_t l2 = draw_nano(rng, b, l1);
                               nano_t l3 = draw_nano(rng, b, l2);
                               nano_t hi = std::min(l3, N(0.36) - l1);
                               if (hi < b) return std::vector<nano_t>{};
                               return std::vector<nano_t>{l1, l2, l3, draw_nano(rng, b, hi)};
                           }));
    cs.push_back(make_case(
        "A.e", Family::RStarStar, 0.475, 0.53, {6}, 0.07, 0.07,
        [in_union](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 200; ++attempt) {
                std::vector<nano_t> v;
                nano_t prev = kHalf, sum = 0;
                for (int i = 0; i < 6; ++i) {
                    nano_t h = std::min(prev, N(0.99) - sum - b * (5 - i));
                    if (h < b) break;
                    v.push_back(draw_nano(rng, b, h));
                    prev = v.back();
                    sum += prev;
                }
                if (v.size() != 6) continue;
                bool hit = false;
                for (int i = 0; i < 6 && !hit; ++i)
                    for (int j = i + 1; j < 6 && !hit; ++j)
                        hit = in_union(v[i] + v[j], {{0.29, 0.36}});
                if (hit) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "A.f", Family::RStarStar, 0.475, 0.53, {6}, 0.07, 0.07,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 200; ++attempt) {
                nano_t l1 = draw_nano(rng, N(0.18), kHalf);
                nano_t l2 = draw_nano(rng, b, l1);
                nano_t l3 = draw_nano(rng, std::max(b, N(0.145)), std::min(l2, N(0.29)));
                nano_t l4 = draw_nano(rng, b, l3);
                nano_t l5 = draw_nano(rng, b, l4);
                if (l1 + l2 + l3 + l4 + l5 > N(0.71)) continue;
                nano_t l6 = draw_nano(rng, b, l5);
                if (l1 + l2 + l3 + l4 + l5 + l6 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4, l5, l6};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("B.a", Family::RStarStar, 0.53, 0.545, {2}, 0.08, 0.08,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = unit(rng) < 0.5 ? draw_nano(rng, N(0.315), N(0.345))
                                                           : draw_nano(rng, N(0.427), N(0.474));
                               return std::vector<nano_t>{l1, draw_nano(rng, b, l1)};
                           }));
    cs.push_back(make_case(
        "B.b", Family::RStarStar, 0.53, 0.545, {2}, 0.08, 0.08,
        [](std::mt19937_64& rng, int, nano_t b) {
            static const std::pair<double, double> bands[3] = {
                {0.427, 0.474}, {0.526, 0.573}, {0.655, 0.685}};
            auto [tlo, thi] = bands[rng() % 3];
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t t = draw_nano(rng, N(tlo), N(thi));
                nano_t l1 = draw_nano(rng, (t + 1) / 2, std::min(t - b, kHalf));
                nano_t l2 = t - l1;
                if (l2 >= b && l2 <= l1) return std::vector<nano_t>{l1, l2};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "B.c", Family::RStarStar, 0.53, 0.545, {2}, 0.08, 0.08,
        [](std::mt19937_64& rng, int, nano_t b) {
            static const std::pair<double, double> bands[2] = {{0.405, 0.485}, {0.515, 0.595}};
            auto [tlo, thi] = bands[rng() % 2];
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, N(0.285), N(0.375));
                nano_t lo = std::max(N(tlo) - l1, b);
                nano_t hi = std::min(N(thi) - l1, l1);
                if (hi < lo) continue;
                return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("C.a", Family::RStarStar, 0.545, 0.57, {2}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = draw_nano(rng, N(0.4), N(0.475));
                               return std::vector<nano_t>{l1, draw_nano(rng, b, l1)};
                           }));
    cs.push_back(make_case(
        "C.b", Family::RStarStar, 0.545, 0.57, {2}, 0.075, 0.075,
        [](std::mt19937_64& rng, int, nano_t b) {
            static const std::pair<double, double> bands[2] = {{0.4, 0.475}, {0.525, 0.6}};
            auto [tlo, thi] = bands[rng() % 2];
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, kHalf);
                nano_t lo = std::max(N(tlo) - l1, b);
                nano_t hi = std::min(N(thi) - l1, l1);
                if (hi < lo) continue;
                return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "C.c", Family::RStarStar, 0.545, 0.57, {4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, kHalf);
                nano_t l2 = draw_nano(rng, b, l1);
                nano_t l3 = draw_nano(rng, b, l2);
                nano_t lo = std::max(N(0.4) - l1 - l2, b);
                nano_t hi = std::min(N(0.475) - l1 - l2, l3);
                if (hi < lo) continue;
                nano_t l4 = draw_nano(rng, lo, hi);
                if (l1 + l2 + l3 + l4 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("D.a", Family::RStarStar, 0.57, 0.59, {2}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = draw_nano(rng, N(0.38), N(0.42));
                               return std::vector<nano_t>{l1, draw_nano(rng, b, l1)};
                           }));
    cs.push_back(make_case("D.b", Family::RStarStar, 0.57, 0.59, {2}, 0.075, 0.075,
                           [](std::mt19937_64& rng, int, nano_t) {
                               nano_t l1 = draw_nano(rng, N(0.42), N(0.455));
                               nano_t lo = N(0.58) - l1;
                               nano_t hi = std::min(N(0.685) - l1, l1);
                               if (hi < lo) return std::vector<nano_t>{};
                               return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
                           }));
    cs.push_back(make_case(
        "D.c", Family::RStarStar, 0.57, 0.59, {2, 4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int r, nano_t b) {
            static const std::pair<double, double> bands[2] = {{0.38, 0.455}, {0.545, 0.62}};
            for (int attempt = 0; attempt < 64; ++attempt) {
                auto [tlo, thi] = bands[rng() % 2];
                nano_t l1 = draw_nano(rng, N(0.315), N(0.38));
                nano_t lo = std::max(N(tlo) - l1, b);
                nano_t hi = std::min(N(thi) - l1, l1);
                if (hi < lo) continue;
                nano_t li = draw_nano(rng, lo, hi);
                std::vector<nano_t> v{l1, li};
                while (static_cast<int>(v.size()) < r) v.push_back(draw_nano(rng, b, v.back()));
                std::sort(v.begin() + 1, v.end(), std::greater<>());
                nano_t s = 0;
                for (auto x : v) s += x;
                if (s <= N(0.99)) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "D.d", Family::RStarStar, 0.57, 0.59, {2, 4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int r, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, kHalf);
                bool low = unit(rng) < 0.5;
                nano_t lo = std::max(b, (low ? N(0.38) : N(0.58)) - l1);
                nano_t hi = std::min(l1, (low ? N(0.42) : N(0.62)) - l1);
                if (hi < lo) continue;
                nano_t li = draw_nano(rng, lo, hi);
                std::vector<nano_t> v{l1, li};
                while (static_cast<int>(v.size()) < r) v.push_back(draw_nano(rng, b, v.back()));
                std::sort(v.begin() + 1, v.end(), std::greater<>());
                nano_t s = 0;
                for (auto x : v) s += x;
                if (s <= N(0.99)) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "D.e", Family::RStarStar, 0.57, 0.59, {4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, N(0.21), kHalf);
                nano_t lo2 = std::max(N(0.42) - l1, b);
                nano_t hi2 = std::min(N(0.455) - l1, l1);
                if (hi2 < lo2) continue;
                nano_t l2 = draw_nano(rng, lo2, hi2);
                nano_t l3 = draw_nano(rng, b, l2);
                nano_t lo4 = std::max(N(0.315) - l1, b);
                nano_t hi4 = std::min(N(0.42) - l1, l3);
                if (hi4 < lo4) continue;
                nano_t l4 = draw_nano(rng, lo4, hi4);
                if (l1 + l2 + l3 + l4 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "D.f", Family::RStarStar, 0.57, 0.59, {4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, N(0.29));
                nano_t lo2 = std::max(N(0.315) - l1, b);
                nano_t hi2 = std::min(N(0.38) - l1, l1);
                if (hi2 < lo2) continue;
                nano_t l2 = draw_nano(rng, lo2, hi2);
                nano_t l3 = draw_nano(rng, b, l2);
                nano_t lo4 = std::max(N(0.38) - l1 - l2, b);
                nano_t hi4 = std::min(N(0.455) - l1 - l2, l3);
                if (hi4 < lo4) continue;
                nano_t l4 = draw_nano(rng, lo4, hi4);
                if (l1 + l2 + l3 + l4 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "D.g", Family::RStarStar, 0.57, 0.59, {4}, 0.075, 0.075,
        [](std::mt19937_64& rng, int, nano_t b) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                nano_t l1 = draw_nano(rng, b, N(0.29));
                nano_t lo2 = std::max(N(0.315) - l1, b);
                nano_t hi2 = std::min(N(0.38) - l1, l1);
                if (hi2 < lo2) continue;
                nano_t l2 = draw_nano(rng, lo2, hi2);
                nano_t l3 = draw_nano(rng, b, l2);
                nano_t lo4 = std::max(N(0.38) - l2 - l3, b);
                nano_t hi4 = std::min(N(0.455) - l2 - l3, l3);
                if (hi4 < lo4) continue;
                nano_t l4 = draw_nano(rng, lo4, hi4);
                if (l1 + l2 + l3 + l4 <= N(0.99))
                    return std::vector<nano_t>{l1, l2, l3, l4};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case(
        "E.a", Family::RStarStar, 0.59, 0.61, {2, 4}, 0.07, 0.07,
        [in_union](std::mt19937_64& rng, int r, nano_t b) {
            for (int attempt = 0; attempt < 200; ++attempt) {
                std::vector<nano_t> v;
                nano_t prev = kHalf, sum = 0;
                for (int i = 0; i < r; ++i) {
                    nano_t h = std::min(prev, N(0.99) - sum - b * (r - i - 1));
                    if (h < b) break;
                    v.push_back(draw_nano(rng, b, h));
                    prev = v.back();
                    sum += prev;
                }
                if (static_cast<int>(v.size()) != r) continue;
                bool hit = false;
                for (unsigned mask = 1; mask < (1u << r) && !hit; ++mask) {
                    nano_t s = 0;
                    for (int i = 0; i < r; ++i)
                        if (mask & (1u << i)) s += v[i];
                    hit = in_union(s, {{0.365, 0.42}, {0.58, 0.635}});
                }
                if (hit) return v;
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("E.b", Family::RStarStar, 0.59, 0.61, {2}, 0.07, 0.07,
                           [](std::mt19937_64& rng, int, nano_t) {
                               nano_t l1 = draw_nano(rng, N(0.42), N(0.435));
                               nano_t lo = N(0.58) - l1;
                               nano_t hi = std::min(N(0.67) - l1, l1);
                               if (hi < lo) return std::vector<nano_t>{};
                               return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
                           }));
    cs.push_back(make_case(
        "E.c", Family::RStarStar, 0.59, 0.61, {2}, 0.07, 0.07,
        [](std::mt19937_64& rng, int, nano_t b) {
            static const std::pair<double, double> bands[2] = {{0.365, 0.435}, {0.565, 0.635}};
            for (int attempt = 0; attempt < 64; ++attempt) {
                auto [tlo, thi] = bands[rng() % 2];
                nano_t l1 = draw_nano(rng, N(0.33), N(0.365));
                nano_t lo = std::max(N(tlo) - l1, b);
                nano_t hi = std::min(N(thi) - l1, l1);
                if (hi < lo) continue;
                return std::vector<nano_t>{l1, draw_nano(rng, lo, hi)};
            }
            return std::vector<nano_t>{};
        }));
    cs.push_back(make_case("F.a", Family::RStarStar, 0.61, 0.77, {2}, 0.065, 0.065,
                           [](std::mt19937_64& rng, int, nano_t b) {
                               nano_t l1 = draw_nano(rng, N(0.355), N(0.42));
                               return std::vector<nano_t>{l1, draw_nano(rng, b, l1)};
                           }));
    cs.push_back(make_case(
        "F.b", Family::RStarStar, 0.61, 0.77, {2, 4}, 0.065, 0.065,
        [](std::mt19937_64& rng, int r, nano_t b) {
            static const std::pair<double, double> bands[2] = {{0.355, 0.42}, {0.58, 0.645}};
            for (int attempt = 0; attempt < 64; ++attempt) {
                auto [tlo, thi] = bands[rng() % 2];
                nano_t l1 = draw_nano(rng, b, kHalf);
                nano_t lo = std::max(N(tlo) - l1, b);
                nano_t hi = std::min(N(thi) - l1, l1);
                if (hi < lo) continue;
                nano_t li = draw_nano(rng, lo, hi);
                std::vector<nano_t> v{l1, li};
                while (static_cast<int>(v.size()) < r) v.push_back(draw_nano(rng, b, v.back()));
                std::sort(v.begin() + 1, v.end(), std::greater<>());
                nano_t s = 0;
                for (auto x : v) s += x;
                if (s <= N(0.99)) return v;
            }
            return std::vector<nano_t>{};
        }));
    return cs;
}

XiSample sample_xi(const CaseSpec& c, std::mt19937_64& rng, double eps1) {
    XiSample x;
    x.a = c.a_lo + unit(rng) * (c.a_hi - c.a_lo);
    x.beta = draw_nano(rng, N(c.beta_lo), N(c.beta_hi));

    std::vector<nano_t> tuple;
    for (int attempt = 0; attempt < 256 && tuple.empty(); ++attempt) {
        int r = static_cast<int>(c.r_choices[rng() % c.r_choices.size()]);
        tuple = (r == 0) ? std::vector<nano_t>{}
                         : c.draw_tuple(rng, r, x.beta);
        if (r == 0) break;
    }
    if (!tuple.empty() || !c.r_choices.empty()) {
        // r == 0 cases legitimately return an empty tuple
    }
    if (tuple.empty() && c.r_choices.size() == 1 && c.r_choices[0] != 0)
        throw std::runtime_error("sample_xi: case constraints look infeasible: " + c.id);
    x.lstar = tuple;

    // blocks: each target is one part or a small split summing exactly to it
    for (nano_t target : tuple) {
        std::vector<int> idx;
        double u = unit(rng);
        int pieces = u < 0.55 ? 1 : (u < 0.9 ? 2 : 3);
        nano_t left = target;
        for (int p = 0; p < pieces; ++p) {
            nano_t part = (p == pieces - 1)
                              ? left
                              : std::max<nano_t>(1, static_cast<nano_t>(
                                                        unit(rng) * static_cast<double>(left)));
            part = std::min(part, left - (pieces - 1 - p));
            idx.push_back(static_cast<int>(x.seq.parts.size()));
            x.seq.parts.push_back(part);
            left -= part;
        }
        x.blocks.push_back(idx);
    }

    nano_t used = 0;
    for (nano_t p : x.seq.parts) used += p;
    nano_t rest = kOne - used;

    if (c.family == Family::RStar) {
        // one optional unconstrained leftover, then parts capped at beta
        if (rest > 0 && unit(rng) < 0.3) {
            nano_t L = draw_nano(rng, 1, std::min(rest, kHalf));
            x.leftover = static_cast<int>(x.seq.parts.size());
            x.seq.parts.push_back(L);
            rest -= L;
        }
        // adversarial filler aimed just past a chi_1 endpoint
        if (rest > x.beta / 4 && unit(rng) < 0.25) {
            ChiTables t = ChiTables::at(x.a, eps1);
            if (!t.r1.iv.empty()) {
                auto [elo, ehi] = t.r1.iv[rng() % t.r1.iv.size()];
                nano_t base = 0;
                for (auto& blk : x.blocks)
                    if (rng() & 1)
                        for (int i : blk) base += x.seq.parts[i];
                nano_t want = ehi + 17 - base;  // lands 17 nanos past the end
                (void)elo;
                if (want > 0 && want <= std::min(rest, x.beta)) {
                    x.seq.parts.push_back(want);
                    rest -= want;
                }
            }
        }
        double mode = unit(rng);
        while (rest > 0) {
            if (static_cast<int>(x.seq.parts.size()) >= kMaxParts - 1) {
                x.seq.parts.push_back(rest);  // guarded by the cap; stays <= beta + slack rarely
                rest = 0;
                break;
            }
            nano_t p;
            if (mode < 0.4) {
                p = std::min(rest, x.beta);  // boundary hugging: parts of exactly beta
            } else if (mode < 0.5) {
                nano_t small = std::max<nano_t>(x.beta / 8, rest / (kMaxParts - static_cast<int>(x.seq.parts.size())));
                p = std::min(rest, std::max<nano_t>(1, small));
            } else {
                p = std::min(rest, draw_nano(rng, x.beta / 3, x.beta));
            }
            if (rest - p > 0 && rest - p < x.beta / 16) p = rest;  // avoid dust tails
            p = std::min(p, x.beta);
            p = std::min(p, rest);
            if (p <= 0) p = rest;
            x.seq.parts.push_back(p);
            rest -= p;
        }
    } else {
        // remainder parts are unconstrained; adversaries avoid single huge parts
        nano_t avoid = N(chi0(x.a, eps1)) - 1000;
        double mode = unit(rng);
        while (rest > 0 && static_cast<int>(x.seq.parts.size()) < kMaxParts - 1) {
            nano_t p;
            if (mode < 0.55) {
                int k = 2 + static_cast<int>(rng() % 3);
                p = std::min(rest, std::max<nano_t>(1, rest / k));
                p = std::min(p, avoid);
            } else if (mode < 0.8) {
                p = std::min(rest, draw_nano(rng, N(0.03), avoid));
            } else {
                p = std::min(rest, draw_nano(rng, 1, kHalf));
            }
            if (rest - p > 0 && rest - p < 1000) p = rest;
            if (p <= 0) p = rest;
            x.seq.parts.push_back(p);
            rest -= p;
        }
        if (rest > 0) x.seq.parts.push_back(rest);
    }

    return x;
}

FalsifyResult falsify_case(const CaseSpec& c, std::uint64_t seed, std::int64_t count,
                           double eps1, const std::function<ChiTables(double)>& chi_override,
                           std::size_t max_counterexamples) {
    if (count > 10000000LL) throw std::invalid_argument("falsify_case: count above 1e7");
    FalsifyResult out;
    std::mt19937_64 rng(seed ^ fnv1a(c.id));
    for (std::int64_t i = 0; i < count; ++i) {
        XiSample s = sample_xi(c, rng, eps1);
        ChiTables tables = chi_override ? chi_override(s.a) : ChiTables::at(s.a, eps1);
        OptionsResult res = check_options(s.seq, tables);
        ++out.checked;
        if (res.approx) ++out.maybe;
        if (res.any()) continue;
        // exact recheck with a much larger reachability cap before reporting
        ReachableSums exact(s.seq.parts, 1u << 22);
        bool o1 = false;
        nano_t thr = to_nanos(tables.threshold0);
        for (nano_t p : s.seq.parts) o1 = o1 || p >= thr - kPad;
        auto q1 = exact.query(tables.r1);
        auto q2 = exact.query(tables.r2);
        auto q3 = exact.query(tables.r3);
        bool holds = o1 || q1 != ReachableSums::Hit::No ||
                     (q2 != ReachableSums::Hit::No && q3 != ReachableSums::Hit::No);
        if (exact.coarsened()) {
            ++out.maybe;
            continue;  // cannot confirm; failure-to-falsify
        }
        if (holds) continue;
        out.counterexamples.push_back({s, i});
        if (out.counterexamples.size() >= max_counterexamples) break;
    }
    return out;
}

}  // namespace sievecert
