#pragma once

// The piecewise region tables chi_0..chi_3 and the option (1)/(2)/(3)
// predicate on finite length profiles.
//
// Profiles are held in integer nanos (units of 1e-9) so that block sums and
// subset-sum decisions are exact; the region queries carry +-1e-9 padding,
// matching how the structural tolerances are encoded.

#include <cstdint>
#include <optional>
#include <vector>

namespace sievecert {

using nano_t = std::int64_t;
inline constexpr nano_t kOne = 1000000000;          // 1.0 in nanos
inline constexpr nano_t kPad = 1;                   // 1e-9 tolerance
inline nano_t to_nanos(double x) { return static_cast<nano_t>(std::llround(x * 1e9)); }
inline double from_nanos(nano_t n) { return static_cast<double>(n) * 1e-9; }

struct RegionSet {
    // sorted, pairwise disjoint closed intervals within [0,1], in nanos
    std::vector<std::pair<nano_t, nano_t>> iv;

    void add(double lo, double hi);
    void normalize();
    bool contains(nano_t x, nano_t pad = kPad) const;
    bool intersects(nano_t lo, nano_t hi, nano_t pad = kPad) const;
    RegionSet with_reflection() const;  // union with {1 - x}
    std::size_t count() const { return iv.size(); }
};

// chi_0 is a scalar threshold; chi(0, a) returns the degenerate [chi0, 1].
double chi0(double a, double eps1);
RegionSet chi(int k, double a, double eps1);

struct ChiTables {
    double threshold0 = 0.0;  // chi_0(a)
    RegionSet r1, r2, r3;
    static ChiTables at(double a, double eps1);
};

struct EllSequence {
    std::vector<nano_t> parts;  // all >= 0, sum == kOne (within 1e-12 when built from doubles)

    static EllSequence from_doubles(const std::vector<double>& vals);
    std::size_t size() const { return parts.size(); }
};

struct OptionsResult {
    bool opt1 = false;
    bool opt2 = false;
    bool opt3 = false;
    bool approx = false;  // a reachable-set query was answered from a coarsened set
    bool any() const { return opt1 || opt2 || opt3; }
};

// Subset-sum reachability of one profile: exact while the number of distinct
// sums stays below a cap, coarsened to an interval union beyond it.
class ReachableSums {
  public:
    explicit ReachableSums(const std::vector<nano_t>& parts, std::size_t cap = 1 << 15);

    // YES if a sum provably lands in the padded region, NO if provably none
    // does, MAYBE only after coarsening.
    enum class Hit { Yes, No, Maybe };
    Hit query(const RegionSet& region, nano_t pad = kPad) const;
    bool coarsened() const { return coarsened_; }

  private:
    std::vector<std::pair<nano_t, nano_t>> sums_;  // disjoint [lo,hi] runs
    bool coarsened_ = false;
};

OptionsResult check_options(const EllSequence& seq, double a, double eps1);
OptionsResult check_options(const EllSequence& seq, const ChiTables& tables);

}  // namespace sievecert
