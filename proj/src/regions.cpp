#include "sievecert/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sievecert {

void RegionSet::add(double lo, double hi) {
    iv.emplace_back(to_nanos(lo), to_nanos(hi));
    normalize();
}

void RegionSet::normalize() {
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<nano_t, nano_t>> out;
    for (auto [lo, hi] : iv) {
        if (lo > hi) std::swap(lo, hi);
        if (!out.empty() && lo <= out.back().second) {
            out.back().second = std::max(out.back().second, hi);
        } else {
            out.emplace_back(lo, hi);
        }
    }
    iv = std::move(out);
}

bool RegionSet::contains(nano_t x, nano_t pad) const {
    for (auto [lo, hi] : iv)
        if (x >= lo - pad && x <= hi + pad) return true;
    return false;
}

bool RegionSet::intersects(nano_t lo, nano_t hi, nano_t pad) const {
    for (auto [l, h] : iv)
        if (hi >= l - pad && lo <= h + pad) return true;
    return false;
}

RegionSet RegionSet::with_reflection() const {
    RegionSet r = *this;
    for (auto [lo, hi] : iv) r.iv.emplace_back(kOne - hi, kOne - lo);
    r.normalize();
    return r;
}

namespace {

void require_a(double a, double eps1) {
    if (a < 0.475 - eps1 * 1e5 - 1e-9 || a > 0.77 + 1e-9)
        throw std::domain_error("chi: a outside the supported range");
}

RegionSet interval_set(std::initializer_list<std::pair<double, double>> spans, double eps1) {
    RegionSet r;
    for (auto [lo, hi] : spans) r.add(lo - eps1, hi + eps1);
    return r;
}

}  // namespace

double chi0(double a, double eps1) {
    require_a(a, eps1);
    if (a <= 0.53) return 0.290 - eps1;
    if (a <= 0.545) return 0.315 - eps1;
    if (a <= 0.57) return 0.335 - eps1;
    if (a <= 0.59) return 0.330 - eps1;
    if (a <= 0.61) return 0.330 - eps1;
    return 0.320 - eps1;
}

RegionSet chi(int k, double a, double eps1) {
    require_a(a, eps1);
    if (k == 0) {
        RegionSet r;
        r.iv.emplace_back(to_nanos(chi0(a, eps1)), kOne);
        return r;
    }
    auto tilde1 = [&]() -> RegionSet {
        if (a <= 0.53) return interval_set({{0.290, 0.360}}, eps1);
        if (a <= 0.545) return interval_set({{0.315, 0.345}, {0.427, 0.474}}, eps1);
        if (a <= 0.57) return interval_set({{0.400, 0.475}}, eps1);
        if (a <= 0.59) return interval_set({{0.380, 0.420}}, eps1);
        if (a <= 0.61) return interval_set({{0.365, 0.420}}, eps1);
        return interval_set({{0.355, 0.420}}, eps1);
    };
    if (k == 1) return tilde1().with_reflection();
    if (k == 2) {
        if (a <= 0.53) return chi(1, a, eps1);
        if (a <= 0.545) return interval_set({{0.405, 0.485}, {0.515, 0.595}}, eps1);
        if (a <= 0.57) return chi(1, a, eps1);
        if (a <= 0.59) return interval_set({{0.380, 0.455}, {0.545, 0.620}}, eps1);
        if (a <= 0.61) return interval_set({{0.365, 0.435}, {0.565, 0.635}}, eps1);
        return chi(1, a, eps1);
    }
    if (k == 3) {
        if (a <= 0.53) return chi(1, a, eps1);
        if (a <= 0.545) return interval_set({{0.285, 0.375}, {0.625, 0.715}}, eps1);
        if (a <= 0.57) return chi(1, a, eps1);
        if (a <= 0.59) return interval_set({{0.315, 0.420}, {0.580, 0.685}}, eps1);
        if (a <= 0.61) return interval_set({{0.330, 0.420}, {0.580, 0.670}}, eps1);
        return chi(1, a, eps1);
    }
    throw std::invalid_argument("chi: k must be 0..3");
}

ChiTables ChiTables::at(double a, double eps1) {
    ChiTables t;
    t.threshold0 = chi0(a, eps1);
    t.r1 = chi(1, a, eps1);
    t.r2 = chi(2, a, eps1);
    t.r3 = chi(3, a, eps1);
    return t;
}

EllSequence EllSequence::from_doubles(const std::vector<double>& vals) {
    EllSequence s;
    s.parts.reserve(vals.size());
    nano_t total = 0;
    for (double v : vals) {
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw std::invalid_argument("EllSequence: parts must lie in [0,1]");
        nano_t n = to_nanos(v);
        s.parts.push_back(n);
        total += n;
    }
    if (std::llabs(total - kOne) > 10)  // 1e-12-scale slack survives rounding to nanos
        throw std::invalid_argument("EllSequence: parts must sum to 1");
    // absorb the rounding residue into the largest part so sums are exact
    if (total != kOne && !s.parts.empty()) {
        auto it = std::max_element(s.parts.begin(), s.parts.end());
        *it += kOne - total;
    }
    return s;
}

ReachableSums::ReachableSums(const std::vector<nano_t>& parts, std::size_t cap) {
    sums_.emplace_back(0, 0);
    std::vector<std::pair<nano_t, nano_t>> next;
    for (nano_t x : parts) {
        if (x == 0) continue;
        next.clear();
        next.reserve(sums_.size() * 2);
        // merge sums_ and sums_+x (both sorted)
        std::size_t i = 0, j = 0;
        auto push = [&](std::pair<nano_t, nano_t> r) {
            if (!next.empty() && r.first <= next.back().second)
                next.back().second = std::max(next.back().second, r.second);
            else
                next.push_back(r);
        };
        while (i < sums_.size() || j < sums_.size()) {
            std::pair<nano_t, nano_t> a{0, 0};
            bool take_i;
            if (i < sums_.size() && j < sums_.size())
                take_i = sums_[i].first <= sums_[j].first + x;
            else
                take_i = i < sums_.size();
            if (take_i) {
                a = sums_[i++];
            } else {
                a = {sums_[j].first + x, sums_[j].second + x};
                ++j;
            }
            push(a);
        }
        sums_.swap(next);
        if (sums_.size() > cap) {
            // coarsen: close the smallest gaps until the run count fits
            std::vector<nano_t> gaps;
            gaps.reserve(sums_.size());
            for (std::size_t k = 1; k < sums_.size(); ++k)
                gaps.push_back(sums_[k].first - sums_[k - 1].second);
            std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
            nano_t close = std::max<nano_t>(1, gaps[gaps.size() / 2]);
            std::vector<std::pair<nano_t, nano_t>> merged;
            for (auto& r : sums_) {
                if (!merged.empty() && r.first - merged.back().second <= close)
                    merged.back().second = r.second;
                else
                    merged.push_back(r);
            }
            sums_.swap(merged);
            coarsened_ = true;
        }
    }
}

ReachableSums::Hit ReachableSums::query(const RegionSet& region, nano_t pad) const {
    bool touch = false;
    for (auto [lo, hi] : sums_) {
        if (lo == hi) {
            if (region.contains(lo, pad)) return Hit::Yes;
        } else if (region.intersects(lo, hi, pad)) {
            // run endpoints are achievable sums even after coarsening
            if (region.contains(lo, pad) || region.contains(hi, pad)) return Hit::Yes;
            touch = true;
        }
    }
    if (touch) return coarsened_ ? Hit::Maybe : Hit::Yes;
    return Hit::No;
}

OptionsResult check_options(const EllSequence& seq, double a, double eps1) {
    return check_options(seq, ChiTables::at(a, eps1));
}

OptionsResult check_options(const EllSequence& seq, const ChiTables& tables) {
    if (seq.parts.size() > 10000)
        throw std::invalid_argument("check_options: profile length above the enforced cap");
    OptionsResult out;
    nano_t thr = to_nanos(tables.threshold0);
    for (nano_t x : seq.parts)
        if (x >= thr - kPad) {
            out.opt1 = true;
            break;
        }

    ReachableSums reach(seq.parts);
    auto decide = [&](const RegionSet& r, bool& flag) {
        auto h = reach.query(r);
        if (h == ReachableSums::Hit::Yes) flag = true;
        if (h == ReachableSums::Hit::Maybe) {
            flag = true;  // failure-to-falsify; callers see the approx marker
            out.approx = true;
        }
    };
    decide(tables.r1, out.opt2);
    bool h2 = false, h3 = false;
    decide(tables.r2, h2);
    decide(tables.r3, h3);
    out.opt3 = h2 && h3;
    return out;
}

}  // namespace sievecert
