#include "sievecert/sieve_sets.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sievecert {

namespace {

std::vector<std::int64_t> build_primes(std::int64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return primes;
}

void validate(const SievedInterval& c) {
    if (c.lo < 2 || c.hi < c.lo || c.hi > 1000000000LL)
        throw std::invalid_argument("sieved interval must satisfy 2 <= lo <= hi <= 1e9");
}

}  // namespace

const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = build_primes(100000);
    return primes;
}

int psi(std::int64_t n, double z) {
    if (n < 1) throw std::invalid_argument("psi: n must be >= 1");
    if (n == 1) return 1;  // empty product
    for (std::int64_t p : small_primes()) {
        if (static_cast<double>(p) >= z) return 1;
        if (p * p > n) break;
        if (n % p == 0) return 0;
    }
    // n has no prime factor <= min(sqrt(n), z); whatever remains is a prime > sqrt(n)
    return static_cast<double>(n) >= z ? 1 : 0;
}

std::int64_t sifted_count(const SievedInterval& c, std::int64_t d, double z) {
    validate(c);
    if (d < 1) throw std::invalid_argument("sifted_count: d must be >= 1");
    std::int64_t mlo = (c.lo + d - 1) / d;
    std::int64_t mhi = c.hi / d;
    if (mlo < 1) mlo = 1;
    if (mhi < mlo) return 0;
    if (mhi - mlo > 20000000LL)
        throw std::invalid_argument("sifted_count: range too long for desk-scale counting");

    // Segmented marking by every prime < z up to sqrt(mhi); survivors are 1,
    // primes above sqrt(mhi) (kept iff >= z), or z-rough composites.
    std::size_t n = static_cast<std::size_t>(mhi - mlo + 1);
    std::vector<bool> has_small(n, false);
    double sq = std::sqrt(static_cast<double>(mhi)) + 1.0;
    for (std::int64_t p : small_primes()) {
        if (static_cast<double>(p) >= z || static_cast<double>(p) > sq) break;
        std::int64_t first = ((mlo + p - 1) / p) * p;
        for (std::int64_t m = first; m <= mhi; m += p) has_small[m - mlo] = true;
    }
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (has_small[i]) continue;
        std::int64_t m = mlo + static_cast<std::int64_t>(i);
        if (m == 1) {
            ++count;
        } else if (static_cast<double>(m) > sq) {
            // unmarked with no factor up to sqrt: m is prime
            if (static_cast<double>(m) >= z) ++count;
        } else if (psi(m, z)) {
            ++count;
        }
    }
    return count;
}

bool buchstab_identity_check(const SievedInterval& c, std::int64_t d, double z1, double z2) {
    validate(c);
    if (!(z1 >= 2.0) || !(z1 < z2)) throw std::invalid_argument("need 2 <= z1 < z2");
    if (z2 > 100000.0 + 1.0)
        throw std::invalid_argument("buchstab_identity_check: z2 beyond the prime table");
    std::int64_t lhs = sifted_count(c, d, z2);
    std::int64_t rhs = sifted_count(c, d, z1);
    for (std::int64_t p : small_primes()) {
        if (static_cast<double>(p) < z1) continue;
        if (static_cast<double>(p) >= z2) break;
        rhs -= sifted_count(c, d * p, static_cast<double>(p));
    }
    return lhs == rhs;
}

}  // namespace sievecert
