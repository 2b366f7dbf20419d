#pragma once

// Exact finite sieve combinatorics over integer intervals: psi(n,z),
// S(C_d, z), and the Buchstab identity checked as an exact identity.

#include <cstdint>
#include <vector>

namespace sievecert {

struct SievedInterval {
    std::int64_t lo = 2;
    std::int64_t hi = 2;
};

// Shared, immutable prime table (built on first use, covers sqrt(1e9)).
const std::vector<std::int64_t>& small_primes();

// 1 iff every prime factor of n is >= z; psi(1, z) = 1.
int psi(std::int64_t n, double z);

// #{m : lo <= m*d <= hi, psi(m, z) = 1}
std::int64_t sifted_count(const SievedInterval& c, std::int64_t d, double z);

// S(C_d, z2) == S(C_d, z1) - sum_{z1 <= p < z2} S(C_{dp}, p), exactly.
bool buchstab_identity_check(const SievedInterval& c, std::int64_t d, double z1, double z2);

}  // namespace sievecert
