#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace quadmin {

// Flat integer core of the range scan. Produces the same minimum and the
// same tie-broken witness as the reference lmin(), but works entirely in
// machine integers: every intermediate value is u + v*sqrt(d) with
// v in {0, 1}, and L(d) = (u + v*sqrt(d)) / eps_den.
struct KernelResult {
    uint64_t u;
    int v;
    uint32_t witness_a;
    uint32_t witness_c;
};

struct KernelScratch {
    std::vector<uint64_t> divs;
    std::vector<std::pair<uint64_t, unsigned>> factors;
};

// primes must contain every prime up to sqrt(d)
KernelResult lmin_kernel(uint64_t d, const std::vector<uint32_t>& primes,
                         KernelScratch& scratch);

std::vector<uint32_t> primes_upto(uint32_t n);

// flags[i] = 1 iff lo + i is square-free (entries below 2 are forced to 0)
std::vector<uint8_t> squarefree_flags(uint64_t lo, uint64_t hi);

} // namespace quadmin
