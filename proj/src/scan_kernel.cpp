#include "quadmin/scan_kernel.hpp"

#include <algorithm>

#include "quadmin/error.hpp"
#include "quadmin/int128.hpp"

namespace quadmin {

std::vector<uint32_t> primes_upto(uint32_t n) {
    std::vector<uint8_t> comp(size_t(n) + 1, 0);
    std::vector<uint32_t> out;
    for (uint32_t p = 2; p <= n; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (uint64_t m = uint64_t(p) * p; m <= n; m += p) comp[size_t(m)] = 1;
    }
    return out;
}

std::vector<uint8_t> squarefree_flags(uint64_t lo, uint64_t hi) {
    std::vector<uint8_t> flags(hi - lo + 1, 1);
    auto primes = primes_upto(uint32_t(isqrt64(hi)));
    for (uint32_t p : primes) {
        uint64_t sq = uint64_t(p) * p;
        for (uint64_t m = (lo + sq - 1) / sq * sq; m <= hi; m += sq) flags[m - lo] = 0;
    }
    for (uint64_t v = lo; v < 2 && v <= hi; ++v) flags[v - lo] = 0;
    return flags;
}

// sign of (u1 - u2) + (v1 - v2) sqrt(d) with v in {0, 1}
static inline int cmp_uv(uint64_t u1, int v1, uint64_t u2, int v2, uint64_t d) {
    if (v1 == v2) return u1 < u2 ? -1 : u1 > u2 ? 1 : 0;
    // dv = +-1: compare |du| with sqrt(d); equality impossible (d square-free)
    if (v1 > v2) {
        if (u1 >= u2) return 1;
        uint64_t du = u2 - u1;
        return u128(du) * du > d ? -1 : 1;
    }
    if (u2 >= u1) return -1;
    uint64_t du = u1 - u2;
    return u128(du) * du > d ? 1 : -1;
}

static void push_divisors(uint64_t n, const std::vector<uint32_t>& primes,
                          KernelScratch& s) {
    s.factors.clear();
    uint64_t m = n;
    for (uint32_t p : primes) {
        if (uint64_t(p) * p > m) break;
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        s.factors.emplace_back(p, e);
    }
    if (m > 1) s.factors.emplace_back(m, 1); // primes cover sqrt(n): m is prime
    s.divs.clear();
    s.divs.push_back(1);
    for (auto [p, e] : s.factors) {
        size_t count = s.divs.size();
        uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < count; ++j) s.divs.push_back(s.divs[j] * pk);
        }
    }
    std::sort(s.divs.begin(), s.divs.end());
}

KernelResult lmin_kernel(uint64_t d, const std::vector<uint32_t>& primes,
                         KernelScratch& scratch) {
    bool one4 = d % 4 == 1;
    uint64_t sq = isqrt64(d);
    uint64_t m0 = (sq % 2 == d % 2) ? sq : sq - 1;

    // seed with the (m0, 2) element: max{2, m0 + sqrt d, (d - m0^2)/2}
    KernelResult best{m0, 1, uint32_t(m0), 2};
    {
        uint64_t n = d - m0 * m0;
        uint64_t t = std::max<uint64_t>(2, n / 2);
        // m0 + sqrt(d) < t iff (t - m0)^2 > d
        if (t > m0 && u128(t - m0) * (t - m0) > d) best = {t, 0, uint32_t(m0), 2};
    }

    for (uint64_t a = one4 ? 1 : 0; a * a < d; a += one4 ? 2 : 1) {
        if (cmp_uv(a, 1, best.u, best.v, d) > 0) break;
        uint64_t n = d - a * a;
        push_divisors(one4 ? n / 2 : n, primes, scratch);
        for (uint64_t c : scratch.divs) {
            if (one4 && c % 2 != 0) continue;
            if (cmp_uv(c, 0, best.u, best.v, d) > 0) break;
            uint64_t ndc = n / c;
            if (cmp_uv(ndc, 0, best.u, best.v, d) > 0) continue;
            uint64_t t = std::max(c, ndc);
            uint64_t mu;
            int mv;
            if (t <= a || u128(t - a) * (t - a) < d) {
                mu = a;
                mv = 1;
            } else {
                mu = t;
                mv = 0;
            }
            int cmp = cmp_uv(mu, mv, best.u, best.v, d);
            if (cmp > 0) continue;
            if (cmp < 0 || std::pair(c, a) < std::pair<uint64_t, uint64_t>(
                                                  best.witness_c, best.witness_a)) {
                best = {mu, mv, uint32_t(a), uint32_t(c)};
            }
        }
    }
    return best;
}

} // namespace quadmin
