#include "quadmin/lmin.hpp"

#include <algorithm>
#include <vector>

#include "quadmin/error.hpp"

namespace quadmin {

static std::string cand_str(const Candidate& cand, uint64_t d) {
    return "(a=" + std::to_string(cand.a) + ", c=" + std::to_string(cand.c) +
           ", d=" + std::to_string(d) + ")";
}

void validate_candidate(const Candidate& cand, SquarefreeD field) {
    uint64_t d = field.d();
    if (cand.c == 0) throw InvalidCandidate("c must be positive " + cand_str(cand, d));
    if (cand.a * cand.a >= d)
        throw InvalidCandidate("a must be below sqrt(d) " + cand_str(cand, d));
    uint64_t n = d - cand.a * cand.a;
    if (field.one_mod4()) {
        if (cand.a % 2 == 0)
            throw InvalidCandidate("a must be odd when d = 1 mod 4 " + cand_str(cand, d));
        if (cand.c % 2 != 0)
            throw InvalidCandidate("c must be even when d = 1 mod 4 " + cand_str(cand, d));
        if (n % (2 * cand.c) != 0)
            throw InvalidCandidate("2c must divide d - a^2 when d = 1 mod 4 " + cand_str(cand, d));
    } else if (n % cand.c != 0) {
        throw InvalidCandidate("c must divide d - a^2 " + cand_str(cand, d));
    }
}

bool candidate_ok(const Candidate& cand, SquarefreeD field) {
    uint64_t d = field.d();
    if (cand.c == 0 || cand.a * cand.a >= d) return false;
    uint64_t n = d - cand.a * cand.a;
    if (field.one_mod4())
        return cand.a % 2 == 1 && cand.c % 2 == 0 && n % (2 * cand.c) == 0;
    return n % cand.c == 0;
}

QuadValue candidate_measure(const Candidate& cand, SquarefreeD field) {
    validate_candidate(cand, field);
    uint64_t d = field.d();
    uint64_t n = d - cand.a * cand.a;
    uint64_t t = std::max(cand.c, n / cand.c);
    // max{t, a + sqrt(d)} decided exactly
    if (quad_sign(i128(cand.a) - t, 1, d) > 0)
        return qv_normalize(cand.a, 1, field.eps_den(), field);
    return qv_normalize(t, 0, field.eps_den(), field);
}

Candidate initial_upper_bound_witness(SquarefreeD field) {
    uint64_t d = field.d();
    uint64_t s = isqrt64(d);
    uint64_t m = (s % 2 == d % 2) ? s : s - 1;
    return Candidate{m, 2};
}

QuadValue initial_upper_bound(SquarefreeD field) {
    return candidate_measure(initial_upper_bound_witness(field), field);
}

// ascending divisors of n by trial division
static void divisors_of(uint64_t n, std::vector<uint64_t>& out) {
    out.clear();
    uint64_t p = 1;
    for (; p * p < n; ++p)
        if (n % p == 0) out.push_back(p);
    size_t lo_count = out.size();
    if (p * p == n) out.push_back(p);
    for (size_t i = lo_count; i-- > 0;) out.push_back(n / out[i]);
}

LminResult lmin(SquarefreeD field) {
    uint64_t d = field.d();
    bool one4 = field.one_mod4();
    Candidate best_w = initial_upper_bound_witness(field);
    QuadValue best = candidate_measure(best_w, field);
    std::vector<uint64_t> divs;
    for (uint64_t a = one4 ? 1 : 0; a * a < d; a += one4 ? 2 : 1) {
        // every measure with this a is at least eps*(a + sqrt d); once that
        // strictly exceeds the incumbent, larger a cannot win or tie
        if (qv_cmp(qv_normalize(a, 1, field.eps_den(), field), best) > 0) break;
        uint64_t n = d - a * a;
        divisors_of(one4 ? n / 2 : n, divs);
        for (uint64_t c : divs) {
            if (one4 && c % 2 != 0) continue;
            // divisors are ascending: once eps*c strictly exceeds the
            // incumbent nothing later can win or tie
            if (qv_cmp(qv_rat(c, field.eps_den(), field), best) > 0) break;
            if (qv_cmp(qv_rat(n / c, field.eps_den(), field), best) > 0) continue;
            Candidate cand{a, c};
            QuadValue m = candidate_measure(cand, field);
            auto cmp = qv_cmp(m, best);
            if (cmp > 0) continue;
            if (cmp < 0 || std::pair(c, a) < std::pair(best_w.c, best_w.a)) {
                best = m;
                best_w = cand;
            }
        }
    }
    MeasureResult mr = mahler_measure(canonicalize(int64_t(best_w.a), 1, int64_t(best_w.c), field));
    if (!qv_eq(mr.value, best)) throw InternalError("lmin witness measure mismatch");
    return LminResult{best, best_w, mr};
}

QuadValue lmin_bruteforce(SquarefreeD field) {
    if (field.d() > 500)
        throw OracleTooLarge("exhaustive oracle is limited to d <= 500, got " +
                             std::to_string(field.d()));
    bool have = false;
    QuadValue best = qv_int(0, field);
    for_each_small_quadratic(field, [&](i128, i128, i128, uint64_t, const QuadValue& m) {
        if (!have || qv_cmp(m, best) < 0) {
            best = m;
            have = true;
        }
    });
    if (!have) throw InternalError("no quadratic with roots in the field was found");
    return best;
}

void for_each_small_quadratic(
    SquarefreeD field,
    const std::function<void(i128, i128, i128, uint64_t, const QuadValue&)>& visit) {
    uint64_t d = field.d();
    // every polynomial of measure M < sqrt(disc) has A <= M, |C| <= M and
    // |B| < 2M, so this box misses none of them
    int64_t s = int64_t(isqrt64(field.disc())) + 1;
    for (int64_t A = 1; A <= s; ++A) {
        for (int64_t B = -2 * s; B <= 2 * s; ++B) {
            for (int64_t C = -s; C <= s; ++C) {
                i128 disc = i128(B) * B - 4 * i128(A) * C;
                if (disc <= 0) continue;
                if (i128_gcd(i128_gcd(A, B), C) != 1) continue;
                u128 fd = u128(disc) / d;
                if (u128(disc) % d != 0) continue;
                uint64_t f = isqrt64(uint64_t(fd));
                if (u128(f) * f != fd) continue;
                // roots (-B +- f sqrt(d)) / 2A; multiply |roots| > 1 into A
                int big1 = quad_sign(i128(-B) - 2 * A, f, d) > 0    ? 1
                           : quad_sign(i128(-B) + 2 * A, f, d) < 0 ? -1
                                                                   : 0;
                int big2 = quad_sign(i128(-B) - 2 * A, -i128(f), d) > 0    ? 1
                           : quad_sign(i128(-B) + 2 * A, -i128(f), d) < 0 ? -1
                                                                          : 0;
                QuadValue m = qv_int(A, field);
                if (big1 != 0 && big2 != 0) {
                    m = qv_int(i128_abs(C), field);
                } else if (big1 != 0) {
                    m = (big1 > 0) ? qv_normalize(-B, f, 2, field)
                                   : qv_normalize(B, -i128(f), 2, field);
                } else if (big2 != 0) {
                    m = (big2 > 0) ? qv_normalize(-B, -i128(f), 2, field)
                                   : qv_normalize(B, f, 2, field);
                }
                visit(A, B, C, f, m);
            }
        }
    }
}

} // namespace quadmin
