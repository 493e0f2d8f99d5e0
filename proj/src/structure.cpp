#include "quadmin/structure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "quadmin/error.hpp"

namespace quadmin {

int jacobi(int64_t a, uint64_t n) {
    if (n == 0 || n % 2 == 0) throw InvalidModulus("Jacobi symbol needs odd n > 0");
    int64_t m = a % int64_t(n);
    if (m < 0) m += int64_t(n);
    uint64_t u = uint64_t(m), v = n;
    int t = 1;
    while (u != 0) {
        while (u % 2 == 0) {
            u /= 2;
            if (v % 8 == 3 || v % 8 == 5) t = -t;
        }
        std::swap(u, v);
        if (u % 4 == 3 && v % 4 == 3) t = -t;
        u %= v;
    }
    return v == 1 ? t : 0;
}

bool is_exceptional(SquarefreeD field) {
    if (field.mod8() == 1) return false;
    uint64_t d = field.d();
    // p < sqrt(disc)/2: p*p < d for d = 2,3 mod 4; 4 p*p < d for d = 5 mod 8
    bool quarter = field.one_mod4();
    for (uint64_t p = 3; quarter ? 4 * p * p < d : p * p < d; p += 2) {
        if (!is_prime64(p) || d % p == 0) continue;
        if (jacobi(int64_t(d % p), p) != -1) return false;
    }
    return true;
}

uint64_t largest_odd_divisor_below_sqrt(SquarefreeD field) {
    uint64_t d = field.d();
    uint64_t best = 1;
    for (uint64_t a = 1; a * a < d; ++a)
        if (a % 2 == 1 && d % a == 0) best = a;
    return best;
}

LminResult nonresidue_lmin(SquarefreeD field) {
    if (!is_exceptional(field))
        throw NotExceptional("d = " + std::to_string(field.d()) +
                             " has a small split prime; the closed form does not apply");
    uint64_t d = field.d();
    bool have = false;
    QuadValue best = qv_int(0, field);
    Candidate best_w{0, 0};
    auto consider = [&](uint64_t a, uint64_t c) {
        Candidate cand{a, c};
        if (!candidate_ok(cand, field)) return;
        QuadValue m = candidate_measure(cand, field);
        if (!have || qv_cmp(m, best) < 0 ||
            (qv_cmp(m, best) == 0 && std::pair(c, a) < std::pair(best_w.c, best_w.a))) {
            best = m;
            best_w = cand;
            have = true;
        }
    };
    for (uint64_t A = 1; A * A < d; A += 2) {
        if (d % A != 0) continue;
        // c = 2A: a = kA with k the parity-matched integer just below sqrt(d)/A
        uint64_t f = isqrt64(d / (A * A));
        uint64_t mA = (f % 2 == d % 2) ? f : f - 1;
        consider(mA * A, 2 * A);
        if (mA >= 2) consider((mA - 2) * A, 2 * A);
        if (!field.one_mod4()) {
            // c = A: a = kA with k at most floor(sqrt(d)/A)
            uint64_t k1 = isqrt64(d) / A;
            consider(k1 * A, A);
            if (k1 >= 1) consider((k1 - 1) * A, A);
        }
    }
    if (!have) throw InternalError("no admissible structured element found");
    MeasureResult mr =
        mahler_measure(canonicalize(int64_t(best_w.a), 1, int64_t(best_w.c), field));
    if (!qv_eq(mr.value, best)) throw InternalError("nonresidue witness measure mismatch");
    return LminResult{best, best_w, mr};
}

ExceptionalForm decompose_exceptional(SquarefreeD field) {
    if (!is_exceptional(field))
        throw NotExceptional("d = " + std::to_string(field.d()) + " is not exceptional");
    uint64_t d = field.d();
    uint64_t N = isqrt64(d);
    uint64_t r = d - N * N;
    bool quarter = field.one_mod4();
    uint64_t A, base;
    int sign;
    if (r % 2 == 0) {
        A = quarter ? r / 4 : r / 2;
        base = N;
        sign = 1;
        if (quarter && r % 4 != 0) throw DecompositionFailed("remainder not divisible by 4");
    } else {
        uint64_t s = 2 * N + 1 - r; // (N+1)^2 - d
        A = quarter ? s / 4 : s / 2;
        base = N + 1;
        sign = -1;
        if (quarter && s % 4 != 0) throw DecompositionFailed("remainder not divisible by 4");
    }
    if (A == 0 || A % 2 == 0 || d % A != 0 || base % A != 0)
        throw DecompositionFailed("no valid odd divisor for d = " + std::to_string(d));
    uint64_t t = base / A;
    uint64_t k;
    if (quarter) {
        if (t % 2 == 0) throw DecompositionFailed("multiplier must be odd when d = 1 mod 4");
        k = (t + 1) / 2;
    } else {
        k = t;
    }
    // A < sqrt(disc)/2 and the reconstruction must give back d
    if (4 * A * A >= field.disc()) throw DecompositionFailed("divisor too large");
    u128 b2 = u128(base) * base;
    u128 rec = sign > 0 ? b2 + (quarter ? 4 : 2) * u128(A) : b2 - (quarter ? 4 : 2) * u128(A);
    if (rec != d) throw DecompositionFailed("reconstruction mismatch");
    return ExceptionalForm{A, k, quarter, sign};
}

static uint64_t tonelli_shanks(uint64_t a, uint64_t p) {
    // p odd prime, (a/p) = 1, 0 < a < p
    if (p % 4 == 3) return powmod64(a, (p + 1) / 4, p);
    uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    uint64_t z = 2;
    while (jacobi(int64_t(z), p) != -1) ++z;
    uint64_t m = s;
    uint64_t c = powmod64(z, q, p);
    uint64_t t = powmod64(a, q, p);
    uint64_t r = powmod64(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod64(tt, tt, p); ++i; }
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod64(b, b, p);
        m = i;
        c = mulmod64(b, b, p);
        t = mulmod64(t, c, p);
        r = mulmod64(r, b, p);
    }
    return r;
}

static uint64_t inverse_mod(uint64_t a, uint64_t m) {
    i128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        i128 qq = r / nr;
        i128 tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InternalError("not invertible");
    if (t < 0) t += m;
    return uint64_t(t);
}

uint64_t sqrt_mod_prime_power(uint64_t a, uint64_t p, unsigned l) {
    if (l == 0) throw InvalidModulus("exponent must be positive");
    if (!is_prime64(p)) throw InvalidModulus(std::to_string(p) + " is not prime");
    u128 qq = 1;
    for (unsigned i = 0; i < l; ++i) {
        qq *= p;
        if (qq > (u128(1) << 62)) throw OutOfRange("p^l too large");
    }
    uint64_t q = uint64_t(qq);
    a %= q;
    if (a % p == 0) throw RamifiedPrime("p divides a: sqrt mod p^l undefined for units only");
    if (p == 2) {
        if (l == 1) return 1;
        if (l == 2) {
            if (a % 4 != 1) throw NotAResidue("a = 3 mod 4 is not a square mod 4");
            return 1;
        }
        if (a % 8 != 1) throw NotAResidue("odd squares are 1 mod 8");
        uint64_t r = 1;
        for (unsigned i = 3; i < l; ++i) {
            u128 diff = (u128(r) * r - a) & ((u128(1) << (i + 1)) - 1);
            if (diff != 0) r += uint64_t(1) << (i - 1);
        }
        // the four roots are +-r and +-r + 2^(l-1)
        uint64_t half = uint64_t(1) << (l - 1);
        uint64_t best = q;
        for (uint64_t cand : {r % q, (q - r % q) % q, (r % q + half) % q,
                              (q - (r % q + half) % q) % q})
            best = std::min(best, cand);
        return best;
    }
    if (jacobi(int64_t(a % p), p) != 1)
        throw NotAResidue(std::to_string(a) + " is not a quadratic residue mod " +
                          std::to_string(p));
    uint64_t r = tonelli_shanks(a % p, p);
    uint64_t mod = p;
    for (unsigned i = 1; i < l; ++i) {
        mod *= p;
        // Hensel: r <- r - (r^2 - a) / (2r) mod p^(i+1)
        uint64_t inv = inverse_mod(2 * r % mod, mod);
        u128 r2 = u128(r) * r % mod;
        uint64_t diff = uint64_t((r2 + mod - a % mod) % mod);
        r = uint64_t((u128(r) + mod - u128(diff) * inv % mod) % mod);
    }
    return std::min(r, q - r);
}

SplitPrime first_split_prime(SquarefreeD field) {
    uint64_t d = field.d();
    for (uint64_t p = 3; p < 10'000'000; p += 2) {
        if (!is_prime64(p) || d % p == 0) continue;
        if (jacobi(int64_t(d % p), p) == 1)
            return SplitPrime{p, 4 * p * p < field.disc()};
    }
    throw InternalError("no split prime found below 10^7");
}

// exact comparison of x (positive) against (sqrt(w) - 1)/t, i.e. of
// t*x + 1 against sqrt(w), for w in {3, 5}
static int cmp_breakpoint(const QuadValue& x, int64_t t, uint64_t w) {
    i128 P = t * x.p + x.den, Q = t * x.q, DEN = x.den;
    if (x.q == 0) {
        // rational: compare P^2 with w DEN^2
        mpz_class lhs = i128_to_mpz(P);
        lhs *= lhs;
        mpz_class rhs = i128_to_mpz(DEN);
        rhs *= rhs;
        rhs *= static_cast<unsigned long>(w);
        return cmp(lhs, rhs);
    }
    if (x.field.d() == w)
        return quad_sign(P, Q - DEN, w);
    // cross-field: 512-bit numeric decision (equality would need the value
    // to lie in Q(sqrt w), excluded here)
    mpf_class lhs = qv_to_mpf(x, 512);
    mpf_class rhs(0, 512);
    {
        mpf_class ww(static_cast<unsigned long>(w), 512);
        mpf_sqrt(rhs.get_mpf_t(), ww.get_mpf_t());
        rhs = (rhs - 1) / t;
    }
    return cmp(lhs, rhs);
}

mpf_class lambda_bound(const QuadValue& lambda) {
    if (qv_sign(lambda) <= 0 || qv_cmp(lambda, qv_int(1, lambda.field)) >= 0)
        throw OutOfRange("lambda must lie in (0, 1)");
    mpf_class lf = qv_to_mpf(lambda, 512);
    if (cmp_breakpoint(lambda, 4, 5) < 0) {
        mpf_class arg = (1 - lf) * (1 - lf) - 4 * lf * lf;
        if (arg < 0) arg = 0; // exact zero only at the breakpoint itself
        mpf_class root(0, 512);
        mpf_sqrt(root.get_mpf_t(), arg.get_mpf_t());
        return mpf_class((1 + lf + root) / 2);
    }
    if (cmp_breakpoint(lambda, 2, 3) < 0) return mpf_class(1 / (4 * lf));
    return mpf_class((1 + lf) / 2);
}

BoundCertificate residue_upper_bound(SquarefreeD field, uint64_t q) {
    uint64_t d = field.d();
    if (q < 3) throw InvalidModulus("modulus must be at least 3");
    // q must be a prime power; p = smallest prime factor
    uint64_t p = q;
    for (uint64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    unsigned l = 0;
    for (uint64_t t = q; t > 1; t /= p) {
        if (t % p != 0) throw InvalidModulus(std::to_string(q) + " is not a prime power");
        ++l;
    }
    if (d % p == 0)
        throw RamifiedPrime(std::to_string(p) + " divides d = " + std::to_string(d));

    uint64_t r0, c, lam_num;
    if (p == 2) {
        if (l < 2) throw InvalidModulus("powers of two need l >= 2");
        r0 = sqrt_mod_prime_power(d, 2, l); // validates d mod 8
        c = q / 2;       // denominator 2^(l-1)
        lam_num = q / 4; // lambda = 2^(l-2)/sqrt(d)
    } else {
        r0 = sqrt_mod_prime_power(d, p, l);
        c = 2 * q;
        lam_num = q;
    }
    if (u128(lam_num) * lam_num >= d)
        throw OutOfRange("lambda = " + std::to_string(lam_num) + "/sqrt(" + std::to_string(d) +
                         ") is not below 1");

    // representative r = r0 mod (c for even q, q for odd q), with d's parity
    // for odd q, largest such value not exceeding floor(sqrt(d))
    int64_t s = int64_t(isqrt64(d));
    int64_t r;
    if (p == 2) {
        r = s - int64_t((uint64_t(s) + c - r0 % c) % c);
    } else {
        uint64_t base = (r0 % 2 == d % 2) ? r0 : r0 + q; // q odd fixes parity
        base %= c;
        r = s - int64_t((uint64_t(s) + c - base) % c);
    }

    MeasureResult a1 = measure(r, 1, int64_t(c), field);
    MeasureResult a2 = measure(r - int64_t(c), 1, int64_t(c), field);
    QuadValue achieved = qv_lt(a2.value, a1.value) ? a2.value : a1.value;

    QuadValue lam = qv_normalize(0, lam_num, d, field); // lam_num/sqrt(d)
    mpf_class bound = lambda_bound(lam);

    // certificate postconditions
    LminResult ref = lmin(field);
    if (qv_cmp(achieved, ref.value) < 0)
        throw InternalError("certificate element beats the true minimum");
    mpf_class ratio = qv_to_mpf(achieved, 512);
    {
        mpf_class sq(0, 512), dd(static_cast<unsigned long>(field.disc()), 512);
        mpf_sqrt(sq.get_mpf_t(), dd.get_mpf_t());
        ratio /= sq;
    }
    if (ratio > bound + 1e-9) throw InternalError("certificate bound violated");

    return BoundCertificate{q, r0, r, lam, bound, a1, a2, achieved};
}

std::optional<uint64_t> suggest_modulus(SquarefreeD field) {
    double target = 0.5 * (std::sqrt(3.0) - 1) * std::sqrt(double(field.d()));
    if (field.mod8() == 1) {
        // lambda = 2^(l-2)/sqrt(d); l = 2 always fits (d >= 17 here)
        unsigned l = 2;
        while (double(1ull << (l - 1)) < target) ++l;
        return uint64_t(1) << l;
    }
    uint64_t p = first_split_prime(field).p;
    if (u128(p) * p >= field.d()) return std::nullopt; // lambda >= 1 even for l = 1
    uint64_t q = p;
    while (double(q) * p < target) q *= p;
    return q;
}

QuadValue prime_class_bound(uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime64(p))
        throw OutOfRange("p must be an odd prime, got " + std::to_string(p));
    if (p > 1'000'000) throw OutOfRange("p too large");
    uint64_t W = (p - 1) * (p - 1) + 4;
    uint64_t s = 1, w = 1, m = W;
    for (uint64_t f = 2; f * f <= m; ++f) {
        unsigned e = 0;
        while (m % f == 0) { m /= f; ++e; }
        for (unsigned i = 0; i < e / 2; ++i) s *= f;
        if (e % 2) w *= f;
    }
    w *= m;
    if (w < 2) throw InternalError("(p-1)^2 + 4 cannot be a perfect square");
    SquarefreeD fw(w);
    return qv_normalize(i128(W) - 1 - p, i128(p) * s, 2 * (i128(W) - 1), fw);
}

} // namespace quadmin
