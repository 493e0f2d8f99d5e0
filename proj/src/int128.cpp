#include "quadmin/int128.hpp"

#include <cmath>

namespace quadmin {

i128 i128_gcd(i128 a, i128 b) {
    a = i128_abs(a);
    b = i128_abs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r > 4294967295ULL) r = 4294967295ULL; // floor(sqrt(2^64-1))
    while (r * r > n) --r;
    while (r < 4294967295ULL && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    u128 r = isqrt64(static_cast<uint64_t>(n >> 64));
    r = (r << 32) + (1ull << 32); // upper bound for Newton start
    // Newton iteration converges from above
    for (;;) {
        u128 nr = (r + n / r) >> 1;
        if (nr >= r) break;
        r = nr;
    }
    while (r * r > n) --r;
    return r;
}

uint64_t iroot5(u128 n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 0.2));
    auto pow5 = [](u128 x) {
        u128 s = x * x;
        return s * s * x;
    };
    while (r > 0 && pow5(r) > n) --r;
    while (pow5(r + 1) <= n) ++r;
    return r;
}

std::string i128_str(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    u128 v = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    char buf[48];
    int i = 48;
    while (v) {
        buf[--i] = static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::string s(buf + i, 48 - i);
    return neg ? "-" + s : s;
}

void i128_to_mpz(mpz_t out, i128 x) {
    bool neg = x < 0;
    u128 v = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    mpz_set_ui(out, static_cast<unsigned long>(v >> 64));
    mpz_mul_2exp(out, out, 64);
    mpz_add_ui(out, out, static_cast<unsigned long>(v & UINT64_MAX));
    if (neg) mpz_neg(out, out);
}

mpz_class i128_to_mpz(i128 x) {
    mpz_class z;
    i128_to_mpz(z.get_mpz_t(), x);
    return z;
}

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this witness set is deterministic for all n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace quadmin
