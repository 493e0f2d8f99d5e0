#pragma once

#include <cstdint>
#include <string>

#include <gmp.h>
#include <gmpxx.h>

namespace quadmin {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 i128_abs(i128 x) { return x < 0 ? -x : x; }

constexpr int sgn(i128 x) { return (x > 0) - (x < 0); }

i128 i128_gcd(i128 a, i128 b);

// floor(sqrt(n)), exact for the full 64-bit range
uint64_t isqrt64(uint64_t n);
u128 isqrt128(u128 n);

// floor(n^(1/5))
uint64_t iroot5(u128 n);

std::string i128_str(i128 x);

// i128 <-> mpz without string round-trips
void i128_to_mpz(mpz_t out, i128 x);
mpz_class i128_to_mpz(i128 x);

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m);

bool is_prime64(uint64_t n); // deterministic Miller-Rabin

} // namespace quadmin
