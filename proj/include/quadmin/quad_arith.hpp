#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "quadmin/int128.hpp"

namespace quadmin {

// A validated square-free d with 2 <= d < 2^32, plus field constants.
// disc() is d when d = 1 mod 4 and 4d otherwise; eps_den() is the
// denominator of the half-integer scale (2 when d = 1 mod 4, else 1).
class SquarefreeD {
public:
    explicit SquarefreeD(uint64_t d);

    // skips the square-free trial division; caller must have proven it
    // (sieve-driven paths)
    static SquarefreeD unchecked(uint64_t d) { return SquarefreeD(d, 0); }

    uint64_t d() const { return d_; }
    uint64_t disc() const { return d_ % 4 == 1 ? d_ : 4 * d_; }
    int mod4() const { return static_cast<int>(d_ % 4); }
    int mod8() const { return static_cast<int>(d_ % 8); }
    bool one_mod4() const { return d_ % 4 == 1; }
    int64_t eps_den() const { return one_mod4() ? 2 : 1; }
    // sqrt(disc) = sqrt_disc_coeff() * sqrt(d)
    int64_t sqrt_disc_coeff() const { return one_mod4() ? 1 : 2; }

    friend bool operator==(SquarefreeD a, SquarefreeD b) { return a.d_ == b.d_; }

private:
    SquarefreeD(uint64_t d, int) : d_(d) {}
    uint64_t d_;
};

// (p + q*sqrt(d)) / den with den > 0 and gcd(p, q, den) = 1.
// All operations are exact; comparisons never round.
struct QuadValue {
    i128 p;
    i128 q;
    i128 den;
    SquarefreeD field;
};

QuadValue qv_normalize(i128 p, i128 q, i128 den, SquarefreeD field);
QuadValue qv_int(i128 n, SquarefreeD field);
QuadValue qv_rat(i128 num, i128 den, SquarefreeD field);

// sign of u + v*sqrt(d)
int quad_sign(i128 u, i128 v, uint64_t d);

int qv_sign(const QuadValue& x);
std::strong_ordering qv_cmp(const QuadValue& x, const QuadValue& y);
bool qv_eq(const QuadValue& x, const QuadValue& y);
bool qv_lt(const QuadValue& x, const QuadValue& y);

QuadValue qv_neg(const QuadValue& x);
QuadValue qv_abs(const QuadValue& x);
QuadValue qv_add(const QuadValue& x, const QuadValue& y);
QuadValue qv_sub(const QuadValue& x, const QuadValue& y);

// correctly rounded to `digits` fractional digits (1..50); round to nearest,
// ties (only possible for rational values) to even
std::string qv_to_decimal(const QuadValue& x, int digits);

std::string qv_to_string(const QuadValue& x);

mpf_class qv_to_mpf(const QuadValue& x, mp_bitcnt_t prec = 512);
double qv_to_double(const QuadValue& x);

} // namespace quadmin
