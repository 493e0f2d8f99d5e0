#pragma once

#include "quadmin/quad_arith.hpp"

namespace quadmin {

// alpha = (a + b*sqrt(d)) / c in canonical form: a >= 0, b > 0, c > 0,
// gcd(a, b, c) = 1. Sign flips and conjugation preserve the measure, so
// every quadratic irrational in the field has exactly one such form.
struct QuadIrrational {
    int64_t a;
    int64_t b;
    int64_t c;
    SquarefreeD field;
};

// Keeps k <= c^2 and k|a^2 - d b^2| inside 128 bits for every d < 2^32.
inline constexpr int64_t kMaxCoeff = 2'000'000;

QuadIrrational canonicalize(int64_t a, int64_t b, int64_t c, SquarefreeD field);

// leading coefficient of the minimal polynomial of alpha over Z
uint64_t lead_coeff_k(const QuadIrrational& alpha);

// A x^2 + B x + C, primitive, A > 0
struct MinPoly {
    i128 A, B, C;
};
MinPoly min_poly(const QuadIrrational& alpha);

struct MeasureResult {
    QuadValue value;
    QuadIrrational witness;
    uint64_t k;
    MinPoly poly;
};

MeasureResult mahler_measure(const QuadIrrational& alpha);

inline MeasureResult measure(int64_t a, int64_t b, int64_t c, SquarefreeD field) {
    return mahler_measure(canonicalize(a, b, c, field));
}

} // namespace quadmin
