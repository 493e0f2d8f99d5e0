#include "quadmin/mahler.hpp"

#include <cstdlib>

#include "quadmin/error.hpp"

namespace quadmin {

QuadIrrational canonicalize(int64_t a, int64_t b, int64_t c, SquarefreeD field) {
    if (c == 0) throw InvalidDenominator("c must be nonzero");
    if (b == 0) throw NotIrrational("b = 0 gives a rational number");
    if (std::abs(a) > kMaxCoeff || std::abs(b) > kMaxCoeff || std::abs(c) > kMaxCoeff)
        throw OutOfRange("|a|, |b|, |c| must be at most " + std::to_string(kMaxCoeff));
    // negate numerator and denominator, then conjugate: lands on a>=0, b>0, c>0
    a = std::abs(a);
    b = std::abs(b);
    c = std::abs(c);
    int64_t g = static_cast<int64_t>(i128_gcd(i128_gcd(a, b), c));
    return QuadIrrational{a / g, b / g, c / g, field};
}

uint64_t lead_coeff_k(const QuadIrrational& alpha) {
    int64_t a = alpha.a, b = alpha.b, c = alpha.c;
    uint64_t d = alpha.field.d();
    i128 cc = i128(c) * c;
    i128 num = i128(a) * a - i128(d) * b * b; // never 0: sqrt(d) is irrational
    i128 t1 = c / i128_gcd(c, 2 * i128(a));
    i128 t2 = cc / i128_gcd(cc, num);
    i128 k = t1 / i128_gcd(t1, t2) * t2;
    return static_cast<uint64_t>(k); // k divides c^2 <= kMaxCoeff^2
}

MinPoly min_poly(const QuadIrrational& alpha) {
    i128 k = lead_coeff_k(alpha);
    i128 a = alpha.a, b = alpha.b, c = alpha.c;
    i128 num = a * a - i128(alpha.field.d()) * b * b;
    i128 B = -2 * a * k;
    i128 C = k * num;
    if (B % c != 0 || C % (c * c) != 0)
        throw InternalError("minimal polynomial coefficients not integral");
    MinPoly p{k, B / c, C / (c * c)};
    if (i128_gcd(i128_gcd(p.A, p.B), p.C) != 1)
        throw InternalError("minimal polynomial not primitive");
    return p;
}

MeasureResult mahler_measure(const QuadIrrational& alpha) {
    int64_t a = alpha.a, b = alpha.b, c = alpha.c;
    uint64_t d = alpha.field.d();
    uint64_t k = lead_coeff_k(alpha);
    // alpha > 0; |alpha| > 1 iff a + b sqrt(d) > c
    bool alpha_big = quad_sign(i128(a) - c, b, d) > 0;
    // conj = (a - b sqrt(d))/c; |conj| > 1 iff |a - b sqrt(d)| > c
    int conj_sign = quad_sign(a, -i128(b), d);
    bool conj_big = (conj_sign > 0) ? quad_sign(i128(a) - c, -i128(b), d) > 0
                                    : quad_sign(-i128(a) - c, b, d) > 0;
    QuadValue value = [&] {
        i128 kk = k;
        if (alpha_big && conj_big) {
            i128 num = i128(a) * a - i128(d) * b * b;
            return qv_normalize(kk * i128_abs(num), 0, i128(c) * c, alpha.field);
        }
        if (alpha_big) return qv_normalize(kk * a, kk * b, c, alpha.field);
        if (conj_big) {
            // k |a - b sqrt(d)| / c
            return (conj_sign > 0) ? qv_normalize(kk * a, -kk * b, c, alpha.field)
                                   : qv_normalize(-kk * a, kk * b, c, alpha.field);
        }
        return qv_int(kk, alpha.field);
    }();
    return MeasureResult{value, alpha, k, min_poly(alpha)};
}

} // namespace quadmin
