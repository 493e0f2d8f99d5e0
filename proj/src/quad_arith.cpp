#include "quadmin/quad_arith.hpp"

#include "quadmin/error.hpp"

namespace quadmin {

SquarefreeD::SquarefreeD(uint64_t d) : d_(d) {
    if (d < 2 || d >= (1ull << 32))
        throw OutOfRange("d must satisfy 2 <= d < 2^32, got " + std::to_string(d));
    uint64_t m = d;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) throw NotSquarefree(d, p);
    }
}

QuadValue qv_normalize(i128 p, i128 q, i128 den, SquarefreeD field) {
    if (den == 0) throw InvalidDenominator("denominator is zero");
    if (den < 0) { p = -p; q = -q; den = -den; }
    i128 g = i128_gcd(i128_gcd(p, q), den);
    if (g > 1) { p /= g; q /= g; den /= g; }
    return QuadValue{p, q, den, field};
}

QuadValue qv_int(i128 n, SquarefreeD field) { return QuadValue{n, 0, 1, field}; }

QuadValue qv_rat(i128 num, i128 den, SquarefreeD field) {
    return qv_normalize(num, 0, den, field);
}

int quad_sign(i128 u, i128 v, uint64_t d) {
    if (v == 0) return sgn(u);
    if (u == 0) return sgn(v);
    int su = sgn(u), sv = sgn(v);
    if (su == sv) return su;
    // opposite signs: decided by u^2 vs v^2 d
    i128 au = i128_abs(u), av = i128_abs(v);
    if (au < (i128(1) << 63) && av < (i128(1) << 46)) {
        i128 lhs = au * au;
        i128 rhs = av * av * i128(d);
        if (lhs == rhs) return 0; // unreachable for square-free d
        return lhs > rhs ? su : sv;
    }
    mpz_class zu = i128_to_mpz(au), zv = i128_to_mpz(av);
    zu *= zu;
    zv *= zv;
    zv *= static_cast<unsigned long>(d);
    int c = cmp(zu, zv);
    if (c == 0) return 0;
    return c > 0 ? su : sv;
}

int qv_sign(const QuadValue& x) { return quad_sign(x.p, x.q, x.field.d()); }

static int quad_sign_mpz(const mpz_class& u, const mpz_class& v, uint64_t d) {
    int su = sgn(u), sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    mpz_class lhs = u * u;
    mpz_class rhs = v * v;
    rhs *= static_cast<unsigned long>(d);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? su : sv;
}

std::strong_ordering qv_cmp(const QuadValue& x, const QuadValue& y) {
    if (!(x.field == y.field))
        throw FieldMismatch("comparing values from Q(sqrt " + std::to_string(x.field.d()) +
                            ") and Q(sqrt " + std::to_string(y.field.d()) + ")");
    const i128 lim = i128(1) << 62;
    int s;
    if (i128_abs(x.p) < lim && i128_abs(y.p) < lim && i128_abs(x.q) < lim &&
        i128_abs(y.q) < lim && x.den < lim && y.den < lim) {
        i128 u = x.p * y.den - y.p * x.den;
        i128 v = x.q * y.den - y.q * x.den;
        s = quad_sign(u, v, x.field.d());
    } else {
        mpz_class xd = i128_to_mpz(x.den), yd = i128_to_mpz(y.den);
        mpz_class u = i128_to_mpz(x.p) * yd - i128_to_mpz(y.p) * xd;
        mpz_class v = i128_to_mpz(x.q) * yd - i128_to_mpz(y.q) * xd;
        s = quad_sign_mpz(u, v, x.field.d());
    }
    return s <=> 0;
}

bool qv_eq(const QuadValue& x, const QuadValue& y) { return qv_cmp(x, y) == 0; }
bool qv_lt(const QuadValue& x, const QuadValue& y) { return qv_cmp(x, y) < 0; }

QuadValue qv_neg(const QuadValue& x) { return QuadValue{-x.p, -x.q, x.den, x.field}; }

QuadValue qv_abs(const QuadValue& x) { return qv_sign(x) < 0 ? qv_neg(x) : x; }

static void require_small(const QuadValue& x, const char* op) {
    const i128 lim = i128(1) << 62;
    if (i128_abs(x.p) >= lim || i128_abs(x.q) >= lim || x.den >= lim)
        throw OutOfRange(std::string("operands too large for ") + op);
}

QuadValue qv_add(const QuadValue& x, const QuadValue& y) {
    if (!(x.field == y.field)) throw FieldMismatch("adding values from different fields");
    require_small(x, "add");
    require_small(y, "add");
    return qv_normalize(x.p * y.den + y.p * x.den, x.q * y.den + y.q * x.den,
                        x.den * y.den, x.field);
}

QuadValue qv_sub(const QuadValue& x, const QuadValue& y) { return qv_add(x, qv_neg(y)); }

// Renders floor(x*10^k + 1/2) without ever forming an inexact intermediate:
// with x = (P + Q sqrt(d))/DEN, floor(2x*10^k) follows from the integer
// floor of 2|Q|*10^k*sqrt(d), which is a single mpz square root.
std::string qv_to_decimal(const QuadValue& x, int digits) {
    if (digits < 1 || digits > 50)
        throw OutOfRange("digits must be in [1, 50], got " + std::to_string(digits));
    int s = qv_sign(x);
    if (s < 0) return "-" + qv_to_decimal(qv_neg(x), digits);

    mpz_class P = i128_to_mpz(x.p), Q = i128_to_mpz(x.q), DEN = i128_to_mpz(x.den);
    mpz_class tk;
    mpz_ui_pow_ui(tk.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    mpz_class n; // rounded value of x*10^digits
    if (x.q == 0) {
        mpz_class N = P * tk, q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), N.get_mpz_t(), DEN.get_mpz_t());
        mpz_class twice = 2 * r;
        int c = cmp(twice, DEN);
        if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
            ++q;
        n = q;
    } else {
        mpz_class A = 2 * P * tk;
        mpz_class S2 = 4 * Q * Q * tk * tk;
        S2 *= static_cast<unsigned long>(x.field.d());
        mpz_class S;
        mpz_sqrt(S.get_mpz_t(), S2.get_mpz_t());
        mpz_class num = (x.q > 0) ? mpz_class(A + S) : mpz_class(A - S - 1);
        mpz_class f2; // floor(2x*10^k)
        mpz_fdiv_q(f2.get_mpz_t(), num.get_mpz_t(), DEN.get_mpz_t());
        ++f2;
        mpz_fdiv_q_2exp(n.get_mpz_t(), f2.get_mpz_t(), 1);
    }

    mpz_class ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), n.get_mpz_t(), tk.get_mpz_t());
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

std::string qv_to_string(const QuadValue& x) {
    std::string root = "sqrt(" + std::to_string(x.field.d()) + ")";
    if (x.q == 0) {
        std::string s = i128_str(x.p);
        return x.den == 1 ? s : s + "/" + i128_str(x.den);
    }
    std::string core;
    i128 qa = i128_abs(x.q);
    std::string qterm = (qa == 1 ? "" : i128_str(qa) + "*") + root;
    if (x.p == 0) {
        core = (x.q < 0 ? "-" : "") + qterm;
    } else {
        core = i128_str(x.p) + (x.q < 0 ? " - " : " + ") + qterm;
    }
    if (x.den == 1) return core;
    if (x.p == 0) return core + "/" + i128_str(x.den);
    return "(" + core + ")/" + i128_str(x.den);
}

mpf_class qv_to_mpf(const QuadValue& x, mp_bitcnt_t prec) {
    mpf_class sd(0, prec);
    {
        mpf_class dd(static_cast<unsigned long>(x.field.d()), prec);
        mpf_sqrt(sd.get_mpf_t(), dd.get_mpf_t());
    }
    mpf_class P(0, prec), Q(0, prec), DEN(0, prec), r(0, prec);
    mpf_set_z(P.get_mpf_t(), i128_to_mpz(x.p).get_mpz_t());
    mpf_set_z(Q.get_mpf_t(), i128_to_mpz(x.q).get_mpz_t());
    mpf_set_z(DEN.get_mpf_t(), i128_to_mpz(x.den).get_mpz_t());
    r = (P + Q * sd) / DEN;
    return r;
}

double qv_to_double(const QuadValue& x) { return qv_to_mpf(x, 128).get_d(); }

} // namespace quadmin
