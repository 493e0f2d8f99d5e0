#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadmin/error.hpp"
#include "quadmin/mahler.hpp"

using namespace quadmin;

namespace {

uint64_t gcd3(uint64_t a, uint64_t b, uint64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

// smallest k >= 1 clearing both denominators of the trace and norm terms
uint64_t k_by_search(const QuadIrrational& al) {
    i128 c = al.c, two_a_c = 2 * i128(al.a);
    i128 norm_num = i128(al.a) * al.a - i128(al.field.d()) * al.b * al.b;
    for (uint64_t k = 1;; ++k) {
        if ((i128(k) * two_a_c) % c == 0 && (i128(k) * norm_num) % (c * c) == 0) return k;
    }
}

} // namespace

TEST_CASE("canonical form") {
    SquarefreeD f(5);
    for (int sa : {-1, 1})
        for (int sb : {-1, 1})
            for (int sc : {-1, 1}) {
                QuadIrrational al = canonicalize(sa * 3, sb * 4, sc * 5, f);
                CHECK(al.a == 3);
                CHECK(al.b == 4);
                CHECK(al.c == 5);
            }
    QuadIrrational g = canonicalize(6, 8, 10, f);
    CHECK(g.a == 3);
    CHECK(g.b == 4);
    CHECK(g.c == 5);
    QuadIrrational z = canonicalize(0, -2, 4, f);
    CHECK(z.a == 0);
    CHECK(z.b == 1);
    CHECK(z.c == 2);

    CHECK_THROWS_AS(canonicalize(1, 1, 0, f), InvalidDenominator);
    CHECK_THROWS_AS(canonicalize(1, 0, 2, f), NotIrrational);
    CHECK_THROWS_AS(canonicalize(kMaxCoeff + 1, 1, 1, f), OutOfRange);
    CHECK_THROWS_AS(canonicalize(1, kMaxCoeff + 1, 1, f), OutOfRange);
    CHECK_THROWS_AS(canonicalize(1, 1, -(kMaxCoeff + 1), f), OutOfRange);
}

TEST_CASE("leading coefficient and minimal polynomial") {
    SquarefreeD f5(5), f2(2), f293(293);

    MeasureResult golden = measure(1, 1, 2, f5);
    CHECK(golden.k == 1);
    CHECK(golden.poly.A == 1);
    CHECK(golden.poly.B == -1);
    CHECK(golden.poly.C == -1);
    CHECK(qv_eq(golden.value, qv_normalize(1, 1, 2, f5)));

    MeasureResult root2 = measure(0, 1, 1, f2);
    CHECK(root2.k == 1);
    CHECK(root2.poly.A == 1);
    CHECK(root2.poly.B == 0);
    CHECK(root2.poly.C == -2);
    CHECK(qv_eq(root2.value, qv_int(2, f2)));

    MeasureResult third = measure(1, 1, 3, f5);
    CHECK(third.k == 9);
    CHECK(third.poly.A == 9);
    CHECK(third.poly.B == -6);
    CHECK(third.poly.C == -4);
    CHECK(qv_eq(third.value, qv_normalize(3, 3, 1, f5)));

    MeasureResult w293 = measure(15, 1, 2, f293);
    CHECK(w293.k == 1);
    CHECK(w293.poly.A == 1);
    CHECK(w293.poly.B == -15);
    CHECK(w293.poly.C == -17);
    CHECK(qv_eq(w293.value, qv_int(17, f293)));

    MeasureResult twice = measure(0, 2, 1, f5);
    CHECK(twice.k == 1);
    CHECK(qv_eq(twice.value, qv_int(20, f5)));

    MeasureResult half = measure(0, 1, 2, f5);
    CHECK(half.k == 4);
    CHECK(half.poly.A == 4);
    CHECK(half.poly.B == 0);
    CHECK(half.poly.C == -5);
    CHECK(qv_eq(half.value, qv_int(5, f5)));
}

TEST_CASE("measure invariances") {
    SquarefreeD fields[] = {SquarefreeD(2), SquarefreeD(5), SquarefreeD(13),
                            SquarefreeD(21), SquarefreeD(77)};
    std::mt19937_64 rng(0x5eed0011);
    std::uniform_int_distribution<int64_t> coeff(1, 200);
    for (int iter = 0; iter < 400; ++iter) {
        SquarefreeD f = fields[iter % 5];
        int64_t a = coeff(rng) - 100, b = coeff(rng), c = coeff(rng);
        MeasureResult base = measure(a, b, c, f);
        CHECK(qv_eq(measure(-a, b, c, f).value, base.value));
        CHECK(qv_eq(measure(a, -b, c, f).value, base.value)); // conjugate
        CHECK(qv_eq(measure(a, b, -c, f).value, base.value));
        CHECK(qv_eq(measure(3 * a, 3 * b, 3 * c, f).value, base.value));
        CHECK(measure(a, -b, c, f).k == base.k);
    }
}

TEST_CASE("leading coefficient matches direct search") {
    SquarefreeD fields[] = {SquarefreeD(2), SquarefreeD(5), SquarefreeD(13),
                            SquarefreeD(30)};
    std::mt19937_64 rng(0x5eed0012);
    std::uniform_int_distribution<int64_t> small(1, 50);
    for (int iter = 0; iter < 600; ++iter) {
        SquarefreeD f = fields[iter % 4];
        QuadIrrational al = canonicalize(small(rng) - 25, small(rng), small(rng), f);
        CHECK(lead_coeff_k(al) == k_by_search(al));
    }
}

TEST_CASE("polynomial identities") {
    SquarefreeD fields[] = {SquarefreeD(3), SquarefreeD(5), SquarefreeD(11),
                            SquarefreeD(4294967291ull)};
    std::mt19937_64 rng(0x5eed0013);
    std::uniform_int_distribution<int64_t> coeff(1, 2000);
    for (int iter = 0; iter < 500; ++iter) {
        SquarefreeD f = fields[iter % 4];
        int64_t a = coeff(rng) - 1000, b = coeff(rng), c = coeff(rng);
        QuadIrrational al = canonicalize(a, b, c, f);
        MinPoly pl = min_poly(al);

        // alpha is a root: A(a^2 + b^2 d) + B a c + C c^2 = 0 and b(2Aa + Bc) = 0
        i128 ca = al.a, cb = al.b, cc = al.c, d = i128(f.d());
        CHECK(pl.A * (ca * ca + cb * cb * d) + pl.B * ca * cc + pl.C * cc * cc == 0);
        CHECK(2 * pl.A * ca + pl.B * cc == 0);

        CHECK(pl.A > 0);
        CHECK(i128_gcd(i128_gcd(pl.A, pl.B), pl.C) == 1);

        // discriminant is f^2 d with f = 2kb/c
        i128 disc = pl.B * pl.B - 4 * pl.A * pl.C;
        i128 fsq = disc / d;
        CHECK(disc == fsq * d);
        i128 fr = 2 * i128(lead_coeff_k(al)) * cb / cc;
        CHECK(2 * i128(lead_coeff_k(al)) * cb % cc == 0);
        CHECK(fsq == fr * fr);
    }
}

TEST_CASE("measure agrees with the numeric definition") {
    SquarefreeD fields[] = {SquarefreeD(2), SquarefreeD(7), SquarefreeD(17),
                            SquarefreeD(1000003)};
    std::mt19937_64 rng(0x5eed0014);
    std::uniform_int_distribution<int64_t> coeff(1, 5000);
    for (int iter = 0; iter < 300; ++iter) {
        SquarefreeD f = fields[iter % 4];
        int64_t a = coeff(rng) - 2500, b = coeff(rng), c = coeff(rng);
        MeasureResult mr = measure(a, b, c, f);

        mpf_class sd(0, 256), dd(static_cast<unsigned long>(f.d()), 256);
        mpf_sqrt(sd.get_mpf_t(), dd.get_mpf_t());
        mpf_class alpha = (mpf_class(double(a), 256) + mpf_class(double(b), 256) * sd) /
                          mpf_class(double(c), 256);
        mpf_class conj = (mpf_class(double(a), 256) - mpf_class(double(b), 256) * sd) /
                         mpf_class(double(c), 256);
        mpf_class want = mpf_class(double(mr.k), 256);
        if (abs(alpha) > 1) want *= abs(alpha);
        if (abs(conj) > 1) want *= abs(conj);
        double got = qv_to_double(mr.value);
        CHECK(got == doctest::Approx(mpf_class(want).get_d()).epsilon(1e-12));

        // measure of any irrational clears half the square root of the discriminant
        QuadValue twice = qv_normalize(2 * mr.value.p, 2 * mr.value.q, mr.value.den, f);
        QuadValue sqrt_disc = qv_normalize(0, f.sqrt_disc_coeff(), 1, f);
        CHECK(qv_cmp(twice, sqrt_disc) > 0);
    }
}
