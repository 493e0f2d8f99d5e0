#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "quadmin/error.hpp"
#include "quadmin/quad_arith.hpp"

using namespace quadmin;

namespace {

// numeric order of two equal-digit decimal renderings
int dec_cmp(const std::string& a, const std::string& b) {
    bool na = a[0] == '-', nb = b[0] == '-';
    std::string x = na ? a.substr(1) : a;
    std::string y = nb ? b.substr(1) : b;
    if (x == y && x.find_first_not_of("0.") == std::string::npos) return 0; // -0.00 == 0.00
    if (na != nb) return na ? -1 : 1;
    int c;
    if (x.size() != y.size())
        c = x.size() < y.size() ? -1 : 1; // longer integer part wins
    else
        c = x < y ? -1 : (x > y ? 1 : 0);
    return na ? -c : c;
}

} // namespace

TEST_CASE("square-free validation") {
    CHECK_THROWS_AS(SquarefreeD(0), OutOfRange);
    CHECK_THROWS_AS(SquarefreeD(1), OutOfRange);
    CHECK_THROWS_AS(SquarefreeD(1ull << 32), OutOfRange);
    CHECK_THROWS_AS(SquarefreeD(4), NotSquarefree);
    CHECK_THROWS_AS(SquarefreeD(8), NotSquarefree);
    CHECK_THROWS_AS(SquarefreeD(9), NotSquarefree);
    CHECK_THROWS_AS(SquarefreeD(49), NotSquarefree);
    CHECK_THROWS_AS(SquarefreeD(50), NotSquarefree);

    try {
        SquarefreeD bad(12);
        FAIL("12 accepted");
    } catch (const NotSquarefree& e) {
        CHECK(e.d == 12);
        CHECK(e.square_factor == 2);
        CHECK(std::string(e.what()).find("2^2") != std::string::npos);
    }
    try {
        SquarefreeD bad(18);
        FAIL("18 accepted");
    } catch (const NotSquarefree& e) {
        CHECK(e.square_factor == 3);
    }

    CHECK(SquarefreeD(2).d() == 2);
    CHECK(SquarefreeD(4294967291ull).d() == 4294967291ull); // prime
    CHECK(SquarefreeD(4294967295ull).d() == 4294967295ull); // 3*5*17*257*65537
}

TEST_CASE("field constants") {
    SquarefreeD f5(5), f6(6), f7(7);
    CHECK(f5.disc() == 5);
    CHECK(f5.mod4() == 1);
    CHECK(f5.one_mod4());
    CHECK(f5.eps_den() == 2);
    CHECK(f5.sqrt_disc_coeff() == 1);

    CHECK(f6.disc() == 24);
    CHECK(f6.mod4() == 2);
    CHECK(!f6.one_mod4());
    CHECK(f6.eps_den() == 1);
    CHECK(f6.sqrt_disc_coeff() == 2);

    CHECK(f7.disc() == 28);
    CHECK(f7.mod8() == 7);
    CHECK(SquarefreeD(17).mod8() == 1);
    CHECK(SquarefreeD(41).mod8() == 1);
    CHECK(SquarefreeD(5).mod8() == 5);
    CHECK(SquarefreeD(2) == SquarefreeD::unchecked(2));
}

TEST_CASE("normalization") {
    SquarefreeD f(5);
    QuadValue a = qv_normalize(2, 2, 4, f);
    CHECK(a.p == 1);
    CHECK(a.q == 1);
    CHECK(a.den == 2);

    QuadValue b = qv_normalize(1, 1, -2, f);
    CHECK(b.p == -1);
    CHECK(b.q == -1);
    CHECK(b.den == 2);

    QuadValue c = qv_normalize(0, 0, 5, f);
    CHECK(c.p == 0);
    CHECK(c.q == 0);
    CHECK(c.den == 1);

    QuadValue e = qv_normalize(6, -9, -3, f);
    CHECK(e.p == -2);
    CHECK(e.q == 3);
    CHECK(e.den == 1);

    CHECK_THROWS_AS(qv_normalize(1, 1, 0, f), InvalidDenominator);

    QuadValue r = qv_rat(10, 4, f);
    CHECK(r.p == 5);
    CHECK(r.q == 0);
    CHECK(r.den == 2);
    CHECK(qv_int(7, f).den == 1);
}

TEST_CASE("sign of u + v sqrt(d)") {
    CHECK(quad_sign(0, 0, 2) == 0);
    CHECK(quad_sign(3, 0, 2) == 1);
    CHECK(quad_sign(-3, 0, 2) == -1);
    CHECK(quad_sign(0, 1, 2) == 1);
    CHECK(quad_sign(0, -1, 2) == -1);
    CHECK(quad_sign(1, 1, 2) == 1);
    CHECK(quad_sign(-1, -1, 2) == -1);

    // opposite signs, decided by u^2 vs v^2 d
    CHECK(quad_sign(-3, 1, 10) == 1);  // 9 < 10
    CHECK(quad_sign(-4, 1, 10) == -1); // 16 > 10
    CHECK(quad_sign(3, -1, 10) == -1);
    CHECK(quad_sign(4, -1, 10) == 1);
    CHECK(quad_sign(-7, 5, 2) == 1);  // 49 < 50
    CHECK(quad_sign(-99, 70, 2) == -1); // 9801 > 9800

    // operands beyond the fast-path limits
    CHECK(quad_sign(-(i128(1) << 64), i128(1) << 47, 2) == -1);
    CHECK(quad_sign(-(i128(1) << 47), i128(1) << 64, 2) == 1);
    CHECK(quad_sign((i128(1) << 100) + 1, -(i128(1) << 99), 3) == 1);  // 2 > sqrt(3)
    CHECK(quad_sign((i128(1) << 100) - 1, -(i128(1) << 100), 3) == -1);
}

TEST_CASE("comparison agrees with 30-digit decimals") {
    SquarefreeD fields[] = {SquarefreeD(2), SquarefreeD(5), SquarefreeD(13),
                            SquarefreeD(6), SquarefreeD(4294967291ull)};
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<int64_t> coeff(-1000000, 1000000);
    std::uniform_int_distribution<int64_t> den(1, 1000000);
    for (int iter = 0; iter < 2000; ++iter) {
        SquarefreeD f = fields[iter % 5];
        QuadValue x = qv_normalize(coeff(rng), coeff(rng), den(rng), f);
        QuadValue y = qv_normalize(coeff(rng), coeff(rng), den(rng), f);
        int got = qv_cmp(x, y) < 0 ? -1 : (qv_cmp(x, y) > 0 ? 1 : 0);
        int want = dec_cmp(qv_to_decimal(x, 30), qv_to_decimal(y, 30));
        CAPTURE(iter);
        CHECK(got == want);
    }
}

TEST_CASE("comparison falls back to big integers") {
    SquarefreeD f(2);
    i128 big = i128(1) << 88;
    QuadValue x = qv_normalize(big + 1, big, big, f); // 1 + sqrt(2) + 2^-88
    QuadValue y = qv_normalize(big, big, big, f);     // 1 + sqrt(2)
    CHECK(qv_cmp(x, y) > 0);
    CHECK(qv_cmp(y, x) < 0);
    CHECK(qv_cmp(x, x) == 0);
    CHECK(qv_eq(y, qv_normalize(1, 1, 1, f)));
    CHECK(qv_lt(y, x));

    QuadValue z = qv_normalize(3 * big, -2 * big - 1, 2 * big, f); // just below (3-2sqrt2)/2
    QuadValue w = qv_normalize(3, -2, 2, f);
    CHECK(qv_cmp(z, w) < 0);

    SquarefreeD g(3);
    CHECK_THROWS_AS(qv_cmp(qv_int(1, f), qv_int(1, g)), FieldMismatch);
}

TEST_CASE("arithmetic") {
    SquarefreeD f(5);
    QuadValue golden = qv_normalize(1, 1, 2, f);
    QuadValue conj = qv_normalize(1, -1, 2, f);
    CHECK(qv_eq(qv_add(golden, conj), qv_int(1, f)));
    CHECK(qv_eq(qv_sub(golden, conj), qv_normalize(0, 1, 1, f)));
    CHECK(qv_eq(qv_add(golden, qv_neg(golden)), qv_int(0, f)));

    SquarefreeD f2(2);
    QuadValue m = qv_normalize(1, -1, 1, f2); // 1 - sqrt(2) < 0
    CHECK(qv_sign(m) == -1);
    CHECK(qv_eq(qv_abs(m), qv_normalize(-1, 1, 1, f2)));
    CHECK(qv_sign(qv_abs(m)) == 1);
    CHECK(qv_eq(qv_abs(qv_int(3, f)), qv_int(3, f)));

    CHECK_THROWS_AS(qv_add(qv_int(1, f), qv_int(1, f2)), FieldMismatch);
    QuadValue huge = QuadValue{1, 1, i128(1) << 62, f};
    CHECK_THROWS_AS(qv_add(huge, huge), OutOfRange);
}

TEST_CASE("decimal rendering is correctly rounded") {
    SquarefreeD f2(2), f3(3), f5(5), f77(77);
    CHECK(qv_to_decimal(qv_normalize(0, 1, 1, f2), 30) ==
          "1.414213562373095048801688724210");
    CHECK(qv_to_decimal(qv_normalize(1, 1, 2, f5), 30) ==
          "1.618033988749894848204586834366");
    CHECK(qv_to_decimal(qv_normalize(0, -1, 1, f2), 10) == "-1.4142135624");
    CHECK(qv_to_decimal(qv_normalize(7, 1, 2, f77), 25) ==
          "7.8874821936960610302031942");
    CHECK(qv_to_decimal(qv_normalize(0, 1, 1, f3), 1) == "1.7");
    CHECK(qv_to_decimal(qv_normalize(0, 1, 1, f3), 50) ==
          "1.73205080756887729352744634150587236694280525381038");
    SquarefreeD fbig(999999937);
    CHECK(qv_to_decimal(qv_normalize(-123456789, 987654321, 1000000007, fbig), 12) ==
          "31232.247293436231");

    // rational ties go to even
    CHECK(qv_to_decimal(qv_rat(1, 8, f2), 2) == "0.12");
    CHECK(qv_to_decimal(qv_rat(3, 8, f2), 2) == "0.38");
    CHECK(qv_to_decimal(qv_rat(7, 20, f2), 1) == "0.4");
    CHECK(qv_to_decimal(qv_rat(1, 4, f2), 2) == "0.25");
    CHECK(qv_to_decimal(qv_rat(-1, 8, f2), 2) == "-0.12");
    CHECK(qv_to_decimal(qv_int(17, f2), 12) == "17.000000000000");

    CHECK_THROWS_AS(qv_to_decimal(qv_int(1, f2), 0), OutOfRange);
    CHECK_THROWS_AS(qv_to_decimal(qv_int(1, f2), 51), OutOfRange);
}

TEST_CASE("string form") {
    SquarefreeD f2(2), f3(3), f5(5), f6(6);
    CHECK(qv_to_string(qv_int(17, f2)) == "17");
    CHECK(qv_to_string(qv_rat(-3, 7, f2)) == "-3/7");
    CHECK(qv_to_string(qv_normalize(1, 1, 2, f5)) == "(1 + sqrt(5))/2");
    CHECK(qv_to_string(qv_normalize(0, 1, 1, f2)) == "sqrt(2)");
    CHECK(qv_to_string(qv_normalize(0, 2, 1, f6)) == "2*sqrt(6)");
    CHECK(qv_to_string(qv_normalize(0, -1, 2, f5)) == "-sqrt(5)/2");
    CHECK(qv_to_string(qv_normalize(-3, -2, 7, f3)) == "(-3 - 2*sqrt(3))/7");
    CHECK(qv_to_string(qv_normalize(1, -1, 1, f2)) == "1 - sqrt(2)");
}

TEST_CASE("numeric conversion") {
    SquarefreeD f5(5);
    QuadValue golden = qv_normalize(1, 1, 2, f5);
    CHECK(qv_to_double(golden) == doctest::Approx(1.6180339887498949).epsilon(1e-15));
    CHECK(qv_to_double(qv_rat(1, 3, f5)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    mpf_class m = qv_to_mpf(golden, 256);
    mpf_class err = m * m - m - 1; // golden ratio root of x^2 - x - 1
    CHECK(mpf_class(abs(err)).get_d() < 1e-60);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt64(0) == 0);
    CHECK(isqrt64(1) == 1);
    CHECK(isqrt64(2) == 1);
    CHECK(isqrt64(3) == 1);
    CHECK(isqrt64(4) == 2);
    CHECK(isqrt64(24) == 4);
    CHECK(isqrt64(25) == 5);
    CHECK(isqrt64(26) == 5);
    CHECK(isqrt64(UINT64_MAX) == 4294967295ull);
    CHECK(isqrt64(4294967295ull * 4294967295ull) == 4294967295ull);
    CHECK(isqrt64(4294967295ull * 4294967295ull - 1) == 4294967294ull);
    CHECK(isqrt64(1000000000000000000ull) == 1000000000ull);
    uint64_t p = 1000000007;
    CHECK(isqrt64(p * p) == p);
    CHECK(isqrt64(p * p - 1) == p - 1);
    CHECK(isqrt64(p * p + 1) == p);

    for (uint64_t n = 0; n < 70000; ++n) {
        uint64_t r = isqrt64(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    std::mt19937_64 rng(0x5eed0002);
    for (int i = 0; i < 3000; ++i) {
        uint64_t n = rng();
        uint64_t r = isqrt64(n);
        u128 rr = u128(r) * r;
        REQUIRE(rr <= n);
        REQUIRE(u128(r + 1) * (r + 1) > n);
    }

    CHECK(isqrt128(u128(1) << 100) == u128(1) << 50);
    CHECK(isqrt128((u128(1) << 100) - 1) == (u128(1) << 50) - 1);
    for (int i = 0; i < 1000; ++i) {
        u128 n = (u128(rng() >> 4) << 64) | rng(); // below 2^124
        u128 r = isqrt128(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("integer fifth roots") {
    CHECK(iroot5(0) == 0);
    CHECK(iroot5(1) == 1);
    CHECK(iroot5(31) == 1);
    CHECK(iroot5(32) == 2);
    CHECK(iroot5(3124) == 4);
    CHECK(iroot5(3125) == 5);
    u128 t30 = 1;
    for (int i = 0; i < 30; ++i) t30 *= 10;
    CHECK(iroot5(t30) == 1000000);
    std::mt19937_64 rng(0x5eed0003);
    for (int i = 0; i < 2000; ++i) {
        u128 n = (u128(rng() & 0xFFFFFFFFFull) << 64) | rng(); // below 2^100
        uint64_t r = iroot5(n);
        u128 lo = u128(r) * r * r * r * r;
        u128 hi = u128(r + 1) * (r + 1) * (r + 1) * (r + 1) * (r + 1);
        REQUIRE(lo <= n);
        REQUIRE(hi > n);
    }
}

TEST_CASE("128-bit helpers") {
    CHECK(i128_gcd(0, 0) == 0);
    CHECK(i128_gcd(0, 5) == 5);
    CHECK(i128_gcd(-12, 18) == 6);
    CHECK(i128_gcd(i128(1) << 90, i128(1) << 70) == i128(1) << 70);
    CHECK(sgn(-7) == -1);
    CHECK(sgn(0) == 0);
    CHECK(sgn(i128(1) << 100) == 1);
    CHECK(i128_abs(-(i128(1) << 100)) == i128(1) << 100);

    CHECK(i128_str(0) == "0");
    CHECK(i128_str(-1) == "-1");
    CHECK(i128_str(i128(1) << 100) == "1267650600228229401496703205376");
    CHECK(i128_str(-(i128(1) << 100)) == "-1267650600228229401496703205376");

    CHECK(i128_to_mpz(i128(1) << 100).get_str() == "1267650600228229401496703205376");
    CHECK(i128_to_mpz(i128(-42)).get_str() == "-42");
    mpz_class z;
    i128_to_mpz(z.get_mpz_t(), -(i128(1) << 90) - 7);
    CHECK(z.get_str() == "-1237940039285380274899124231");
}

TEST_CASE("modular arithmetic and primality") {
    uint64_t m = (1ull << 61) - 1;
    CHECK(mulmod64(0xDEADBEEFCAFEBABEull, 0x123456789ABCDEF1ull, m) ==
          631715290888445864ull);
    CHECK(powmod64(3, 0xFFFFFFFFFFFFull, m) == 2132210398234079754ull);
    CHECK(powmod64(5, 0, m) == 1);
    CHECK(powmod64(0, 10, m) == 0);
    CHECK(mulmod64(m - 1, m - 1, m) == 1);

    CHECK(!is_prime64(0));
    CHECK(!is_prime64(1));
    CHECK(is_prime64(2));
    CHECK(is_prime64(3));
    CHECK(is_prime64(5));
    CHECK(is_prime64(13));
    CHECK(!is_prime64(4));
    CHECK(!is_prime64(9));
    CHECK(!is_prime64(15));
    CHECK(!is_prime64(561));   // Carmichael
    CHECK(!is_prime64(1105));
    CHECK(!is_prime64(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime64((1ull << 61) - 1));
    CHECK(is_prime64(4294967291ull));
    CHECK(!is_prime64(4294967293ull)); // 9241 * 464773
    CHECK(is_prime64(18446744073709551557ull)); // largest 64-bit prime
    CHECK(!is_prime64(UINT64_MAX));
}
