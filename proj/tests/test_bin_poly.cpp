#include <doctest.h>

#include "test_util.hpp"

using namespace pmds;

TEST_CASE("octal notation round-trips the table convention") {
    BinPoly f = BinPoly::from_octal("435");
    // 100011101: x^8 + x^4 + x^3 + x^2 + 1
    CHECK(f.degree() == 8);
    CHECK(f.to_string() == "x^8+x^4+x^3+x^2+1");
    CHECK(f.to_octal() == "435");
    CHECK(BinPoly::from_octal("4 3 5") == f);
    CHECK(BinPoly::from_octal("7").to_string() == "x^2+x+1");
    CHECK_THROWS_AS(BinPoly::from_octal("49"), std::invalid_argument);
    CHECK_THROWS_AS(BinPoly::from_octal(""), std::invalid_argument);
}

TEST_CASE("zero polynomial representation is canonical") {
    BinPoly z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    BinPoly a = BinPoly::from_octal("435");
    CHECK((a ^ a).is_zero());
    CHECK((a ^ a) == z);
    CHECK(a != z);
}

TEST_CASE("multiplication and division agree with the naive oracle") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        BinPoly a = testutil::random_poly(rng, 90);
        BinPoly b = testutil::random_poly(rng, 90);
        BinPoly want = testutil::naive_to(
            testutil::naive_mul(testutil::naive_from(a), testutil::naive_from(b)));
        CHECK(a * b == want);
        if (!b.is_zero()) {
            auto [q, rem] = BinPoly::divmod(a, b);
            CHECK(((q * b) ^ rem) == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd examples") {
    BinPoly one = BinPoly::one();
    // 1 + x^2 = (1+x)^2 over GF(2)
    CHECK(poly_gcd(BinPoly::from_octal("5"), BinPoly::from_octal("3")) ==
          BinPoly::from_octal("3"));
    CHECK(poly_gcd(BinPoly::from_octal("435"), one) == one);
    // both irreducible cubics: 1+x+x^3 (13) and 1+x^2+x^3 (15)
    CHECK(poly_gcd(BinPoly::from_octal("13"), BinPoly::from_octal("15")) == one);
    CHECK_THROWS_AS(poly_gcd(BinPoly::zero(), BinPoly::zero()), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments and is divisible by common divisors") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        BinPoly a = testutil::random_poly(rng, 8);
        BinPoly b = testutil::random_poly(rng, 8);
        if (a.is_zero() && b.is_zero()) continue;
        BinPoly g = poly_gcd(a, b);
        if (!a.is_zero()) CHECK(BinPoly::divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(BinPoly::divmod(b, g).second.is_zero());
        // brute force: every common divisor of degree <= 8 divides g
        for (std::uint64_t bits = 1; bits < 512; ++bits) {
            BinPoly d = BinPoly::from_coeff_bits(bits);
            if (!a.is_zero() && !BinPoly::divmod(a, d).second.is_zero()) continue;
            if (!b.is_zero() && !BinPoly::divmod(b, d).second.is_zero()) continue;
            CHECK(BinPoly::divmod(g, d).second.is_zero());
        }
    }
}

TEST_CASE("fixed-width coprime test matches the generic gcd") {
    std::mt19937_64 rng(13);
    BinPoly f = mersenne_poly(257);
    for (int iter = 0; iter < 200; ++iter) {
        BinPoly a = testutil::random_poly(rng, 255);
        if (a.is_zero()) continue;
        CHECK(coprime(a, f) == poly_gcd(a, f).is_one());
    }
}

TEST_CASE("irreducibility test") {
    CHECK(is_irreducible(BinPoly::from_octal("7")));        // x^2+x+1
    CHECK_FALSE(is_irreducible(BinPoly::from_octal("5")));  // (1+x)^2
    CHECK(is_irreducible(BinPoly::from_octal("435")));
    CHECK(is_irreducible(BinPoly::from_octal("1021")));
    CHECK_FALSE(is_irreducible(mersenne_poly(17)));
    CHECK(is_irreducible(mersenne_poly(19)));
}

TEST_CASE("primitivity of 2 mod p matches irreducibility of the all-ones polynomial") {
    CHECK_FALSE(is_two_primitive(17));
    CHECK(is_two_primitive(19));
    CHECK(is_two_primitive(5));  // order of 2 mod 5 is 4
    CHECK_THROWS_AS(is_two_primitive(15), std::invalid_argument);
    for (std::uint64_t p = 3; p <= 257; ++p) {
        if (!is_prime_u64(p)) continue;
        CHECK(is_two_primitive(p) == is_irreducible(mersenne_poly(unsigned(p))));
    }
}

TEST_CASE("exponents of reference polynomials") {
    CHECK(exponent_of(mersenne_poly(5)) == 5);
    CHECK(exponent_of(BinPoly::from_octal("435")) == 255);
    CHECK(exponent_of(BinPoly::from_octal("567")) == 85);
    CHECK(exponent_of(BinPoly::from_octal("433")) == 51);
    CHECK(exponent_of(BinPoly::from_octal("1021")) == 511);
    CHECK(exponent_of(BinPoly::from_octal("1231")) == 73);
    CHECK(exponent_of(BinPoly::from_octal("3025")) == 1023);
    CHECK(exponent_of(BinPoly::from_octal("6015")) == 2047);
    CHECK(exponent_of(BinPoly::from_octal("5361")) == 2047);
    CHECK(exponent_of(BinPoly::from_octal("15647")) == 4095);
    CHECK(exponent_of(BinPoly::from_octal("227215")) == 13107);
    CHECK_THROWS_AS(exponent_of(BinPoly::from_octal("2")), std::invalid_argument);  // x | f
}

TEST_CASE("exponent is minimal") {
    for (const char* oct : {"435", "567", "433", "7"}) {
        BinPoly f = BinPoly::from_octal(oct);
        std::uint64_t e = exponent_of(f);
        BinPoly acc = BinPoly::monomial(1) % f;
        for (std::uint64_t l = 1; l < e; ++l) {
            CHECK_FALSE(acc.is_one());
            acc = acc.shifted_left(1) % f;
        }
        CHECK(acc.is_one());  // acc reached x^e
        CHECK(x_pow_mod(e, f).is_one());
    }
    // the all-ones family: exponent p, checked exhaustively below p
    BinPoly m17 = mersenne_poly(17);
    CHECK(exponent_of(m17) == 17);
    for (std::uint64_t l = 1; l < 17; ++l) CHECK_FALSE(x_pow_mod(l, m17).is_one());
}
