#include <doctest.h>

#include "test_util.hpp"

using namespace pmds;

namespace {

// entry must be alpha^k (k = -1 means structurally zero)
void expect_pow(const CodeParams& p, std::size_t row, std::size_t col, long long k) {
    HEntry e = parity_entry(p, row, col);
    if (k < 0) {
        CHECK(e.zero);
    } else {
        REQUIRE_FALSE(e.zero);
        CHECK(e.pow == std::uint64_t(k) % p.spec->exponent());
    }
}

}  // namespace

TEST_CASE("worked 3x5 squared-power matrices") {
    auto f = ModulusSpec::parse("435");  // exponent 255, no wrap below
    // r=1, s=3: three all-ones stripe rows over rows of a^k, a^2k, a^4k
    {
        CodeParams p{3, 5, 1, 3, Variant::C0, f};
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned c = 0; c < 15; ++c) expect_pow(p, i, c, c / 5 == i ? 0 : -1);
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 3, c, c);
            expect_pow(p, 4, c, 2ll * c);
            expect_pow(p, 5, c, 4ll * c);
        }
    }
    // r=2, s=2: stripe rows (ones, a^(5i+j)) over a^2k, a^4k
    {
        CodeParams p{3, 5, 2, 2, Variant::C0, f};
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned c = 0; c < 15; ++c) {
                expect_pow(p, 2 * i, c, c / 5 == i ? 0 : -1);
                expect_pow(p, 2 * i + 1, c, c / 5 == i ? (long long)(c) : -1);
            }
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 6, c, 2ll * c);
            expect_pow(p, 7, c, 4ll * c);
        }
    }
}

TEST_CASE("worked 3x5 consecutive-power matrices") {
    auto f = ModulusSpec::parse("435");
    // r=1, s=3: globals a^k, a^2k, a^3k
    {
        CodeParams p{3, 5, 1, 3, Variant::C1, f};
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 3, c, c);
            expect_pow(p, 4, c, 2ll * c);
            expect_pow(p, 5, c, 3ll * c);
        }
    }
    // r=3, s=1: stripe rows (ones, a^k, a^2k), global a^3k
    {
        CodeParams p{3, 5, 3, 1, Variant::C1, f};
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned c = 0; c < 15; ++c) {
                bool mine = c / 5 == i;
                expect_pow(p, 3 * i, c, mine ? 0 : -1);
                expect_pow(p, 3 * i + 1, c, mine ? (long long)(c) : -1);
                expect_pow(p, 3 * i + 2, c, mine ? 2ll * c : -1);
            }
        for (unsigned c = 0; c < 15; ++c) expect_pow(p, 9, c, 3ll * c);
    }
    // r=2, s=2: stripe rows (ones, a^k), globals a^2k, a^3k
    {
        CodeParams p{3, 5, 2, 2, Variant::C1, f};
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 6, c, 2ll * c);
            expect_pow(p, 7, c, 3ll * c);
        }
    }
}

TEST_CASE("worked compact-construction matrices wrap at exponent 5") {
    auto m5 = ModulusSpec::mersenne(5);
    {
        CodeParams p{3, 5, 1, 2, Variant::C2, m5};
        p.validate();
        // stripe indicators
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned c = 0; c < 15; ++c) expect_pow(p, i, c, c / 5 == i ? 0 : -1);
        // first global: 1 a a^2 a^3 a^4 repeated per block
        // second global: block i starts at a^i, wrapping at a^5 = 1
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 3, c, c % 5);
            expect_pow(p, 4, c, (c / 5 + c % 5) % 5);
        }
    }
    {
        CodeParams p{5, 3, 1, 2, Variant::C2, m5};
        p.validate();
        for (unsigned c = 0; c < 15; ++c) {
            expect_pow(p, 5, c, c % 3);
            expect_pow(p, 6, c, (c / 3 + c % 3) % 5);
        }
    }
}

TEST_CASE("squared and consecutive constructions coincide for r=1, s=2") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        unsigned m = 2 + rng() % 4, n = 3 + rng() % 4;
        const char* mods[] = {"435", "1021", "mp:31", "mp:37", "mp:41"};
        auto spec = ModulusSpec::parse(mods[rng() % 5]);
        if (std::uint64_t(m) * n > spec->exponent()) continue;
        CodeParams a{m, n, 1, 2, Variant::C0, spec};
        CodeParams b{m, n, 1, 2, Variant::C1, spec};
        CHECK(build_parity_check(a) == build_parity_check(b));
    }
}

TEST_CASE("row-to-row structure of the two power constructions") {
    auto f = ModulusSpec::parse("1021");
    CodeParams c0{3, 5, 3, 2, Variant::C0, f};
    RingMatrix H0 = build_parity_check(c0);
    // within a stripe, each power row is the square of the previous one
    for (unsigned i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < 15; ++c)
            CHECK(H0.at(3 * i + 2, c) == H0.at(3 * i + 1, c) * H0.at(3 * i + 1, c));
    // each global row is the square of the previous one
    for (std::size_t c = 0; c < 15; ++c)
        CHECK(H0.at(10, c) == H0.at(9, c) * H0.at(9, c));

    CodeParams c1{3, 5, 3, 2, Variant::C1, f};
    RingMatrix H1 = build_parity_check(c1);
    // consecutive powers: next row = previous row times the generator row
    for (std::size_t c = 0; c < 15; ++c) {
        RingElement gen = RingElement::alpha_pow(f, c);
        for (unsigned i = 0; i < 3; ++i)
            CHECK(H1.at(3 * i + 2, c) == H1.at(3 * i + 1, c) * gen);
        CHECK(H1.at(10, c) == H1.at(9, c) * gen);
    }
}

TEST_CASE("erasure submatrix shapes") {
    auto f = ModulusSpec::parse("435");
    CodeParams p{4, 5, 1, 2, Variant::C0, f};
    RingMatrix H = build_parity_check(p);
    // single erasure at (0,0): the first column of H
    {
        RingMatrix sub = erasure_submatrix(H, ErasurePattern::of({{0, 0}}), p.n);
        REQUIRE(sub.cols() == 1);
        for (std::size_t r = 0; r < H.rows(); ++r) CHECK(sub.at(r, 0) == H.at(r, 0));
    }
    // three in one row: after dropping zero rows, the 3x3 Vandermonde
    {
        unsigned i = 2;
        RingMatrix red = drop_zero_rows(
            erasure_submatrix(H, ErasurePattern::of({{i, 0}, {i, 2}, {i, 3}}), p.n));
        REQUIRE(red.rows() == 3);
        REQUIRE(red.cols() == 3);
        unsigned js[3] = {0, 2, 3};
        for (int c = 0; c < 3; ++c) {
            RingElement x = RingElement::alpha_pow(f, i * p.n + js[c]);
            CHECK(red.at(0, c).is_one());
            CHECK(red.at(1, c) == x);
            CHECK(red.at(2, c) == x * x);
        }
        CHECK(is_invertible(red));
    }
    // two pairs in two rows: the 4x4 system
    {
        RingMatrix red = drop_zero_rows(
            erasure_submatrix(H, ErasurePattern::of({{0, 1}, {0, 4}, {2, 0}, {2, 3}}), p.n));
        REQUIRE(red.rows() == 4);
        REQUIRE(red.cols() == 4);
        CHECK(is_invertible(red));
    }
    CHECK_THROWS_AS(erasure_submatrix(H, ErasurePattern{}, p.n), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    auto f = ModulusSpec::parse("435");
    auto m5 = ModulusSpec::mersenne(5);
    CHECK_THROWS_AS(CodeParams({26, 10, 1, 2, Variant::C0, f}).validate(),
                    std::invalid_argument);  // mn > 255
    CHECK_THROWS_AS(CodeParams({3, 5, 1, 2, Variant::C0, m5}).validate(),
                    std::invalid_argument);  // mn > 5
    CodeParams c2{3, 5, 1, 2, Variant::C2, m5};
    CHECK_NOTHROW(c2.validate());  // only max(m,n) <= 5 needed
    CHECK_THROWS_AS(CodeParams({3, 6, 1, 2, Variant::C2, m5}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams({3, 5, 2, 2, Variant::C2, f}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams({3, 5, 1, 3, Variant::C2, f}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams({2, 2, 1, 2, Variant::C0, f}).validate(),
                    std::invalid_argument);  // no data symbols
    CHECK_THROWS_AS(CodeParams({3, 2, 2, 1, Variant::C0, f}).validate(),
                    std::invalid_argument);  // n <= r
}

TEST_CASE("printable grid matches the symbolic entries") {
    auto m5 = ModulusSpec::mersenne(5);
    CodeParams p{2, 3, 1, 1, Variant::C2, m5};
    std::string grid = alpha_power_grid(p);
    CHECK(grid ==
          "1 1 1 | 0 0 0\n"
          "0 0 0 | 1 1 1\n"
          "1 a^1 a^2 | 1 a^1 a^2\n");
}
