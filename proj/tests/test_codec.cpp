#include <doctest.h>

#include <sstream>

#include "test_util.hpp"

using namespace pmds;

namespace {

ArrayCodeword erase(const ArrayCodeword& a, const ErasurePattern& pat) {
    ArrayCodeword out = a;
    for (auto [i, j] : pat.positions) out.at(i, j) = RingElement::zero(a.params().spec);
    return out;
}

}  // namespace

TEST_CASE("syndromes of the zero array and of encoded arrays vanish") {
    for (const char* mod : {"435", "mp:23"}) {
        CodeParams p{4, 5, 1, 2, Variant::C0, ModulusSpec::parse(mod)};
        CodeInstance code(p);
        for (const RingElement& s : code.compute_syndromes(ArrayCodeword(p)))
            CHECK(s.is_zero());
        std::mt19937_64 rng(1);
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        CHECK(code.is_codeword(cw));
    }
}

TEST_CASE("flipping one entry moves the syndromes by that entry times its column") {
    CodeParams p{3, 5, 2, 2, Variant::C0, ModulusSpec::parse("435")};
    CodeInstance code(p);
    std::mt19937_64 rng(2);
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
    RingElement e = testutil::random_nonzero(rng, p.spec);
    ArrayCodeword flipped = cw;
    flipped.at(0, 0) ^= e;
    auto syn = code.compute_syndromes(flipped);
    const RingMatrix& H = code.parity_check();
    for (std::size_t r = 0; r < H.rows(); ++r) CHECK(syn[r] == H.at(r, 0) * e);
}

TEST_CASE("all-zero data encodes to the all-zero codeword") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    std::vector<RingElement> data(p.data_symbols(), RingElement::zero(p.spec));
    ArrayCodeword cw = code.encode(data);
    for (unsigned i = 0; i < p.m; ++i)
        for (unsigned j = 0; j < p.n; ++j) CHECK(cw.at(i, j).is_zero());
}

TEST_CASE("default parity layout and the encoder determinant") {
    CodeParams p{4, 5, 1, 2, Variant::C0, ModulusSpec::parse("435")};
    ParityLayout lay = ParityLayout::default_for(p);
    std::vector<std::pair<unsigned, unsigned>> want{
        {0, 4}, {1, 4}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
    CHECK(lay.positions == want);
    // the final solve of the encoder inverts a^(3mn-8) (1 + a^4)
    RingMatrix H = build_parity_check(p);
    RingMatrix red = drop_zero_rows(erasure_submatrix(
        H, ErasurePattern::of({{3, 2}, {3, 3}, {3, 4}}), p.n));
    RingElement one = RingElement::one(p.spec);
    RingElement want_det = RingElement::alpha_pow(p.spec, 3ull * p.m * p.n - 8) *
                           (one ^ RingElement::alpha_pow(p.spec, 4));
    CHECK(determinant(red) == want_det);
}

TEST_CASE("decode with zero erasures returns the array unchanged") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    std::mt19937_64 rng(3);
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
    CHECK(code.decode_erasures(cw, ErasurePattern{}) == cw);
}

TEST_CASE("roundtrip across every profile-shaped pattern of a small PMDS code") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        ErasurePattern pat = testutil::random_profile_pattern(rng, p);
        ArrayCodeword rec = code.decode_erasures(erase(cw, pat), pat);
        CHECK(rec == cw);
    }
}

TEST_CASE("full-column plus two extra erasures recover (the mixed failure scenarios)") {
    CodeParams p{4, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(23)};
    CodeInstance code(p);
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        unsigned dead = unsigned(rng() % p.n);
        std::vector<std::pair<unsigned, unsigned>> pos;
        for (unsigned i = 0; i < p.m; ++i) pos.emplace_back(i, dead);
        // two extra hard errors anywhere off the dead column
        int added = 0;
        while (added < 2) {
            unsigned i = unsigned(rng() % p.m), j = unsigned(rng() % p.n);
            if (j == dead) continue;
            auto pr = std::make_pair(i, j);
            if (std::find(pos.begin(), pos.end(), pr) != pos.end()) continue;
            pos.push_back(pr);
            ++added;
        }
        ErasurePattern pat = ErasurePattern::of(pos);
        ArrayCodeword rec = code.decode_erasures(erase(cw, pat), pat);
        CHECK(rec == cw);
    }
}

TEST_CASE("closed-form paths agree with the generic solver on every applicable pattern") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    RingMatrix H = code.parity_check();
    std::mt19937_64 rng(11);
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));

    auto generic_decode = [&](const ErasurePattern& pat) {
        ArrayCodeword a = erase(cw, pat);
        RingMatrix red = drop_zero_rows(erasure_submatrix(H, pat, p.n));
        std::vector<RingElement> syn = code.compute_syndromes(a);
        // rhs = the syndromes of the nonzero rows, in row order
        std::vector<RingElement> rhs;
        RingMatrix full = erasure_submatrix(H, pat, p.n);
        for (std::size_t r = 0; r < full.rows(); ++r)
            if (!full.row_is_zero(r)) rhs.push_back(syn[r]);
        std::vector<RingElement> x = solve_linear(red, rhs);
        for (std::size_t c = 0; c < pat.size(); ++c) {
            auto [i, j] = pat.positions[c];
            a.at(i, j) = x[c];
        }
        return a;
    };

    // all three-in-one-row patterns
    for (unsigned i = 0; i < p.m; ++i)
        for (unsigned j0 = 0; j0 < p.n; ++j0)
            for (unsigned j1 = j0 + 1; j1 < p.n; ++j1)
                for (unsigned j2 = j1 + 1; j2 < p.n; ++j2) {
                    ErasurePattern pat = ErasurePattern::of({{i, j0}, {i, j1}, {i, j2}});
                    ArrayCodeword fast = code.decode_erasures(erase(cw, pat), pat);
                    CHECK(fast == generic_decode(pat));
                    CHECK(fast == cw);
                }
    // all two-pairs patterns
    for (unsigned i0 = 0; i0 < p.m; ++i0)
        for (unsigned i1 = i0 + 1; i1 < p.m; ++i1)
            for (unsigned j0 = 0; j0 < p.n; ++j0)
                for (unsigned j1 = j0 + 1; j1 < p.n; ++j1)
                    for (unsigned l0 = 0; l0 < p.n; ++l0)
                        for (unsigned l1 = l0 + 1; l1 < p.n; ++l1) {
                            ErasurePattern pat = ErasurePattern::of(
                                {{i0, j0}, {i0, j1}, {i1, l0}, {i1, l1}});
                            ArrayCodeword fast = code.decode_erasures(erase(cw, pat), pat);
                            CHECK(fast == generic_decode(pat));
                            CHECK(fast == cw);
                        }
}

TEST_CASE("decoding is linear in the received array") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::parse("435")};
    CodeInstance code(p);
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        ArrayCodeword c1 = code.encode(testutil::random_data(rng, p));
        ArrayCodeword c2 = code.encode(testutil::random_data(rng, p));
        ErasurePattern pat = testutil::random_profile_pattern(rng, p);
        ArrayCodeword r1 = code.decode_erasures(erase(c1, pat), pat);
        ArrayCodeword r2 = code.decode_erasures(erase(c2, pat), pat);
        ArrayCodeword r12 = code.decode_erasures(erase(c1 ^ c2, pat), pat);
        CHECK(r12 == (r1 ^ r2));
    }
}

TEST_CASE("row_decode") {
    std::mt19937_64 rng(17);
    // r = 1: plain XOR of survivors
    {
        CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
        CodeInstance code(p);
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        ArrayCodeword hole = cw;
        hole.at(1, 2) = RingElement::zero(p.spec);
        auto row = code.row_decode(hole, 1, {2});
        RingElement xor_others = RingElement::zero(p.spec);
        for (unsigned j = 0; j < p.n; ++j)
            if (j != 2) xor_others ^= cw.at(1, j);
        CHECK(row[2] == xor_others);
        CHECK(row[2] == cw.at(1, 2));
        // zero erasures: identity
        auto same = code.row_decode(cw, 1, {});
        for (unsigned j = 0; j < p.n; ++j) CHECK(same[j] == cw.at(1, j));
        CHECK_THROWS_AS(code.row_decode(cw, 1, {0, 1}), std::invalid_argument);
    }
    // r = 2 consecutive-power variant: 2x2 Vandermonde solve
    {
        CodeParams p{3, 6, 2, 1, Variant::C1, ModulusSpec::parse("435")};
        CodeInstance code(p);
        for (int iter = 0; iter < 30; ++iter) {
            ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
            unsigned c0 = unsigned(rng() % p.n), c1 = (c0 + 1 + rng() % (p.n - 1)) % p.n;
            ArrayCodeword hole = cw;
            hole.at(2, c0) = RingElement::zero(p.spec);
            hole.at(2, c1) = RingElement::zero(p.spec);
            auto row = code.row_decode(hole, 2, {c0, c1});
            for (unsigned j = 0; j < p.n; ++j) CHECK(row[j] == cw.at(2, j));
        }
    }
}

TEST_CASE("compact construction: encode, decode, and its hard limits") {
    auto m5 = ModulusSpec::mersenne(5);
    CodeParams p{4, 5, 1, 2, Variant::C2, m5};
    CodeInstance code(p);
    std::mt19937_64 rng(19);
    // the default layout moved one global parity a stripe up; check shape
    ErasurePattern lay = code.layout().as_pattern();
    CHECK(lay.contains(2, 3));
    CHECK(lay.contains(3, 3));
    for (int iter = 0; iter < 50; ++iter) {
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        CHECK(code.is_codeword(cw));
        // one pair of erasures in each of two rows is recoverable
        unsigned i0 = unsigned(rng() % p.m), i1 = (i0 + 1 + rng() % (p.m - 1)) % p.m;
        if (i0 > i1) std::swap(i0, i1);
        ErasurePattern pat = ErasurePattern::of(
            {{i0, 0}, {i0, 2}, {i1, 1}, {i1, 4}});
        CHECK(code.decode_erasures(erase(cw, pat), pat) == cw);
    }
    // three erasures in one row are never recoverable here
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
    ErasurePattern bad = ErasurePattern::of({{1, 0}, {1, 1}, {1, 2}});
    CHECK_THROWS_AS(code.decode_erasures(erase(cw, bad), bad), NotCorrectableError);
}

TEST_CASE("too many erasures in one stripe fail cleanly") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    std::mt19937_64 rng(23);
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
    // s + r + 1 = 4 erasures in one row exceed the capability
    ErasurePattern bad = ErasurePattern::of({{0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(code.decode_erasures(erase(cw, bad), bad), NotCorrectableError);
}

TEST_CASE("codeword files round-trip byte for byte") {
    std::mt19937_64 rng(29);
    for (const char* mod : {"435", "mp:17"}) {
        CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::parse(mod)};
        CodeInstance code(p);
        ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
        std::ostringstream os1;
        write_codeword(os1, cw);
        std::istringstream is(os1.str());
        ArrayCodeword back = read_codeword(is);
        CHECK(back == cw);
        std::ostringstream os2;
        write_codeword(os2, back);
        CHECK(os1.str() == os2.str());
    }
}

TEST_CASE("codeword files reject corruption") {
    CodeParams p{3, 5, 1, 2, Variant::C0, ModulusSpec::mersenne(17)};
    CodeInstance code(p);
    std::mt19937_64 rng(31);
    ArrayCodeword cw = code.encode(testutil::random_data(rng, p));
    std::ostringstream os;
    write_codeword(os, cw);
    std::string blob = os.str();
    {
        std::istringstream is(blob.substr(0, blob.size() - 1));  // truncated
        CHECK_THROWS_AS(read_codeword(is), std::invalid_argument);
    }
    {
        std::istringstream is(blob + "x");  // trailing garbage
        CHECK_THROWS_AS(read_codeword(is), std::invalid_argument);
    }
    {
        std::istringstream is("BOGUS header\n");
        CHECK_THROWS_AS(read_codeword(is), std::invalid_argument);
    }
}

TEST_CASE("symbol packing round-trips and rejects bad padding") {
    std::mt19937_64 rng(37);
    for (unsigned b : {6u, 8u, 16u, 12u}) {
        std::vector<BinPoly> symbols;
        for (int i = 0; i < 17; ++i) symbols.push_back(testutil::random_poly(rng, b - 1));
        auto bytes = pack_symbols(symbols, b);
        CHECK(bytes.size() == (17 * b + 7) / 8);
        CHECK(unpack_symbols(bytes, b, 17) == symbols);
    }
    // nonzero pad bits are rejected
    std::vector<BinPoly> one{BinPoly::one()};
    auto bytes = pack_symbols(one, 3);
    bytes[0] |= 0x80;
    CHECK_THROWS_AS(unpack_symbols(bytes, 3, 1), std::invalid_argument);
}
