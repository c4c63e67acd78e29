#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmds/modulus.hpp"

namespace pmds {

/// The three parity-check constructions. C0 derives its global rows by
/// successive squaring, C1 by consecutive powers, and C2 is the compact
/// variant that only needs max(m, n) <= e(f) but gives up three-erasures-
/// per-row correction.
enum class Variant { C0, C1, C2 };

inline std::string variant_name(Variant v) {
    switch (v) {
        case Variant::C0: return "c0";
        case Variant::C1: return "c1";
        case Variant::C2: return "c2";
    }
    return "?";
}

inline Variant parse_variant(std::string_view s) {
    if (s == "c0" || s == "C0") return Variant::C0;
    if (s == "c1" || s == "C1") return Variant::C1;
    if (s == "c2" || s == "C2") return Variant::C2;
    throw std::invalid_argument("unknown construction variant: " + std::string(s));
}

/// (m, n, r, s, variant, modulus): everything that determines a code
/// instance. m rows per block, n devices, r per-row parities, s global
/// parities.
struct CodeParams {
    unsigned m = 0, n = 0, r = 0, s = 0;
    Variant variant = Variant::C0;
    ModulusSpec::Ptr spec;

    unsigned data_symbols() const { return m * (n - r) - s; }
    unsigned parity_symbols() const { return m * r + s; }
    unsigned total_symbols() const { return m * n; }

    void validate() const {
        if (!spec) throw std::invalid_argument("code parameters require a modulus");
        if (m < 1 || n < 2 || r < 1) throw std::invalid_argument("require m >= 1, n >= 2, r >= 1");
        if (n <= r) throw std::invalid_argument("require n > r");
        if (std::uint64_t(m) * (n - r) <= s)
            throw std::invalid_argument("no data symbols left: m(n-r) - s < 1");
        if (variant == Variant::C2) {
            if (r != 1) throw std::invalid_argument("variant c2 requires r = 1");
            if (s > 2) throw std::invalid_argument("variant c2 supports only s <= 2");
            if (std::max(m, n) > spec->exponent())
                throw std::invalid_argument("variant c2 requires max(m, n) <= e(f)");
        } else {
            if (std::uint64_t(m) * n > spec->exponent())
                throw std::invalid_argument("require m*n <= e(f)");
        }
    }

    std::string to_string() const {
        return "variant=" + variant_name(variant) + " m=" + std::to_string(m) +
               " n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
               " modulus=" + (spec ? spec->to_string() : "?");
    }
};

/// A set of (row, col) array positions, kept sorted by flat index row*n+col.
struct ErasurePattern {
    std::vector<std::pair<unsigned, unsigned>> positions;

    static ErasurePattern of(std::vector<std::pair<unsigned, unsigned>> pos) {
        ErasurePattern p;
        p.positions = std::move(pos);
        std::sort(p.positions.begin(), p.positions.end());
        p.positions.erase(std::unique(p.positions.begin(), p.positions.end()), p.positions.end());
        return p;
    }

    std::size_t size() const { return positions.size(); }
    bool empty() const { return positions.empty(); }

    void validate(unsigned m, unsigned n) const {
        for (auto [r, c] : positions)
            if (r >= m || c >= n) throw std::invalid_argument("erasure position out of range");
    }

    bool contains(unsigned r, unsigned c) const {
        return std::binary_search(positions.begin(), positions.end(), std::make_pair(r, c));
    }

    std::string to_string() const {
        std::string out;
        for (auto [r, c] : positions) {
            if (!out.empty()) out += ";";
            out += std::to_string(r) + "," + std::to_string(c);
        }
        return out;
    }

    /// "r,c;r,c;..." (whitespace tolerated); empty string is an empty pattern.
    static ErasurePattern parse(std::string_view text) {
        std::vector<std::pair<unsigned, unsigned>> pos;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
        auto read_uint = [&]() -> unsigned {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw std::invalid_argument("expected number in erasure list");
            return unsigned(std::stoul(std::string(text.substr(start, i - start))));
        };
        skip_ws();
        while (i < text.size()) {
            unsigned r = read_uint();
            skip_ws();
            if (i >= text.size() || text[i] != ',')
                throw std::invalid_argument("expected ',' in erasure pair");
            ++i;
            unsigned c = read_uint();
            pos.emplace_back(r, c);
            skip_ws();
            if (i < text.size()) {
                if (text[i] != ';') throw std::invalid_argument("expected ';' between erasure pairs");
                ++i;
                skip_ws();
            }
        }
        return of(std::move(pos));
    }
};

}  // namespace pmds
