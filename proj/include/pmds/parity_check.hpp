#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmds/code_params.hpp"
#include "pmds/matrix.hpp"

namespace pmds {

/// Cached table of alpha^k residues, k = 0..e-1. Falls back to on-demand
/// exponentiation when the exponent is too large to tabulate.
class AlphaPowers {
  public:
    explicit AlphaPowers(ModulusSpec::Ptr spec, std::uint64_t table_cap = std::uint64_t(1) << 20)
        : spec_(std::move(spec)) {
        std::uint64_t e = spec_->exponent();
        if (e <= table_cap) {
            tbl_.reserve(std::size_t(e));
            BinPoly acc = BinPoly::one() % spec_->poly();
            for (std::uint64_t k = 0; k < e; ++k) {
                tbl_.push_back(acc);
                acc = acc.shifted_left(1) % spec_->poly();
            }
        }
    }

    const ModulusSpec::Ptr& spec() const { return spec_; }

    BinPoly residue(std::uint64_t k) const {
        k %= spec_->exponent();
        if (!tbl_.empty()) return tbl_[std::size_t(k)];
        return x_pow_mod(k, spec_->poly());
    }

    RingElement element(std::uint64_t k) const { return RingElement(spec_, residue(k)); }

  private:
    ModulusSpec::Ptr spec_;
    std::vector<BinPoly> tbl_;
};

/// One symbolic entry of a parity-check matrix: zero or a power of alpha.
struct HEntry {
    bool zero = true;
    std::uint64_t pow = 0;  // meaningful when !zero, already reduced mod e(f)

    static HEntry zero_entry() { return {}; }
    static HEntry alpha(std::uint64_t k, std::uint64_t e) { return {false, k % e}; }
};

/// The defining exponent grid of the parity-check matrix H(params), row
/// `row` in [0, parity rows), column = i*n + j flat array position.
///
/// C0/C1 have m*r per-row parity rows (first row of each stripe block is
/// all-ones; the remaining r-1 rows carry powers of the flat index), then s
/// global rows. C0 global row u multiplies flat indices by 2^(r+u-1)
/// (successive squaring); C1 multiplies by r+u (consecutive powers). C2 has
/// m all-ones stripe rows, a global row of alpha^j repeated per block, and a
/// second global row with block i starting at alpha^i.
inline HEntry parity_entry(const CodeParams& p, std::size_t row, std::size_t col) {
    const std::uint64_t e = p.spec->exponent();
    const std::uint64_t i = col / p.n, j = col % p.n;
    const std::uint64_t flat = col;
    if (p.variant == Variant::C2) {
        if (row < p.m) return (row == i) ? HEntry::alpha(0, e) : HEntry::zero_entry();
        std::size_t u = row - p.m;
        if (u == 0) return HEntry::alpha(j, e);
        return HEntry::alpha(i + j, e);
    }
    if (row < std::size_t(p.m) * p.r) {
        std::size_t block = row / p.r, l = row % p.r;
        if (block != i) return HEntry::zero_entry();
        if (l == 0) return HEntry::alpha(0, e);
        if (p.variant == Variant::C0) {
            unsigned __int128 k = (unsigned __int128)(flat) << (l - 1);
            return HEntry::alpha(std::uint64_t(k % e), e);
        }
        return HEntry::alpha(std::uint64_t((unsigned __int128)(flat)*l % e), e);
    }
    std::size_t u = row - std::size_t(p.m) * p.r;
    if (p.variant == Variant::C0) {
        unsigned __int128 k = (unsigned __int128)(flat) << (p.r + u - 1);
        return HEntry::alpha(std::uint64_t(k % e), e);
    }
    return HEntry::alpha(std::uint64_t((unsigned __int128)(flat) * (p.r + u) % e), e);
}

inline std::size_t parity_rows(const CodeParams& p) {
    return p.variant == Variant::C2 ? std::size_t(p.m) + p.s : std::size_t(p.m) * p.r + p.s;
}

/// Materialize the (mr+s) x mn (or (m+s) x mn for C2) parity-check matrix.
inline RingMatrix build_parity_check(const CodeParams& p) {
    p.validate();
    AlphaPowers pow(p.spec);
    RingMatrix H(p.spec, parity_rows(p), std::size_t(p.m) * p.n);
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t c = 0; c < H.cols(); ++c) {
            HEntry ent = parity_entry(p, r, c);
            if (!ent.zero) H.at(r, c) = pow.element(ent.pow);
        }
    return H;
}

/// Printable symbolic form ("0", "1", "a^k"), blocks separated by '|'; used
/// to compare construction output against worked examples.
inline std::string alpha_power_grid(const CodeParams& p) {
    p.validate();
    std::ostringstream os;
    for (std::size_t r = 0; r < parity_rows(p); ++r) {
        for (std::size_t c = 0; c < std::size_t(p.m) * p.n; ++c) {
            if (c > 0) os << (c % p.n == 0 ? " | " : " ");
            HEntry ent = parity_entry(p, r, c);
            if (ent.zero)
                os << "0";
            else if (ent.pow == 0)
                os << "1";
            else
                os << "a^" << ent.pow;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pmds
