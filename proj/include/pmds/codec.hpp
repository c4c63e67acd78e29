#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pmds/matrix.hpp"
#include "pmds/parity_check.hpp"

namespace pmds {

/// Which array entries hold parity. The erasure submatrix at these positions
/// must be invertible; CodeInstance checks that at construction by running a
/// decode of the all-zero array.
struct ParityLayout {
    std::vector<std::pair<unsigned, unsigned>> positions;

    /// Row parities in the last r columns of every stripe; global parities in
    /// the last stripe immediately left of its row parities. C2 cannot place
    /// three parities in one stripe (three erasures in a row are never
    /// recoverable there), so its extra global parity moves one stripe up.
    static ParityLayout default_for(const CodeParams& p) {
        ParityLayout out;
        for (unsigned i = 0; i < p.m; ++i)
            for (unsigned c = p.n - p.r; c < p.n; ++c) out.positions.emplace_back(i, c);
        if (p.variant == Variant::C2) {
            for (unsigned u = 0; u < p.s; ++u) {
                if (u + 1 > p.m) throw std::invalid_argument("not enough stripes for c2 parity layout");
                out.positions.emplace_back(p.m - 1 - u, p.n - 2);
            }
        } else {
            for (unsigned u = 0; u < p.s; ++u) out.positions.emplace_back(p.m - 1, p.n - p.r - p.s + u);
        }
        std::sort(out.positions.begin(), out.positions.end());
        return out;
    }

    ErasurePattern as_pattern() const { return ErasurePattern::of(positions); }
};

/// An m x n grid of ring elements attached to its code parameters.
class ArrayCodeword {
  public:
    ArrayCodeword(CodeParams params)
        : params_(std::move(params)),
          grid_(std::size_t(params_.m) * params_.n, RingElement::zero(params_.spec)) {}

    const CodeParams& params() const { return params_; }
    RingElement& at(unsigned i, unsigned j) { return grid_[std::size_t(i) * params_.n + j]; }
    const RingElement& at(unsigned i, unsigned j) const {
        return grid_[std::size_t(i) * params_.n + j];
    }
    const std::vector<RingElement>& grid() const { return grid_; }
    std::vector<RingElement>& grid() { return grid_; }

    friend bool operator==(const ArrayCodeword& a, const ArrayCodeword& b) {
        return a.grid_ == b.grid_;
    }
    friend ArrayCodeword operator^(ArrayCodeword a, const ArrayCodeword& b) {
        for (std::size_t i = 0; i < a.grid_.size(); ++i) a.grid_[i] ^= b.grid_[i];
        return a;
    }

  private:
    CodeParams params_;
    std::vector<RingElement> grid_;
};

/// A code instance: parameters, materialized parity-check matrix, parity
/// layout and power table. Immutable once built; decoding distinct arrays
/// from one instance is safe in parallel.
class CodeInstance {
  public:
    explicit CodeInstance(CodeParams params)
        : CodeInstance(std::move(params), std::nullopt) {}

    CodeInstance(CodeParams params, std::optional<ParityLayout> layout)
        : params_(std::move(params)),
          H_((params_.validate(), build_parity_check(params_))),
          layout_(layout ? std::move(*layout) : ParityLayout::default_for(params_)),
          pow_(params_.spec) {
        if (layout_.positions.size() != params_.parity_symbols())
            throw std::invalid_argument("parity layout must name exactly m*r+s positions");
        ErasurePattern pat = layout_.as_pattern();
        pat.validate(params_.m, params_.n);
        if (pat.size() != layout_.positions.size())
            throw std::invalid_argument("parity layout positions must be distinct");
        // the layout is usable iff the all-zero array decodes through it
        try {
            decode_erasures(ArrayCodeword(params_), pat);
        } catch (const NotCorrectableError&) {
            throw std::invalid_argument("parity layout is not invertible for these parameters");
        }
    }

    const CodeParams& params() const { return params_; }
    const RingMatrix& parity_check() const { return H_; }
    const ParityLayout& layout() const { return layout_; }

    /// All m*r+s syndromes of the grid (erased entries must already be 0).
    std::vector<RingElement> compute_syndromes(const ArrayCodeword& a) const {
        return H_.mul_vec(a.grid());
    }

    bool is_codeword(const ArrayCodeword& a) const {
        for (const RingElement& s : compute_syndromes(a))
            if (!s.is_zero()) return false;
        return true;
    }

    /// Systematic encode: data goes row-major into non-parity positions and
    /// the parity entries are produced by erasure-decoding the layout.
    ArrayCodeword encode(const std::vector<RingElement>& data) const {
        if (data.size() != params_.data_symbols())
            throw std::invalid_argument("encode expects m(n-r)-s data symbols");
        ArrayCodeword a(params_);
        ErasurePattern pat = layout_.as_pattern();
        std::size_t next = 0;
        for (unsigned i = 0; i < params_.m; ++i)
            for (unsigned j = 0; j < params_.n; ++j) {
                if (pat.contains(i, j)) continue;
                a.at(i, j) = data[next++];
            }
        return decode_erasures(a, pat);
    }

    std::vector<RingElement> extract_data(const ArrayCodeword& a) const {
        ErasurePattern pat = layout_.as_pattern();
        std::vector<RingElement> out;
        out.reserve(params_.data_symbols());
        for (unsigned i = 0; i < params_.m; ++i)
            for (unsigned j = 0; j < params_.n; ++j)
                if (!pat.contains(i, j)) out.push_back(a.at(i, j));
        return out;
    }

    /// Recover one stripe from its own r parity rows; erasedCols must have at
    /// most r entries. With r = 1 this is the plain XOR of the survivors.
    std::vector<RingElement> row_decode(const ArrayCodeword& a, unsigned row,
                                        const std::vector<unsigned>& erasedCols) const {
        if (erasedCols.size() > params_.r)
            throw std::invalid_argument("row_decode handles at most r erasures");
        ArrayCodeword work = a;
        for (unsigned c : erasedCols) work.at(row, c) = RingElement::zero(params_.spec);
        row_decode_in_place(work, row, erasedCols);
        std::vector<RingElement> out;
        out.reserve(params_.n);
        for (unsigned j = 0; j < params_.n; ++j) out.push_back(work.at(row, j));
        return out;
    }

    /// Recover the erased entries; pattern lists exactly the erased
    /// positions. Throws NotCorrectableError when the pattern's submatrix is
    /// singular. Rows with at most r erasures are peeled first via their own
    /// parities; the r=1, s=2 closed forms cover the remaining one-row-of-3
    /// and two-pairs shapes; everything else goes through the generic solver.
    ArrayCodeword decode_erasures(ArrayCodeword a, const ErasurePattern& pattern) const {
        pattern.validate(params_.m, params_.n);
        if (pattern.empty()) return a;
        for (auto [i, j] : pattern.positions) a.at(i, j) = RingElement::zero(params_.spec);

        std::vector<std::vector<unsigned>> by_row(params_.m);
        for (auto [i, j] : pattern.positions) by_row[i].push_back(j);

        bool progress = true;
        while (progress) {
            progress = false;
            for (unsigned i = 0; i < params_.m; ++i) {
                if (by_row[i].empty() || by_row[i].size() > params_.r) continue;
                row_decode_in_place(a, i, by_row[i]);
                by_row[i].clear();
                progress = true;
            }
        }

        std::vector<std::pair<unsigned, unsigned>> rest;
        for (unsigned i = 0; i < params_.m; ++i)
            for (unsigned j : by_row[i]) rest.emplace_back(i, j);
        if (!rest.empty()) {
            ErasurePattern remaining = ErasurePattern::of(std::move(rest));
            if (!try_fast_path(a, remaining)) solve_remaining(a, remaining);
        }
        if (!is_codeword(a))
            throw NotCorrectableError("recovered array fails the parity check: " +
                                      pattern.to_string());
        return a;
    }

  private:
    CodeParams params_;
    RingMatrix H_;
    ParityLayout layout_;
    AlphaPowers pow_;

    RingElement alpha(std::uint64_t k) const { return pow_.element(k); }

    void row_decode_in_place(ArrayCodeword& a, unsigned row,
                             const std::vector<unsigned>& cols) const {
        if (cols.empty()) return;
        if (cols.size() > params_.r)
            throw std::invalid_argument("row_decode handles at most r erasures");
        const unsigned n = params_.n;
        if (params_.r == 1) {
            RingElement acc = RingElement::zero(params_.spec);
            for (unsigned j = 0; j < n; ++j)
                if (j != cols[0]) acc ^= a.at(row, j);
            a.at(row, cols[0]) = acc;
            return;
        }
        std::size_t base = std::size_t(row) * params_.r;
        RingMatrix M(params_.spec, params_.r, cols.size());
        std::vector<RingElement> rhs;
        rhs.reserve(params_.r);
        for (unsigned q = 0; q < params_.r; ++q) {
            RingElement acc = RingElement::zero(params_.spec);
            for (unsigned j = 0; j < n; ++j) {
                const RingElement& h = H_.at(base + q, std::size_t(row) * n + j);
                if (!h.is_zero() && !a.at(row, j).is_zero()) acc ^= h * a.at(row, j);
            }
            rhs.push_back(acc);
            for (std::size_t k = 0; k < cols.size(); ++k)
                M.at(q, k) = H_.at(base + q, std::size_t(row) * n + cols[k]);
        }
        std::vector<RingElement> x;
        try {
            x = detail::solve_system(M, rhs);
        } catch (const SingularSystemError&) {
            throw NotCorrectableError("stripe parity system is singular");
        }
        for (std::size_t k = 0; k < cols.size(); ++k) a.at(row, cols[k]) = x[k];
    }

    // stripe parity rows of affected stripes plus the global rows, columns at
    // the remaining erasures
    void solve_remaining(ArrayCodeword& a, const ErasurePattern& remaining) const {
        const unsigned n = params_.n;
        std::vector<bool> touched(params_.m, false);
        for (auto [i, j] : remaining.positions) touched[i] = true;
        std::vector<std::size_t> rows;
        std::size_t stripe_rows = parity_rows(params_) - params_.s;
        for (unsigned i = 0; i < params_.m; ++i)
            if (touched[i])
                for (unsigned q = 0; q < params_.r; ++q) rows.push_back(std::size_t(i) * params_.r + q);
        for (unsigned u = 0; u < params_.s; ++u) rows.push_back(stripe_rows + u);

        if (rows.size() < remaining.size())
            throw NotCorrectableError("more erasures than available parity equations: " +
                                      remaining.to_string());

        std::vector<RingElement> syn = compute_syndromes(a);
        RingMatrix M(params_.spec, rows.size(), remaining.size());
        std::vector<RingElement> rhs;
        rhs.reserve(rows.size());
        for (std::size_t q = 0; q < rows.size(); ++q) {
            rhs.push_back(syn[rows[q]]);
            for (std::size_t c = 0; c < remaining.size(); ++c) {
                auto [pi, pj] = remaining.positions[c];
                M.at(q, c) = H_.at(rows[q], std::size_t(pi) * n + pj);
            }
        }
        std::vector<RingElement> x;
        try {
            x = detail::solve_system(M, rhs);
        } catch (const SingularSystemError&) {
            throw NotCorrectableError("erasure submatrix is singular: " + remaining.to_string());
        } catch (const NotInvertibleError&) {
            throw NotCorrectableError("erasure submatrix is singular: " + remaining.to_string());
        }
        for (std::size_t c = 0; c < remaining.size(); ++c) {
            auto [pi, pj] = remaining.positions[c];
            a.at(pi, pj) = x[c];
        }
    }

    bool try_fast_path(ArrayCodeword& a, const ErasurePattern& remaining) const {
        if (params_.r != 1 || params_.s != 2 || params_.variant == Variant::C2) return false;
        std::vector<std::vector<unsigned>> by_row(params_.m);
        std::vector<unsigned> rows;
        for (auto [i, j] : remaining.positions) {
            if (by_row[i].empty()) rows.push_back(i);
            by_row[i].push_back(j);
        }
        if (rows.size() == 1 && by_row[rows[0]].size() == 3) {
            fast_three_in_row(a, rows[0], by_row[rows[0]]);
            return true;
        }
        if (rows.size() == 2 && by_row[rows[0]].size() == 2 && by_row[rows[1]].size() == 2) {
            fast_two_pairs(a, rows[0], by_row[rows[0]], rows[1], by_row[rows[1]]);
            return true;
        }
        return false;
    }

    // Cramer solve of the one-row 3x3 Vandermonde system, with the
    // denominator taken in closed form:
    //   det = a^(3*i0*n+2*j0+j1) (1+a^(j1-j0)) (1+a^(j2-j0)) (1+a^(j2-j1))
    void fast_three_in_row(ArrayCodeword& a, unsigned i0, const std::vector<unsigned>& js) const {
        const unsigned n = params_.n;
        const std::uint64_t e = params_.spec->exponent();
        unsigned j0 = js[0], j1 = js[1], j2 = js[2];
        std::vector<RingElement> syn = compute_syndromes(a);
        const RingElement& Srow = syn[std::size_t(i0)];
        const RingElement& Sm = syn[std::size_t(params_.m)];
        const RingElement& Sm1 = syn[std::size_t(params_.m) + 1];

        RingElement one = RingElement::one(params_.spec);
        auto binom = [&](unsigned d) { return one ^ alpha(d); };
        RingElement det = alpha((3ull * i0 * n + 2ull * j0 + j1) % e) * binom(j1 - j0) *
                          binom(j2 - j0) * binom(j2 - j1);
        RingElement inv;
        try {
            inv = det.inverse();
        } catch (const NotInvertibleError&) {
            throw NotCorrectableError("three-erasure Vandermonde system is singular");
        }
        auto kappa = [&](unsigned j) { return std::uint64_t(i0) * n + j; };
        RingMatrix num(params_.spec, 3, 3);
        std::vector<RingElement> s3{Srow, Sm, Sm1};
        unsigned jv[3] = {j0, j1, j2};
        for (unsigned target = 0; target < 3; ++target) {
            for (unsigned r = 0; r < 3; ++r)
                for (unsigned c = 0; c < 3; ++c)
                    num.at(r, c) = (c == target) ? s3[r]
                                                 : (r == 0 ? one : alpha(kappa(jv[c]) * r));
            a.at(i0, jv[target]) = determinant(num) * inv;
        }
    }

    // Two pairs in rows i0 < i1: substitute the stripe equations into the two
    // global ones and solve the 2x2 system; its determinant is a unit times
    //   1 + a^(j1-j0) + a^((i1-i0)n + l0 - j0) (1 + a^(l1-l0)),
    // inverted by extended Euclid.
    void fast_two_pairs(ArrayCodeword& a, unsigned i0, const std::vector<unsigned>& js,
                        unsigned i1, const std::vector<unsigned>& ls) const {
        const unsigned n = params_.n;
        unsigned j0 = js[0], j1 = js[1], l0 = ls[0], l1 = ls[1];
        std::vector<RingElement> syn = compute_syndromes(a);
        const RingElement& S0 = syn[std::size_t(i0)];
        const RingElement& S1 = syn[std::size_t(i1)];
        const RingElement& Sm = syn[std::size_t(params_.m)];
        const RingElement& Sm1 = syn[std::size_t(params_.m) + 1];

        std::uint64_t p0 = std::uint64_t(i0) * n + j0, p1 = std::uint64_t(i0) * n + j1;
        std::uint64_t q0 = std::uint64_t(i1) * n + l0, q1 = std::uint64_t(i1) * n + l1;
        RingElement m00 = alpha(p0) ^ alpha(p1);
        RingElement m01 = alpha(q0) ^ alpha(q1);
        RingElement m10 = alpha(2 * p0) ^ alpha(2 * p1);
        RingElement m11 = alpha(2 * q0) ^ alpha(2 * q1);
        RingElement t0 = Sm ^ (alpha(p1) * S0) ^ (alpha(q1) * S1);
        RingElement t1 = Sm1 ^ (alpha(2 * p1) * S0) ^ (alpha(2 * q1) * S1);

        RingElement det = (m00 * m11) ^ (m01 * m10);
        RingElement inv;
        try {
            inv = det.inverse();
        } catch (const NotInvertibleError&) {
            throw NotCorrectableError("two-pair erasure system is singular");
        }
        RingElement a0 = ((t0 * m11) ^ (t1 * m01)) * inv;
        RingElement b0 = ((m00 * t1) ^ (m10 * t0)) * inv;
        a.at(i0, j0) = a0;
        a.at(i0, j1) = S0 ^ a0;
        a.at(i1, l0) = b0;
        a.at(i1, l1) = S1 ^ b0;
    }
};

/// Spec-facing free functions over a one-shot instance.
inline std::vector<RingElement> compute_syndromes(const ArrayCodeword& a) {
    return build_parity_check(a.params()).mul_vec(a.grid());
}

inline ArrayCodeword encode(const std::vector<RingElement>& data, const CodeParams& params,
                            const ParityLayout& layout) {
    return CodeInstance(params, layout).encode(data);
}

inline ArrayCodeword decode_erasures(const ArrayCodeword& a, const ErasurePattern& pattern) {
    return CodeInstance(a.params()).decode_erasures(a, pattern);
}

// ---- serialization ----
//
// Codeword files are one ASCII header line
//   PMDS1 variant=<c0|c1|c2> m=<m> n=<n> r=<r> s=<s> modulus=<octal|mp:p>\n
// followed by the m*n symbols row-major, each b bits, packed LSB-first into
// a little-endian bitstream padded with zero bits to a byte boundary.

inline std::vector<std::uint8_t> pack_symbols(const std::vector<BinPoly>& symbols, unsigned b) {
    std::vector<std::uint8_t> out((symbols.size() * b + 7) / 8, 0);
    std::size_t bit = 0;
    for (const BinPoly& s : symbols) {
        for (unsigned i = 0; i < b; ++i, ++bit)
            if (s.coeff(i)) out[bit / 8] |= std::uint8_t(1u << (bit % 8));
    }
    return out;
}

inline std::vector<BinPoly> unpack_symbols(const std::vector<std::uint8_t>& bytes, unsigned b,
                                           std::size_t count) {
    if (bytes.size() != (count * b + 7) / 8)
        throw std::invalid_argument("payload size does not match symbol count");
    std::vector<BinPoly> out;
    out.reserve(count);
    std::size_t bit = 0;
    for (std::size_t si = 0; si < count; ++si) {
        BinPoly p;
        for (unsigned i = 0; i < b; ++i, ++bit)
            if (bytes[bit / 8] & (1u << (bit % 8))) p.set_coeff(i, true);
        out.push_back(std::move(p));
    }
    // trailing pad bits must be zero
    for (; bit < bytes.size() * 8; ++bit)
        if (bytes[bit / 8] & (1u << (bit % 8)))
            throw std::invalid_argument("nonzero padding bits in payload");
    return out;
}

inline void write_codeword(std::ostream& os, const ArrayCodeword& a) {
    const CodeParams& p = a.params();
    os << "PMDS1 " << p.to_string() << "\n";
    std::vector<BinPoly> symbols;
    symbols.reserve(a.grid().size());
    for (const RingElement& e : a.grid()) symbols.push_back(e.residue());
    auto bytes = pack_symbols(symbols, p.spec->degree());
    os.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

inline ArrayCodeword read_codeword(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("missing codeword header");
    std::istringstream hs(header);
    std::string magic;
    hs >> magic;
    if (magic != "PMDS1") throw std::invalid_argument("bad codeword magic");
    CodeParams p;
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad header token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "variant")
            p.variant = parse_variant(val);
        else if (key == "m")
            p.m = unsigned(std::stoul(val));
        else if (key == "n")
            p.n = unsigned(std::stoul(val));
        else if (key == "r")
            p.r = unsigned(std::stoul(val));
        else if (key == "s")
            p.s = unsigned(std::stoul(val));
        else if (key == "modulus")
            p.spec = ModulusSpec::parse(val);
        else
            throw std::invalid_argument("unknown header key: " + key);
    }
    p.validate();
    std::size_t count = p.total_symbols();
    std::size_t nbytes = (count * p.spec->degree() + 7) / 8;
    std::vector<std::uint8_t> bytes(nbytes);
    is.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(nbytes));
    if (std::size_t(is.gcount()) != nbytes) throw std::invalid_argument("truncated codeword payload");
    if (is.peek() != std::char_traits<char>::eof())
        throw std::invalid_argument("trailing bytes after codeword payload");
    auto symbols = unpack_symbols(bytes, p.spec->degree(), count);
    ArrayCodeword a(p);
    for (std::size_t i = 0; i < count; ++i)
        a.grid()[i] = RingElement(p.spec, symbols[i]);
    return a;
}

}  // namespace pmds
