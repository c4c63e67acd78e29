#pragma once

#include <atomic>
#include <cstring>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

#include "pmds/codec.hpp"
#include "pmds/matrix.hpp"
#include "pmds/parity_check.hpp"

namespace pmds {

/// A composition (s_1, ..., s_t) of s: row j of the chosen rows carries
/// s_j + r erasures.
struct ErasureProfile {
    std::vector<unsigned> parts;

    unsigned sum() const {
        unsigned t = 0;
        for (unsigned p : parts) t += p;
        return t;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        return out + ")";
    }

    friend bool operator==(const ErasureProfile& a, const ErasureProfile& b) {
        return a.parts == b.parts;
    }
};

/// All compositions of s into at most m positive parts, first part largest
/// first: s=3 gives (3), (2,1), (1,2), (1,1,1).
inline std::vector<ErasureProfile> enumerate_profiles(unsigned s, unsigned m) {
    if (s < 1) throw std::invalid_argument("profiles require s >= 1");
    std::vector<ErasureProfile> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest) -> void {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        if (cur.size() == m) return;
        for (unsigned first = rest; first >= 1; --first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, s);
    return out;
}

/// Decrement every even part by one. The profile is correctable iff its
/// odd-reduced profile is (valid for r = 1).
inline ErasureProfile reduce_profile_odd(const ErasureProfile& p) {
    ErasureProfile out = p;
    for (unsigned& x : out.parts)
        if (x % 2 == 0) --x;
    return out;
}

struct VerifyOptions {
    std::uint64_t pattern_budget = 100'000'000;
    unsigned workers = 0;  // 0 = hardware concurrency
    bool odd_reduction = false;
};

/// The outcome of a verification: yes/no, and for "no" a concrete erasure
/// pattern whose submatrix is singular plus the condition that failed.
struct PmdsVerdict {
    bool is_pmds = true;
    std::optional<ErasureProfile> failing_profile;
    std::optional<ErasurePattern> witness;
    std::optional<std::string> failed_condition;
    std::uint64_t patterns_checked = 0;

    std::string to_text(const CodeParams& p) const {
        std::string out = "params: " + p.to_string() + "\n";
        out += std::string("PMDS: ") + (is_pmds ? "yes" : "no") + "\n";
        if (!is_pmds) {
            if (failed_condition) out += "failed: " + *failed_condition + "\n";
            if (failing_profile) out += "profile: " + failing_profile->to_string() + "\n";
            if (witness) out += "witness: " + witness->to_string() + "\n";
        }
        return out;
    }
};

namespace detail {

// ---- fixed-width modular arithmetic for the oracle hot path ----
// Residues of degree < 256 fit four words; products fit eight.

inline constexpr unsigned kMaxW = 4;

struct FixedRing {
    unsigned w = 1;  // words per reduced residue
    int fdeg = 0;
    std::array<std::uint64_t, kMaxW + 1> f{};

    static std::optional<FixedRing> make(const ModulusSpec& spec) {
        if (spec.degree() > 64 * kMaxW) return std::nullopt;
        FixedRing r;
        r.w = (spec.degree() + 63) / 64;
        r.fdeg = int(spec.degree());
        const auto& words = spec.poly().words();
        for (std::size_t i = 0; i < words.size(); ++i) r.f[i] = words[i];
        return r;
    }
};

inline int fw_deg(const std::uint64_t* a, unsigned words) {
    for (int i = int(words) - 1; i >= 0; --i)
        if (a[std::size_t(i)]) return i * 64 + 63 - __builtin_clzll(a[std::size_t(i)]);
    return -1;
}

inline void fw_xor_shifted(std::uint64_t* a, const std::uint64_t* b, int db, int shift) {
    int words = shift / 64, bits = shift % 64;
    for (int i = db / 64; i >= 0; --i) {
        std::uint64_t v = b[std::size_t(i)];
        if (!v) continue;
        a[std::size_t(i + words)] ^= v << bits;
        if (bits) a[std::size_t(i + words + 1)] ^= v >> (64 - bits);
    }
}

// reduce a (awords wide) mod f in place; result occupies the low fw.w words
inline void fw_reduce(std::uint64_t* a, unsigned awords, const FixedRing& fw) {
    int da = fw_deg(a, awords);
    while (da >= fw.fdeg) {
        fw_xor_shifted(a, fw.f.data(), fw.fdeg, da - fw.fdeg);
        da = fw_deg(a, awords);
    }
}

// out2w (2w words) = a * b, both w words
inline void fw_mul(const std::uint64_t* a, const std::uint64_t* b, unsigned w,
                   std::uint64_t* out2w) {
    std::memset(out2w, 0, sizeof(std::uint64_t) * 2 * w);
    for (unsigned i = 0; i < w; ++i) {
        std::uint64_t wa = a[i];
        while (wa) {
            int bit = __builtin_ctzll(wa);
            wa &= wa - 1;
            for (unsigned j = 0; j < w; ++j) {
                std::uint64_t v = b[j];
                if (!v) continue;
                out2w[i + j] ^= v << bit;
                if (bit) out2w[i + j + 1] ^= v >> (64 - bit);
            }
        }
    }
}

// dst = a*b mod f (all w words); scratch must hold 2w+1 words
inline void fw_mulmod(const std::uint64_t* a, const std::uint64_t* b, const FixedRing& fw,
                      std::uint64_t* dst, std::uint64_t* scratch) {
    scratch[2 * fw.w] = 0;
    fw_mul(a, b, fw.w, scratch);
    fw_reduce(scratch, 2 * fw.w + 1, fw);
    std::memcpy(dst, scratch, sizeof(std::uint64_t) * fw.w);
}

inline bool fw_is_zero(const std::uint64_t* a, unsigned w) {
    for (unsigned i = 0; i < w; ++i)
        if (a[i]) return false;
    return true;
}

inline bool fw_is_one(const std::uint64_t* a, unsigned w) {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < w; ++i)
        if (a[i]) return false;
    return true;
}

// gcd(a, f) == 1 on stack buffers
inline bool fw_unit(const std::uint64_t* a, const FixedRing& fw) {
    std::array<std::uint64_t, kMaxW + 1> x{}, y{};
    std::memcpy(x.data(), a, sizeof(std::uint64_t) * fw.w);
    y = fw.f;
    int dx = fw_deg(x.data(), fw.w), dy = fw.fdeg;
    if (dx < 0) return false;
    while (true) {
        if (dx < dy) {
            std::swap(x, y);
            std::swap(dx, dy);
        }
        if (dy < 0) return dx == 0;
        if (dy == 0) return true;
        while (dx >= dy) {
            fw_xor_shifted(x.data(), y.data(), dy, dx - dy);
            dx = fw_deg(x.data(), kMaxW + 1);
        }
    }
}

// Determinant-is-unit test for a small matrix held in fixed-width form.
// Entries live in buf (k rows x k cols x w words). Pivots equal to 1 are
// eliminated first; the dense remainder goes through direct expansion.
struct DetScratch {
    std::vector<std::uint64_t> buf;       // k*k*w entries
    std::array<std::uint64_t, 2 * kMaxW + 1> prod{};
    std::vector<std::uint64_t> minors;    // recursion workspace

    std::uint64_t* entry(std::size_t k, unsigned w, std::size_t r, std::size_t c) {
        return buf.data() + (r * k + c) * w;
    }
};

// det of the alive core by Laplace expansion (k <= 4 in practice); result
// into out (w words)
inline void fw_det_rec(DetScratch& ws, const FixedRing& fw, std::size_t k,
                       const std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
                       std::uint64_t* out) {
    const unsigned w = fw.w;
    if (rows.size() == 1) {
        std::memcpy(out, ws.entry(k, w, rows[0], cols[0]), sizeof(std::uint64_t) * w);
        return;
    }
    std::memset(out, 0, sizeof(std::uint64_t) * w);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::array<std::uint64_t, kMaxW> minor;
    std::array<std::uint64_t, kMaxW> term;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const std::uint64_t* a = ws.entry(k, w, rows[0], cols[ci]);
        if (fw_is_zero(a, w)) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) sub_cols.push_back(cols[cj]);
        fw_det_rec(ws, fw, k, sub_rows, sub_cols, minor.data());
        if (fw_is_zero(minor.data(), w)) continue;
        fw_mulmod(a, minor.data(), fw, term.data(), ws.prod.data());
        for (unsigned i = 0; i < w; ++i) out[i] ^= term[i];
    }
}

inline bool fw_det_is_unit(DetScratch& ws, const FixedRing& fw, std::size_t k) {
    const unsigned w = fw.w;
    std::vector<std::size_t> rows(k), cols(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = cols[i] = i;
    std::array<std::uint64_t, kMaxW> coefbuf, tmp;

    bool progress = true;
    while (progress && rows.size() > 1) {
        progress = false;
        for (std::size_t ri = 0; ri < rows.size() && !progress; ++ri)
            for (std::size_t ci = 0; ci < cols.size() && !progress; ++ci) {
                if (!fw_is_one(ws.entry(k, w, rows[ri], cols[ci]), w)) continue;
                std::size_t pr = rows[ri], pc = cols[ci];
                for (std::size_t r2 : rows) {
                    if (r2 == pr) continue;
                    std::uint64_t* coef = ws.entry(k, w, r2, pc);
                    if (fw_is_zero(coef, w)) continue;
                    std::memcpy(coefbuf.data(), coef, sizeof(std::uint64_t) * w);
                    for (std::size_t c2 : cols) {
                        if (c2 == pc) continue;
                        const std::uint64_t* src = ws.entry(k, w, pr, c2);
                        if (fw_is_zero(src, w)) continue;
                        fw_mulmod(coefbuf.data(), src, fw, tmp.data(), ws.prod.data());
                        std::uint64_t* dst = ws.entry(k, w, r2, c2);
                        for (unsigned i = 0; i < w; ++i) dst[i] ^= tmp[i];
                    }
                    std::memset(coef, 0, sizeof(std::uint64_t) * w);
                }
                rows.erase(rows.begin() + long(ri));
                cols.erase(cols.begin() + long(ci));
                progress = true;
            }
    }
    if (rows.empty()) return true;
    std::array<std::uint64_t, kMaxW> det;
    fw_det_rec(ws, fw, k, rows, cols, det.data());
    if (fw_is_zero(det.data(), w)) return false;
    return fw_unit(det.data(), fw);
}

// ---- oracle support ----

// The erasure submatrix built straight from the symbolic entry grid; avoids
// materializing all of H for large instances.
inline RingMatrix erasure_submatrix_direct(const CodeParams& p, const ErasurePattern& pattern) {
    AlphaPowers pow(p.spec);
    RingMatrix out(p.spec, parity_rows(p), pattern.size());
    for (std::size_t c = 0; c < pattern.size(); ++c) {
        auto [pi, pj] = pattern.positions[c];
        std::size_t col = std::size_t(pi) * p.n + pj;
        for (std::size_t r = 0; r < out.rows(); ++r) {
            HEntry ent = parity_entry(p, r, col);
            if (!ent.zero) out.at(r, c) = pow.element(ent.pow);
        }
    }
    return out;
}

// Exact column-independence test over the (possibly reducible) ring for a
// tall matrix: columns are independent iff gcd(f, gcd of all maximal minors)
// is 1. Only used for profiles whose per-row erasure count is capped at n.
inline bool tall_columns_independent(const RingMatrix& M) {
    const std::size_t R = M.rows(), E = M.cols();
    if (R < E) return false;
    const BinPoly& f = M.spec()->poly();
    BinPoly g = f;
    std::vector<std::size_t> pick(E);
    for (std::size_t i = 0; i < E; ++i) pick[i] = i;
    while (true) {
        RingMatrix sq(M.spec(), E, E);
        for (std::size_t i = 0; i < E; ++i)
            for (std::size_t c = 0; c < E; ++c) sq.at(i, c) = M.at(pick[i], c);
        BinPoly d = determinant(sq).residue();
        if (!d.is_zero()) {
            g = poly_gcd(g, d);
            if (g.is_one()) return true;
        }
        std::size_t i = E;
        while (i > 0 && pick[i - 1] == R - E + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < E; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g.is_one();
}

// Per-instance context for fast pattern checks.
struct OracleContext {
    const CodeParams& p;
    AlphaPowers pow;
    std::optional<FixedRing> fr;
    std::vector<std::vector<std::uint64_t>> powfix;  // residue table in fixed form

    explicit OracleContext(const CodeParams& params) : p(params), pow(params.spec) {
        fr = FixedRing::make(*params.spec);
        if (fr && params.spec->exponent() <= (std::uint64_t(1) << 20)) {
            powfix.resize(std::size_t(params.spec->exponent()));
            for (std::uint64_t k = 0; k < params.spec->exponent(); ++k) {
                auto& v = powfix[std::size_t(k)];
                v.assign(fr->w, 0);
                const auto& words = pow.residue(k).words();
                std::copy(words.begin(), words.end(), v.begin());
            }
        } else {
            fr.reset();  // fall back to the generic path
        }
    }
};

// designated rows + per-row column sets -> is the pattern correctable?
inline bool oracle_pattern_ok(OracleContext& ctx, DetScratch& ws,
                              const std::vector<unsigned>& rows,
                              const std::vector<std::vector<unsigned>>& colsets) {
    const CodeParams& p = ctx.p;
    std::size_t K = 0;
    for (const auto& cs : colsets) K += cs.size();
    std::size_t t = rows.size();
    std::size_t stripe_rows = (p.variant == Variant::C2) ? t : t * p.r;
    if (stripe_rows + p.s != K || !ctx.fr) {
        // capped or oversized profile, or wide modulus: exact generic path
        std::vector<std::pair<unsigned, unsigned>> pos;
        for (std::size_t j = 0; j < t; ++j)
            for (unsigned c : colsets[j]) pos.emplace_back(rows[j], c);
        RingMatrix sub = erasure_submatrix_direct(p, ErasurePattern::of(std::move(pos)));
        RingMatrix red = drop_zero_rows(sub);
        if (red.rows() == red.cols()) return is_invertible(red);
        return tall_columns_independent(red);
    }
    const FixedRing& fw = *ctx.fr;
    const unsigned w = fw.w;
    ws.buf.assign(K * K * w, 0);
    // reduced system rows: stripe parity rows of the designated rows, then
    // the global rows; columns in ascending flat order
    std::size_t col = 0;
    const std::uint64_t e = p.spec->exponent();
    auto put = [&](std::size_t rr, std::size_t cc, std::uint64_t powk) {
        const auto& v = ctx.powfix[std::size_t(powk % e)];
        std::memcpy(ws.entry(K, w, rr, cc), v.data(), sizeof(std::uint64_t) * w);
    };
    unsigned rper = (p.variant == Variant::C2) ? 1 : p.r;
    for (std::size_t j = 0; j < t; ++j) {
        for (unsigned c : colsets[j]) {
            std::uint64_t flat = std::uint64_t(rows[j]) * p.n + c;
            for (unsigned q = 0; q < rper; ++q) {
                std::size_t rr = j * rper + q;
                if (q == 0)
                    put(rr, col, 0);
                else if (p.variant == Variant::C0)
                    put(rr, col, std::uint64_t(((unsigned __int128)(flat) << (q - 1)) % e));
                else
                    put(rr, col, flat * q);
            }
            for (unsigned u = 0; u < p.s; ++u) {
                std::size_t rr = t * rper + u;
                if (p.variant == Variant::C0)
                    put(rr, col, std::uint64_t(((unsigned __int128)(flat) << (p.r + u - 1)) % e));
                else if (p.variant == Variant::C1)
                    put(rr, col, std::uint64_t((unsigned __int128)(flat) * (p.r + u) % e));
                else  // C2
                    put(rr, col, u == 0 ? c : (std::uint64_t(rows[j]) + c));
            }
            ++col;
        }
    }
    return fw_det_is_unit(ws, fw, K);
}

// ---- oracle enumeration ----

inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return std::uint64_t(acc);
}

// next k-combination of {0..n-1} in colexicographic order; false when done
inline bool next_colex(std::vector<unsigned>& c, unsigned n) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        unsigned limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = unsigned(j);
            return true;
        }
    }
    return false;
}

// next t-combination of {0..m-1} in lexicographic order; false when done
inline bool next_lex(std::vector<unsigned>& c, unsigned m) {
    const std::size_t t = c.size();
    std::size_t i = t;
    while (i > 0 && c[i - 1] == m - t + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < t; ++j) c[j] = c[j - 1] + 1;
    return true;
}

struct OracleFailure {
    std::uint64_t item;
    std::uint64_t counter;
    std::vector<unsigned> rows;
    std::vector<std::vector<unsigned>> colsets;
    std::size_t profile_index;
};

// One work item: a (profile, row-tuple) pair scanned sequentially.
struct OracleItem {
    std::size_t profile_index;
    std::vector<unsigned> rows;
};

inline ErasurePattern pattern_from(const std::vector<unsigned>& rows,
                                   const std::vector<std::vector<unsigned>>& colsets) {
    std::vector<std::pair<unsigned, unsigned>> pos;
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (unsigned c : colsets[j]) pos.emplace_back(rows[j], c);
    return ErasurePattern::of(std::move(pos));
}

inline PmdsVerdict oracle_run(const CodeParams& params,
                              const std::vector<ErasureProfile>& profiles,
                              const VerifyOptions& opts) {
    params.validate();
    // budget and work-item list
    std::uint64_t total = 0;
    std::vector<OracleItem> items;
    std::vector<std::vector<unsigned>> item_sizes;  // capped per-row counts per profile
    item_sizes.reserve(profiles.size());
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        const auto& prof = profiles[pi];
        unsigned t = unsigned(prof.parts.size());
        if (t > params.m) {
            item_sizes.emplace_back();
            continue;
        }
        std::vector<unsigned> sizes;
        std::uint64_t per_tuple = 1;
        for (unsigned sj : prof.parts) {
            unsigned want = sj + params.r;
            unsigned cap = std::min(want, params.n);
            sizes.push_back(cap);
            std::uint64_t c = binom_u64(params.n, cap);
            per_tuple = (per_tuple > UINT64_MAX / std::max<std::uint64_t>(c, 1)) ? UINT64_MAX
                                                                                 : per_tuple * c;
        }
        item_sizes.push_back(sizes);
        std::uint64_t tuples = binom_u64(params.m, t);
        std::uint64_t prof_total =
            (tuples > 0 && per_tuple > UINT64_MAX / tuples) ? UINT64_MAX : tuples * per_tuple;
        total = (total > UINT64_MAX - prof_total) ? UINT64_MAX : total + prof_total;
        std::vector<unsigned> rows(t);
        for (unsigned i = 0; i < t; ++i) rows[i] = i;
        do {
            items.push_back({pi, rows});
        } while (next_lex(rows, params.m));
    }
    if (total > opts.pattern_budget)
        throw BudgetExceededError("oracle would enumerate " + std::to_string(total) +
                                  " patterns, budget is " + std::to_string(opts.pattern_budget));

    std::atomic<std::size_t> next_item{0};
    std::atomic<std::uint64_t> best_item{UINT64_MAX};
    std::atomic<std::uint64_t> checked{0};
    std::mutex mu;
    std::optional<OracleFailure> best;

    auto worker = [&] {
        OracleContext ctx(params);
        DetScratch ws;
        std::uint64_t local_checked = 0;
        while (true) {
            std::size_t idx = next_item.fetch_add(1);
            if (idx >= items.size()) break;
            if (idx > best_item.load(std::memory_order_relaxed)) continue;
            const OracleItem& item = items[idx];
            const auto& sizes = item_sizes[item.profile_index];
            // odometer over per-row column subsets, last row fastest
            std::vector<std::vector<unsigned>> colsets(sizes.size());
            for (std::size_t j = 0; j < sizes.size(); ++j) {
                colsets[j].resize(sizes[j]);
                for (unsigned i = 0; i < sizes[j]; ++i) colsets[j][i] = i;
            }
            std::uint64_t counter = 0;
            bool done = false;
            while (!done) {
                ++local_checked;
                if (!oracle_pattern_ok(ctx, ws, item.rows, colsets)) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!best || idx < best->item || (idx == best->item && counter < best->counter)) {
                        best = OracleFailure{idx, counter, item.rows, colsets, item.profile_index};
                        std::uint64_t cur = best_item.load();
                        while (idx < cur && !best_item.compare_exchange_weak(cur, idx)) {
                        }
                    }
                    break;
                }
                ++counter;
                // advance odometer
                std::size_t j = sizes.size();
                while (j > 0) {
                    if (next_colex(colsets[j - 1], params.n)) break;
                    for (unsigned i = 0; i < sizes[j - 1]; ++i) colsets[j - 1][i] = i;
                    --j;
                }
                if (j == 0) done = true;
            }
        }
        checked.fetch_add(local_checked);
    };

    unsigned nthreads = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(items.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    PmdsVerdict v;
    v.patterns_checked = checked.load();
    if (best) {
        v.is_pmds = false;
        v.failing_profile = profiles[best->profile_index];
        v.witness = pattern_from(best->rows, best->colsets);
        v.failed_condition = "oracle";
    }
    return v;
}

}  // namespace detail

/// Direct Definition-2.1 check of one profile: enumerate all row choices and
/// all per-row column subsets of size s_j+r (capped at n) and test every
/// erasure submatrix. First singular pattern (rows ascending, column tuples
/// in colexicographic order, last designated row fastest) becomes the
/// witness.
inline PmdsVerdict oracle_is_correcting(const CodeParams& params, const ErasureProfile& profile,
                                        const VerifyOptions& opts = {}) {
    if (profile.sum() != params.s)
        throw std::invalid_argument("profile parts must sum to s");
    for (unsigned sj : profile.parts)
        if (sj < 1) throw std::invalid_argument("profile parts must be positive");
    if (profile.parts.size() > params.m)
        throw std::invalid_argument("profile has more parts than rows");
    return detail::oracle_run(params, {profile}, opts);
}

/// Definition-2.1 check over every profile (compositions of s); profiles
/// requiring more erasures in a row than columns exist are covered by the
/// exact patterns of other profiles and are skipped.
inline PmdsVerdict oracle_is_pmds(const CodeParams& params, const VerifyOptions& opts = {}) {
    if (params.s == 0) return {};
    auto all = enumerate_profiles(params.s, params.m);
    std::vector<ErasureProfile> use;
    for (auto& prof : all) {
        if (opts.odd_reduction && params.r == 1) {
            bool all_odd = true;
            for (unsigned x : prof.parts) all_odd = all_odd && (x % 2 == 1);
            if (!all_odd) continue;
        }
        // a profile demanding more erasures than a row has is dominated by
        // the exact patterns of other profiles; skip it
        bool capped = false;
        for (unsigned sj : prof.parts) capped = capped || (sj + params.r > params.n);
        if (capped) continue;
        use.push_back(std::move(prof));
    }
    if (use.empty()) return {};
    return detail::oracle_run(params, use, opts);
}

/// Lemma A.1: determinant of the matrix whose row u is the entrywise 2^u-th
/// power of first_row equals the product of the XORs of all nonempty subsets
/// of first_row.
inline RingElement moore_determinant(const std::vector<RingElement>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("moore determinant requires s >= 1");
    const auto& spec = first_row[0].spec();
    RingElement acc = RingElement::one(spec);
    const std::size_t s = first_row.size();
    if (s > 20) throw std::invalid_argument("subset product limited to s <= 20");
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << s); ++mask) {
        RingElement x = RingElement::zero(spec);
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::uint64_t(1) << i)) x ^= first_row[i];
        acc = acc * x;
    }
    return acc;
}

}  // namespace pmds
