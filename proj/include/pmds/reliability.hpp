#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace pmds {

/// Inputs of the data-loss model for one catastrophic device failure: raw
/// bit-error probability p, per-sector correction capability t (BCH-style,
/// 13t redundancy bits on a 4096-bit payload), page/stripe geometry and the
/// device size in pages.
struct ReliabilityParams {
    double p = 0.0;
    unsigned t = 15;
    unsigned info_bits = 4096;
    unsigned sectors_per_page = 8;
    unsigned m = 16;
    unsigned n = 6;
    std::uint64_t pages_per_device = 8'000'000;  // 32G at 4K pages

    unsigned redundancy_bits() const { return 13 * t; }
    unsigned codeword_bits() const { return info_bits + redundancy_bits(); }
    std::uint64_t blocks_per_device() const { return pages_per_device / m; }

    void validate() const {
        if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must be in [0, 1)");
        if (t < 1 || info_bits < 1 || sectors_per_page < 1 || m < 1 || n < 2)
            throw std::invalid_argument("counts must be positive (n >= 2)");
        if (pages_per_device < m) throw std::invalid_argument("device smaller than one block");
    }
};

namespace detail {

// log C(n, k)
inline double log_binom(std::uint64_t n, std::uint64_t k) {
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
           std::lgamma(double(n - k) + 1);
}

}  // namespace detail

/// Upper binomial tail P(X >= k), X ~ Bin(N, p): the first term is taken in
/// the log domain, successors by the term ratio, stopping once terms drop
/// below 1e-30 of the running sum.
inline double binomial_tail_log(std::uint64_t N, std::uint64_t k, double p) {
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (k == 0) return 1.0;
    if (k > N) return 0.0;
    double log_term =
        detail::log_binom(N, k) + double(k) * std::log(p) + double(N - k) * std::log1p(-p);
    double term = std::exp(log_term);
    double sum = term;
    for (std::uint64_t i = k; i < N; ++i) {
        term *= double(N - i) / double(i + 1) * (p / (1.0 - p));
        sum += term;
        if (term < sum * 1e-30) break;
    }
    return sum;
}

/// Same tail with the first term built by an incremental product instead of
/// lgamma; the independent route used to cross-check stability.
inline double binomial_tail_incremental(std::uint64_t N, std::uint64_t k, double p) {
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (k == 0) return 1.0;
    if (k > N) return 0.0;
    // T_k = C(N,k) p^k (1-p)^(N-k), accumulated factor by factor to keep the
    // running value in range
    double term = std::exp(double(N - k) * std::log1p(-p));
    for (std::uint64_t i = 1; i <= k; ++i) term *= double(N - k + i) / double(i) * p;
    double sum = term;
    for (std::uint64_t i = k; i < N; ++i) {
        term *= double(N - i) / double(i + 1) * (p / (1.0 - p));
        sum += term;
        if (term < sum * 1e-30) break;
    }
    return sum;
}

/// P: probability that one sector codeword sees more than t bit errors.
inline double codeword_failure(const ReliabilityParams& rp) {
    rp.validate();
    return binomial_tail_log(rp.codeword_bits(), rp.t + 1, rp.p);
}

/// P_H = 1 - (1-P)^sectors: at least one uncorrectable codeword in a page.
inline double page_hard_error(double P, unsigned sectors_per_page) {
    return -std::expm1(double(sectors_per_page) * std::log1p(-P));
}

struct StripeProbs {
    double exactly_one;   // exactly one hard error among the n-1 survivors
    double more_than_1;   // two or more
    double more_than_2;   // three or more
};

/// Hard-error counts within one stripe after losing a device (n-1 pages).
inline double stripe_more_than(double P_H, unsigned n, unsigned j) {
    double sum = 0.0;
    for (unsigned i = j + 1; i <= n - 1; ++i) {
        double term = std::exp(detail::log_binom(n - 1, i) + double(i) * std::log(P_H) +
                               double(n - 1 - i) * std::log1p(-P_H));
        sum += term;
    }
    return P_H > 0.0 ? sum : 0.0;
}

inline StripeProbs stripe_probs(double P_H, unsigned n) {
    StripeProbs out{};
    if (P_H <= 0.0) return out;
    out.exactly_one = double(n - 1) * P_H * std::exp(double(n - 2) * std::log1p(-P_H));
    out.more_than_1 = stripe_more_than(P_H, n, 1);
    out.more_than_2 = stripe_more_than(P_H, n, 2);
    return out;
}

struct BlockProbs {
    double one_in_three_stripes;  // exactly one hard error in >= 3 of m stripes
    double over1_any_stripe;      // >= 2 hard errors in some stripe
    double over2_any_stripe;      // >= 3 hard errors in some stripe
};

inline BlockProbs block_probs(unsigned m, double P_H, const StripeProbs& sp, unsigned n) {
    BlockProbs out{};
    if (P_H <= 0.0) return out;
    double log_clean = double(n - 1) * std::log1p(-P_H);  // stripe with no hard error
    double sum = 0.0;
    for (unsigned i = 3; i <= m; ++i) {
        double term = std::exp(detail::log_binom(m, i) + double(i) * std::log(sp.exactly_one) +
                               double(m - i) * log_clean);
        sum += term;
    }
    out.one_in_three_stripes = sum;
    out.over1_any_stripe = double(m) * sp.more_than_1;
    out.over2_any_stripe = double(m) * sp.more_than_2;
    return out;
}

struct SchemeBlockLoss {
    double ec111;   // single parity plus two one-per-row globals
    double pmds12;  // single parity plus two unconstrained globals
};

inline SchemeBlockLoss scheme_block_loss(const BlockProbs& bp) {
    return {bp.one_in_three_stripes + bp.over1_any_stripe,
            bp.one_in_three_stripes + bp.over2_any_stripe};
}

/// 1 - (1 - P_S)^(blocks): data loss anywhere on the device.
inline double device_data_loss(double block_loss, std::uint64_t blocks) {
    if (block_loss <= 0.0) return 0.0;
    if (block_loss >= 1.0) return 1.0;
    return -std::expm1(double(blocks) * std::log1p(-block_loss));
}

/// The same quantity as an explicit binomial sum over the block count; kept
/// as the identity cross-check for device_data_loss.
inline double device_data_loss_binomial(double block_loss, std::uint64_t blocks) {
    if (block_loss <= 0.0) return 0.0;
    double log1m = std::log1p(-block_loss);
    double term = std::exp(detail::log_binom(blocks, 1) + std::log(block_loss) +
                           double(blocks - 1) * log1m);
    double sum = term;
    for (std::uint64_t i = 1; i < blocks; ++i) {
        term *= double(blocks - i) / double(i + 1) * (block_loss / (1.0 - block_loss));
        sum += term;
        if (term < sum * 1e-30) break;
    }
    return sum;
}

/// One column of the reliability table.
struct ReliabilityRow {
    double p, P, P_H;
    double PS_m13, PS_m21, PS_m31;
    double PS_111EC, PS_12PMDS;
    double PDL_111EC, PDL_12PMDS;
};

inline ReliabilityRow reliability_row(const ReliabilityParams& rp) {
    ReliabilityRow row{};
    row.p = rp.p;
    row.P = codeword_failure(rp);
    row.P_H = page_hard_error(row.P, rp.sectors_per_page);
    StripeProbs sp = stripe_probs(row.P_H, rp.n);
    BlockProbs bp = block_probs(rp.m, row.P_H, sp, rp.n);
    row.PS_m13 = bp.one_in_three_stripes;
    row.PS_m21 = bp.over1_any_stripe;
    row.PS_m31 = bp.over2_any_stripe;
    SchemeBlockLoss sl = scheme_block_loss(bp);
    row.PS_111EC = sl.ec111;
    row.PS_12PMDS = sl.pmds12;
    row.PDL_111EC = device_data_loss(sl.ec111, rp.blocks_per_device());
    row.PDL_12PMDS = device_data_loss(sl.pmds12, rp.blocks_per_device());
    return row;
}

inline std::vector<ReliabilityRow> table5(const std::vector<double>& ps,
                                          ReliabilityParams base = {}) {
    std::vector<ReliabilityRow> rows;
    rows.reserve(ps.size());
    for (double p : ps) {
        base.p = p;
        rows.push_back(reliability_row(base));
    }
    return rows;
}

inline std::string format_reliability_table(const std::vector<ReliabilityRow>& rows, bool csv) {
    static const char* names[] = {"p",         "P",          "P_H",       "P_S_m13",
                                  "P_S_m21",   "P_S_m31",    "P_S_111EC", "P_S_12PMDS",
                                  "P_DL_111EC", "P_DL_12PMDS"};
    auto field = [](const ReliabilityRow& r, int i) -> double {
        switch (i) {
            case 0: return r.p;
            case 1: return r.P;
            case 2: return r.P_H;
            case 3: return r.PS_m13;
            case 4: return r.PS_m21;
            case 5: return r.PS_m31;
            case 6: return r.PS_111EC;
            case 7: return r.PS_12PMDS;
            case 8: return r.PDL_111EC;
            default: return r.PDL_12PMDS;
        }
    };
    std::ostringstream os;
    os << std::scientific << std::setprecision(1);
    for (int i = 0; i < 10; ++i) {
        if (csv) {
            os << names[i];
            for (const auto& r : rows) os << "," << field(r, i);
            os << "\n";
        } else {
            os << std::setw(12) << std::left << names[i] << std::right;
            for (const auto& r : rows) os << " " << std::setw(9) << field(r, i);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace pmds
