#pragma once

#include <iomanip>
#include <sstream>
#include <thread>

#include "pmds/fast_checks.hpp"

namespace pmds {

/// One published reference row: a modulus, an array shape, and whether that
/// code instance is PMDS.
struct TableRow {
    const char* modulus;  // "mp:<p>" or octal digits
    unsigned m, n;
    bool expected_pmds;
};

/// Reference rows for fields GF(2^b): b, defining polynomial (octal), its
/// exponent, and a shape for which the s=2 single-row-parity code is PMDS.
struct FieldTableRow {
    unsigned b;
    const char* octal;
    std::uint64_t exponent;
    unsigned m, n;
};

enum class TablePreset { Table1, Table2, Table3, Table4 };

namespace tables {

inline constexpr FieldTableRow kTable1[] = {
    {8, "435", 255, 5, 5},       {8, "567", 85, 7, 5},        {8, "433", 51, 10, 5},
    {9, "1021", 511, 20, 6},     {9, "1231", 73, 10, 7},      {10, "3025", 1023, 21, 6},
    {10, "3025", 1023, 15, 7},   {11, "6015", 2047, 29, 6},   {11, "6015", 2047, 25, 7},
    {11, "6015", 2047, 22, 8},   {11, "5361", 2047, 13, 10},  {12, "15647", 4095, 67, 6},
    {12, "15647", 4095, 58, 7},  {12, "15647", 4095, 50, 8},  {12, "15647", 4095, 24, 9},
    {12, "15647", 4095, 22, 10}, {16, "227215", 13107, 404, 6}, {16, "227215", 13107, 346, 7},
    {16, "227215", 13107, 303, 8}, {16, "227215", 13107, 269, 9}, {16, "227215", 13107, 242, 10},
    {16, "227215", 13107, 164, 11}, {16, "227215", 13107, 160, 12}, {16, "227215", 13107, 59, 16},
    {16, "227215", 13107, 45, 17}, {16, "227215", 13107, 53, 18}, {16, "227215", 13107, 24, 20},
    {16, "227215", 13107, 19, 22}, {16, "227215", 13107, 21, 23}, {16, "227215", 13107, 18, 24},
    {16, "227215", 13107, 17, 25}, {16, "227215", 13107, 16, 26},
};

// primes with 2 not primitive, shapes with mn < p, single row parity, s = 2
inline constexpr TableRow kTable2[] = {
    {"mp:17", 4, 4, true},    {"mp:23", 3, 7, true},    {"mp:23", 4, 5, true},
    {"mp:31", 5, 6, false},   {"mp:31", 6, 5, false},   {"mp:41", 5, 8, true},
    {"mp:41", 6, 6, true},    {"mp:41", 8, 5, true},    {"mp:43", 5, 8, true},
    {"mp:43", 6, 7, true},    {"mp:47", 4, 11, true},   {"mp:47", 5, 9, true},
    {"mp:71", 7, 10, true},   {"mp:71", 8, 8, true},    {"mp:71", 10, 7, true},
    {"mp:73", 6, 12, false},  {"mp:73", 7, 10, false},  {"mp:73", 8, 9, false},
    {"mp:73", 9, 8, false},   {"mp:79", 6, 13, true},   {"mp:79", 7, 11, true},
    {"mp:79", 8, 9, true},    {"mp:89", 8, 11, false},  {"mp:89", 9, 9, false},
    {"mp:89", 11, 8, true},   {"mp:97", 8, 12, true},   {"mp:97", 10, 9, true},
    {"mp:97", 12, 8, true},   {"mp:103", 9, 11, true},  {"mp:103", 10, 10, true},
    {"mp:103", 11, 9, true},  {"mp:109", 9, 12, true},  {"mp:109", 10, 10, true},
    {"mp:109", 12, 9, true},  {"mp:113", 10, 11, true}, {"mp:113", 11, 10, true},
    {"mp:113", 12, 9, true},  {"mp:127", 11, 11, true}, {"mp:127", 13, 9, true},
    {"mp:137", 11, 12, true}, {"mp:137", 12, 11, true}, {"mp:137", 13, 10, true},
    {"mp:137", 15, 9, true},  {"mp:137", 16, 8, true},  {"mp:151", 15, 10, true},
    {"mp:151", 16, 9, true},  {"mp:157", 12, 13, true}, {"mp:157", 13, 12, true},
    {"mp:157", 14, 11, true}, {"mp:157", 15, 10, true}, {"mp:157", 16, 9, true},
    {"mp:167", 12, 13, true}, {"mp:167", 13, 12, true}, {"mp:167", 15, 11, true},
    {"mp:167", 16, 10, true}, {"mp:191", 13, 14, true}, {"mp:191", 14, 13, true},
    {"mp:191", 17, 11, true}, {"mp:193", 16, 12, true}, {"mp:199", 14, 14, true},
    {"mp:199", 16, 12, true}, {"mp:223", 15, 14, true}, {"mp:223", 17, 13, true},
    {"mp:229", 15, 15, true}, {"mp:229", 16, 14, true}, {"mp:233", 15, 15, true},
    {"mp:233", 16, 14, true}, {"mp:239", 15, 15, true}, {"mp:239", 16, 14, true},
    {"mp:241", 16, 15, true}, {"mp:251", 16, 15, true}, {"mp:251", 25, 10, true},
    {"mp:257", 16, 16, true}, {"mp:257", 32, 8, true},
};

// same construction with s = 3
inline constexpr TableRow kTable3[] = {
    {"mp:17", 4, 4, false},   {"mp:23", 3, 7, true},    {"mp:23", 4, 5, true},
    {"mp:31", 5, 6, false},   {"mp:31", 6, 5, false},   {"mp:41", 5, 8, true},
    {"mp:41", 6, 6, true},    {"mp:41", 8, 5, true},    {"mp:43", 5, 8, false},
    {"mp:43", 6, 7, false},   {"mp:47", 4, 11, true},   {"mp:47", 5, 9, true},
    {"mp:71", 7, 10, true},   {"mp:71", 8, 8, true},    {"mp:71", 10, 7, true},
    {"mp:73", 6, 12, false},  {"mp:73", 7, 10, false},  {"mp:73", 8, 9, false},
    {"mp:73", 9, 8, false},   {"mp:79", 6, 13, true},   {"mp:79", 7, 11, true},
    {"mp:79", 8, 9, true},    {"mp:89", 8, 11, false},  {"mp:89", 9, 9, false},
    {"mp:89", 11, 8, false},  {"mp:97", 8, 12, true},   {"mp:97", 10, 9, true},
    {"mp:97", 12, 8, true},   {"mp:103", 9, 11, true},  {"mp:103", 10, 10, true},
    {"mp:103", 11, 9, true},  {"mp:109", 9, 12, true},  {"mp:109", 10, 10, true},
    {"mp:109", 12, 9, true},  {"mp:113", 10, 11, true}, {"mp:113", 11, 10, true},
    {"mp:113", 12, 9, true},  {"mp:127", 11, 11, false}, {"mp:127", 13, 9, false},
    {"mp:137", 11, 12, true}, {"mp:137", 12, 11, true}, {"mp:151", 15, 10, false},
    {"mp:151", 16, 9, false}, {"mp:157", 12, 13, true}, {"mp:157", 16, 9, true},
    {"mp:167", 16, 10, true}, {"mp:191", 17, 11, true}, {"mp:193", 16, 12, true},
    {"mp:199", 16, 12, true}, {"mp:223", 17, 13, true}, {"mp:229", 16, 14, true},
    {"mp:229", 28, 8, true},  {"mp:233", 23, 10, true}, {"mp:239", 26, 9, true},
    {"mp:241", 16, 15, false}, {"mp:241", 24, 10, false}, {"mp:251", 25, 10, true},
    {"mp:257", 16, 16, false}, {"mp:257", 32, 8, false},
};

// consecutive-power construction with s = 3
inline constexpr TableRow kTable4[] = {
    {"mp:17", 4, 4, false},   {"mp:23", 3, 7, false},   {"mp:23", 4, 5, true},
    {"mp:31", 5, 6, false},   {"mp:31", 6, 5, false},   {"mp:41", 5, 8, false},
    {"mp:41", 6, 6, true},    {"mp:41", 8, 5, true},    {"mp:43", 5, 8, false},
    {"mp:43", 6, 7, false},   {"mp:47", 4, 11, true},   {"mp:47", 5, 9, true},
    {"mp:71", 7, 10, true},   {"mp:71", 8, 8, true},    {"mp:71", 10, 7, true},
    {"mp:73", 6, 12, false},  {"mp:73", 7, 10, false},  {"mp:73", 8, 9, false},
    {"mp:73", 9, 8, false},   {"mp:79", 6, 13, true},   {"mp:79", 7, 11, true},
    {"mp:79", 8, 9, true},    {"mp:89", 8, 11, false},  {"mp:89", 9, 9, false},
    {"mp:89", 11, 8, false},  {"mp:97", 8, 12, true},   {"mp:97", 10, 9, true},
    {"mp:97", 12, 8, true},   {"mp:103", 9, 11, true},  {"mp:103", 10, 10, true},
    {"mp:103", 11, 9, true},  {"mp:109", 9, 12, true},  {"mp:109", 10, 10, true},
    {"mp:109", 12, 9, true},  {"mp:113", 10, 11, false}, {"mp:113", 11, 10, false},
    {"mp:113", 12, 9, false}, {"mp:127", 11, 11, false}, {"mp:127", 13, 9, false},
    {"mp:137", 11, 12, true}, {"mp:137", 12, 11, true}, {"mp:137", 13, 10, true},
    {"mp:137", 15, 9, true},  {"mp:137", 16, 8, true},  {"mp:151", 15, 10, false},
    {"mp:151", 16, 9, false}, {"mp:157", 12, 13, true}, {"mp:157", 13, 12, true},
    {"mp:157", 16, 9, true},  {"mp:167", 16, 10, true}, {"mp:191", 17, 11, true},
    {"mp:193", 16, 12, true}, {"mp:199", 16, 12, true}, {"mp:223", 17, 13, true},
    {"mp:229", 16, 14, true}, {"mp:229", 28, 8, true},  {"mp:233", 23, 10, true},
    {"mp:239", 26, 9, true},  {"mp:241", 24, 10, false}, {"mp:251", 25, 10, true},
    {"mp:257", 16, 16, false}, {"mp:257", 32, 8, false},
};

}  // namespace tables

struct TableOutcome {
    std::string modulus;
    unsigned m = 0, n = 0;
    bool expected = false;
    bool computed = false;
    std::string failed_condition;  // empty when PMDS
    bool matches() const { return expected == computed; }
};

namespace detail {

inline CodeParams preset_params(TablePreset preset, const char* modulus, unsigned m, unsigned n) {
    CodeParams p;
    p.m = m;
    p.n = n;
    p.r = 1;
    p.s = (preset == TablePreset::Table1 || preset == TablePreset::Table2) ? 2 : 3;
    p.variant = (preset == TablePreset::Table4) ? Variant::C1 : Variant::C0;
    p.spec = ModulusSpec::parse(modulus);
    return p;
}

template <typename Work>
inline void parallel_rows(std::size_t count, unsigned workers, Work&& work) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Run every row of a preset through check_fast. Throws on rows whose
/// modulus does not round-trip (table 1 also cross-checks the exponent).
inline std::vector<TableOutcome> run_table_preset(TablePreset preset, unsigned workers = 0) {
    std::vector<TableOutcome> out;
    if (preset == TablePreset::Table1) {
        std::size_t count = std::size(tables::kTable1);
        out.resize(count);
        detail::parallel_rows(count, workers, [&](std::size_t i) {
            const auto& row = tables::kTable1[i];
            CodeParams p = detail::preset_params(preset, row.octal, row.m, row.n);
            if (p.spec->exponent() != row.exponent)
                throw std::logic_error(std::string("exponent mismatch for ") + row.octal);
            if (p.spec->degree() != row.b)
                throw std::logic_error(std::string("degree mismatch for ") + row.octal);
            PmdsVerdict v = check_fast(p);
            out[i] = TableOutcome{row.octal, row.m, row.n, true, v.is_pmds,
                                  v.failed_condition.value_or("")};
        });
        return out;
    }
    const TableRow* rows = nullptr;
    std::size_t count = 0;
    switch (preset) {
        case TablePreset::Table2: rows = tables::kTable2; count = std::size(tables::kTable2); break;
        case TablePreset::Table3: rows = tables::kTable3; count = std::size(tables::kTable3); break;
        case TablePreset::Table4: rows = tables::kTable4; count = std::size(tables::kTable4); break;
        default: break;
    }
    out.resize(count);
    detail::parallel_rows(count, workers, [&](std::size_t i) {
        const auto& row = rows[i];
        CodeParams p = detail::preset_params(preset, row.modulus, row.m, row.n);
        PmdsVerdict v = check_fast(p);
        out[i] = TableOutcome{row.modulus, row.m, row.n, row.expected_pmds, v.is_pmds,
                              v.failed_condition.value_or("")};
    });
    return out;
}

/// Custom sweep: one (modulus, m, n) triple per row, verdicts by check_fast
/// or by the oracle.
inline std::vector<TableOutcome> run_custom_rows(const std::vector<CodeParams>& rows,
                                                 bool use_oracle, const VerifyOptions& opts = {}) {
    std::vector<TableOutcome> out(rows.size());
    detail::parallel_rows(rows.size(), opts.workers, [&](std::size_t i) {
        const CodeParams& p = rows[i];
        PmdsVerdict v = use_oracle ? oracle_is_pmds(p, VerifyOptions{opts.pattern_budget, 1,
                                                                     opts.odd_reduction})
                                   : check_fast(p);
        out[i] = TableOutcome{p.spec->to_string(), p.m, p.n, v.is_pmds, v.is_pmds,
                              v.failed_condition.value_or("")};
    });
    return out;
}

inline std::string format_table_outcomes(const std::vector<TableOutcome>& rows, bool csv) {
    std::ostringstream os;
    if (csv) {
        os << "modulus,m,n,expected,computed,match\n";
        for (const auto& r : rows)
            os << r.modulus << "," << r.m << "," << r.n << "," << (r.expected ? "YES" : "NO")
               << "," << (r.computed ? "YES" : "NO") << "," << (r.matches() ? "ok" : "MISMATCH")
               << "\n";
    } else {
        os << std::left << std::setw(10) << "modulus" << std::setw(5) << "m" << std::setw(5)
           << "n" << std::setw(10) << "expected" << std::setw(10) << "computed" << "match\n";
        for (const auto& r : rows)
            os << std::left << std::setw(10) << r.modulus << std::setw(5) << r.m << std::setw(5)
               << r.n << std::setw(10) << (r.expected ? "YES" : "NO") << std::setw(10)
               << (r.computed ? "YES" : "NO") << (r.matches() ? "ok" : "MISMATCH") << "\n";
    }
    return os.str();
}

}  // namespace pmds
