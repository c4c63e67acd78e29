#pragma once

#include <cstring>
#include <optional>
#include <vector>

#include "pmds/code_params.hpp"
#include "pmds/errors.hpp"
#include "pmds/modulus.hpp"

namespace pmds {

/// Dense matrix over one field/ring. Entries are kept reduced.
class RingMatrix {
  public:
    RingMatrix(ModulusSpec::Ptr spec, std::size_t rows, std::size_t cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols),
          e_(rows * cols, RingElement::zero(spec_)) {
        if (!spec_) throw std::invalid_argument("matrix requires a modulus");
        if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static RingMatrix identity(ModulusSpec::Ptr spec, std::size_t n) {
        RingMatrix m(std::move(spec), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElement::one(m.spec_);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const ModulusSpec::Ptr& spec() const { return spec_; }

    RingElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const RingElement& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool row_is_zero(std::size_t r) const {
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) return false;
        return true;
    }

    std::vector<RingElement> mul_vec(const std::vector<RingElement>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<RingElement> out(rows_, RingElement::zero(spec_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] ^= at(r, c) * v[c];
        return out;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    ModulusSpec::Ptr spec_;
    std::size_t rows_, cols_;
    std::vector<RingElement> e_;
};

namespace detail {

// Reference determinant: Laplace expansion along the first remaining row.
inline BinPoly det_cofactor_rec(const RingMatrix& M, std::vector<std::size_t>& rows,
                                std::vector<std::size_t>& cols) {
    const ModulusSpec& spec = *M.spec();
    if (rows.size() == 1) return M.at(rows[0], cols[0]).residue();
    std::size_t r0 = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    BinPoly acc;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const BinPoly& a = M.at(r0, cols[ci]).residue();
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) sub_cols.push_back(cols[cj]);
        BinPoly minor = det_cofactor_rec(M, sub_rows, sub_cols);
        if (!minor.is_zero()) acc ^= spec.reduce(a * minor);
    }
    return acc;
}

// Fraction-free elimination over GF(2)[x] (an integral domain), reducing mod
// f only at the end. Row swaps are free of sign bookkeeping in char 2.
inline BinPoly det_bareiss(std::vector<BinPoly> a, std::size_t k, const ModulusSpec& spec) {
    auto at = [&](std::size_t i, std::size_t j) -> BinPoly& { return a[i * k + j]; };
    BinPoly prev = BinPoly::one();
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (at(p, p).is_zero()) {
            std::size_t sw = p + 1;
            while (sw < k && at(sw, p).is_zero()) ++sw;
            if (sw == k) return BinPoly::zero();
            for (std::size_t j = p; j < k; ++j) std::swap(at(p, j), at(sw, j));
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                BinPoly num = (at(i, j) * at(p, p)) ^ (at(i, p) * at(p, j));
                if (num.is_zero()) {
                    at(i, j) = BinPoly::zero();
                    continue;
                }
                auto [q, rem] = BinPoly::divmod(num, prev);
                if (!rem.is_zero()) throw std::logic_error("fraction-free elimination lost exactness");
                at(i, j) = std::move(q);
            }
            at(i, p) = BinPoly::zero();
        }
        prev = at(p, p);
    }
    return spec.reduce(at(k - 1, k - 1));
}

// Peel off pivots that are literally 1 (no inversion needed in the ring),
// then hand the dense remainder to cofactor expansion or fraction-free
// elimination. Exact over rings with zero divisors.
inline BinPoly det_structured(const RingMatrix& M) {
    const ModulusSpec& spec = *M.spec();
    std::size_t k = M.rows();
    std::vector<BinPoly> a(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i * k + j] = M.at(i, j).residue();
    auto at = [&](std::size_t i, std::size_t j) -> BinPoly& { return a[i * k + j]; };

    std::vector<std::size_t> rows(k), cols(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = cols[i] = i;

    bool progress = true;
    while (progress && rows.size() > 1) {
        progress = false;
        for (std::size_t ri = 0; ri < rows.size() && !progress; ++ri) {
            for (std::size_t ci = 0; ci < cols.size() && !progress; ++ci) {
                if (!at(rows[ri], cols[ci]).is_one()) continue;
                std::size_t pr = rows[ri], pc = cols[ci];
                for (std::size_t r2 : rows) {
                    if (r2 == pr) continue;
                    const BinPoly coef = at(r2, pc);
                    if (coef.is_zero()) continue;
                    for (std::size_t c2 : cols) {
                        if (c2 == pc) continue;
                        const BinPoly& src = at(pr, c2);
                        if (!src.is_zero()) at(r2, c2) ^= spec.reduce(coef * src);
                    }
                    at(r2, pc) = BinPoly::zero();
                }
                rows.erase(rows.begin() + long(ri));
                cols.erase(cols.begin() + long(ci));
                progress = true;
            }
        }
    }

    std::size_t kk = rows.size();
    if (kk == 0) return BinPoly::one();
    if (kk == 1) return at(rows[0], cols[0]);
    std::vector<BinPoly> core(kk * kk);
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = 0; j < kk; ++j) core[i * kk + j] = at(rows[i], cols[j]);
    return det_bareiss(std::move(core), kk, spec);
}

}  // namespace detail

/// Exact determinant over the field/ring. Deliberately capped at small
/// sides: every system the constructions produce stays below it.
inline RingElement determinant(const RingMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (M.rows() > 12) throw std::invalid_argument("determinant limited to side <= 12");
    return RingElement(M.spec(), detail::det_structured(M));
}

/// Plain Laplace expansion; the independent reference used by the tests.
inline RingElement determinant_cofactor(const RingMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (M.rows() > 9) throw std::invalid_argument("cofactor determinant limited to side <= 9");
    std::vector<std::size_t> rows(M.rows()), cols(M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) rows[i] = cols[i] = i;
    return RingElement(M.spec(), detail::det_cofactor_rec(M, rows, cols));
}

/// Over a finite commutative ring a square matrix is invertible iff its
/// determinant is a unit, i.e. gcd(det, f) = 1.
inline bool is_invertible(const RingMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("invertibility of non-square matrix");
    return M.spec()->is_unit(determinant(M).residue());
}

/// Columns of H at the erased positions (ascending flat index row*n+col),
/// all parity rows. n is the array width used to flatten positions.
inline RingMatrix erasure_submatrix(const RingMatrix& H, const ErasurePattern& pattern,
                                    unsigned n) {
    if (pattern.empty()) throw std::invalid_argument("empty erasure pattern");
    RingMatrix out(H.spec(), H.rows(), pattern.size());
    for (std::size_t c = 0; c < pattern.size(); ++c) {
        auto [pr, pc] = pattern.positions[c];
        std::size_t col = std::size_t(pr) * n + pc;
        if (col >= H.cols()) throw std::invalid_argument("erasure position out of range");
        for (std::size_t r = 0; r < H.rows(); ++r) out.at(r, c) = H.at(r, col);
    }
    return out;
}

/// Remove structurally zero rows (parity rows of untouched stripes).
inline RingMatrix drop_zero_rows(const RingMatrix& M) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < M.rows(); ++r)
        if (!M.row_is_zero(r)) keep.push_back(r);
    if (keep.empty()) throw std::invalid_argument("matrix has no nonzero rows");
    RingMatrix out(M.spec(), keep.size(), M.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t c = 0; c < M.cols(); ++c) out.at(i, c) = M.at(keep[i], c);
    return out;
}

namespace detail {

// Gauss-Jordan over the ring on an R x E system, R >= E. Pivots must be
// units; a nonzero entry is not enough in the reducible ring. When no single
// entry in a column is a unit, adding another row can still produce one.
// Returns the solution, or nullopt when elimination gets stuck.
inline std::optional<std::vector<RingElement>> gauss_jordan_solve(RingMatrix A,
                                                                  std::vector<RingElement> b) {
    const std::size_t R = A.rows(), E = A.cols();
    std::vector<bool> used(R, false);
    std::vector<std::size_t> pivot_row(E);
    for (std::size_t col = 0; col < E; ++col) {
        std::size_t pr = R;
        for (std::size_t r = 0; r < R; ++r)
            if (!used[r] && A.at(r, col).is_unit()) {
                pr = r;
                break;
            }
        if (pr == R) {
            // try combining two rows to manufacture a unit pivot
            for (std::size_t r1 = 0; r1 < R && pr == R; ++r1) {
                if (used[r1]) continue;
                for (std::size_t r2 = r1 + 1; r2 < R && pr == R; ++r2) {
                    if (used[r2]) continue;
                    RingElement sum = A.at(r1, col) ^ A.at(r2, col);
                    if (sum.is_unit()) {
                        for (std::size_t c = 0; c < E; ++c) A.at(r1, c) ^= A.at(r2, c);
                        b[r1] ^= b[r2];
                        pr = r1;
                    }
                }
            }
            if (pr == R) return std::nullopt;
        }
        RingElement inv = A.at(pr, col).inverse();
        for (std::size_t c = 0; c < E; ++c) A.at(pr, c) = A.at(pr, c) * inv;
        b[pr] = b[pr] * inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == pr) continue;
            RingElement coef = A.at(r, col);
            if (coef.is_zero()) continue;
            for (std::size_t c = 0; c < E; ++c)
                if (!A.at(pr, c).is_zero()) A.at(r, c) ^= coef * A.at(pr, c);
            b[r] ^= coef * b[pr];
        }
        used[pr] = true;
        pivot_row[col] = pr;
    }
    std::vector<RingElement> x;
    x.reserve(E);
    for (std::size_t col = 0; col < E; ++col) x.push_back(b[pivot_row[col]]);
    return x;
}

inline std::optional<std::vector<RingElement>> cramer_solve(const RingMatrix& M,
                                                            const std::vector<RingElement>& rhs) {
    const std::size_t k = M.rows();
    if (k > 12) return std::nullopt;
    RingElement det = determinant(M);
    if (!det.is_unit()) return std::nullopt;
    RingElement inv = det.inverse();
    std::vector<RingElement> x;
    x.reserve(k);
    for (std::size_t col = 0; col < k; ++col) {
        RingMatrix Mi = M;
        for (std::size_t r = 0; r < k; ++r) Mi.at(r, col) = rhs[r];
        x.push_back(determinant(Mi) * inv);
    }
    return x;
}

// Solve an R x E system with R >= E whose true solution is known to exist
// (erasure recovery): unit-pivot elimination first, determinant-based solve
// as the complete fallback, and a final check of every equation.
inline std::vector<RingElement> solve_system(const RingMatrix& M,
                                             const std::vector<RingElement>& rhs) {
    if (M.rows() < M.cols()) throw SingularSystemError("underdetermined system");
    if (rhs.size() != M.rows()) throw std::invalid_argument("rhs length mismatch");
    std::optional<std::vector<RingElement>> x = gauss_jordan_solve(M, rhs);
    if (!x && M.rows() == M.cols()) x = cramer_solve(M, rhs);
    if (!x && M.rows() > M.cols()) {
        // overdetermined and stuck: look for a row subset with a unit minor
        const std::size_t R = M.rows(), E = M.cols();
        std::vector<std::size_t> pick(E);
        for (std::size_t i = 0; i < E; ++i) pick[i] = i;
        while (true) {
            RingMatrix sq(M.spec(), E, E);
            std::vector<RingElement> sb;
            sb.reserve(E);
            for (std::size_t i = 0; i < E; ++i) {
                for (std::size_t c = 0; c < E; ++c) sq.at(i, c) = M.at(pick[i], c);
                sb.push_back(rhs[pick[i]]);
            }
            if (E <= 12 && is_invertible(sq)) {
                x = cramer_solve(sq, sb);
                break;
            }
            // next combination
            std::size_t i = E;
            while (i > 0 && pick[i - 1] == R - E + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < E; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (!x) throw SingularSystemError("no invertible pivot in some elimination column");
    // back-substitution check against the untouched system
    std::vector<RingElement> check = M.mul_vec(*x);
    for (std::size_t r = 0; r < M.rows(); ++r)
        if (check[r] != rhs[r]) throw SingularSystemError("solution fails back-substitution");
    return *x;
}

}  // namespace detail

/// Unique solution of M v = rhs for square invertible M; verified by
/// back-substitution before returning.
inline std::vector<RingElement> solve_linear(const RingMatrix& M,
                                             const std::vector<RingElement>& rhs) {
    if (M.rows() != M.cols()) throw std::invalid_argument("solve_linear requires a square matrix");
    return detail::solve_system(M, rhs);
}

}  // namespace pmds
