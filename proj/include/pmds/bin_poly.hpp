#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pmds {

/// Polynomial over GF(2), stored as a bit vector: bit i of word i/64 is the
/// coefficient of x^i. The word vector is kept trimmed (no high zero words),
/// so two values are equal iff their vectors are equal; the zero polynomial
/// is the empty vector and reports degree -1.
class BinPoly {
  public:
    BinPoly() = default;

    static BinPoly zero() { return BinPoly(); }

    static BinPoly one() { return from_coeff_bits(1); }

    /// The monomial x^k.
    static BinPoly monomial(std::size_t k) {
        BinPoly p;
        p.w_.assign(k / 64 + 1, 0);
        p.w_[k / 64] = std::uint64_t(1) << (k % 64);
        return p;
    }

    /// Low 64 coefficients packed in one word (bit i = coeff of x^i).
    static BinPoly from_coeff_bits(std::uint64_t bits) {
        BinPoly p;
        if (bits) p.w_.push_back(bits);
        return p;
    }

    static BinPoly from_words(std::vector<std::uint64_t> w) {
        BinPoly p;
        p.w_ = std::move(w);
        p.trim();
        return p;
    }

    /// Octal coefficient string, most significant digit first: "435" is
    /// binary 100011101, i.e. x^8+x^4+x^3+x^2+1. Spaces are ignored so
    /// "4 3 5" parses the same way.
    static BinPoly from_octal(std::string_view s) {
        BinPoly p;
        bool any = false;
        for (char c : s) {
            if (c == ' ' || c == '\t') continue;
            if (c < '0' || c > '7') throw std::invalid_argument("bad octal polynomial digit");
            any = true;
            p = p.shifted_left(3);
            p.w_.resize(std::max<std::size_t>(p.w_.size(), 1), 0);
            p.w_[0] |= std::uint64_t(c - '0');
        }
        if (!any) throw std::invalid_argument("empty octal polynomial");
        p.trim();
        return p;
    }

    std::string to_octal() const {
        if (is_zero()) return "0";
        int d = degree();
        std::string out;
        int top = (d / 3) * 3;
        for (int i = top; i >= 0; i -= 3) {
            int digit = (coeff(i + 2) << 2) | (coeff(i + 1) << 1) | coeff(i);
            out.push_back(char('0' + digit));
        }
        return out;
    }

    /// Human-readable form, highest power first (for diagnostics).
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (!coeff(i)) continue;
            if (!out.empty()) out += "+";
            if (i == 0)
                out += "1";
            else if (i == 1)
                out += "x";
            else
                out += "x^" + std::to_string(i);
        }
        return out;
    }

    int degree() const {
        if (w_.empty()) return -1;
        std::uint64_t top = w_.back();
        int bit = 63;
        while (!(top >> bit)) --bit;
        return int(w_.size() - 1) * 64 + bit;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    bool coeff(std::size_t i) const {
        std::size_t wi = i / 64;
        if (wi >= w_.size()) return false;
        return (w_[wi] >> (i % 64)) & 1;
    }

    void set_coeff(std::size_t i, bool v) {
        std::size_t wi = i / 64;
        if (v) {
            if (wi >= w_.size()) w_.resize(wi + 1, 0);
            w_[wi] |= std::uint64_t(1) << (i % 64);
        } else if (wi < w_.size()) {
            w_[wi] &= ~(std::uint64_t(1) << (i % 64));
            trim();
        }
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    BinPoly shifted_left(std::size_t k) const {
        if (is_zero() || k == 0) {
            if (k == 0) return *this;
            return *this;
        }
        std::size_t words = k / 64, bits = k % 64;
        std::vector<std::uint64_t> out(w_.size() + words + 1, 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            out[i + words] ^= w_[i] << bits;
            if (bits) out[i + words + 1] ^= w_[i] >> (64 - bits);
        }
        return from_words(std::move(out));
    }

    BinPoly& operator^=(const BinPoly& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
        trim();
        return *this;
    }

    friend BinPoly operator^(BinPoly a, const BinPoly& b) {
        a ^= b;
        return a;
    }

    friend BinPoly operator*(const BinPoly& a, const BinPoly& b) {
        if (a.is_zero() || b.is_zero()) return BinPoly();
        // one-word operands cover the common case; keep it allocation-light
        if (a.w_.size() == 1 && b.w_.size() == 1) {
            std::uint64_t x = a.w_[0], y = b.w_[0];
            std::uint64_t lo = 0, hi = 0;
            while (y) {
                int sh = __builtin_ctzll(y);
                y &= y - 1;
                lo ^= x << sh;
                if (sh) hi ^= x >> (64 - sh);
            }
            std::vector<std::uint64_t> out{lo, hi};
            return from_words(std::move(out));
        }
        std::vector<std::uint64_t> out(a.w_.size() + b.w_.size(), 0);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t wa = a.w_[i];
            while (wa) {
                int bit = __builtin_ctzll(wa);
                wa &= wa - 1;
                for (std::size_t j = 0; j < b.w_.size(); ++j) {
                    out[i + j] ^= b.w_[j] << bit;
                    if (bit) out[i + j + 1] ^= b.w_[j] >> (64 - bit);
                }
            }
        }
        return from_words(std::move(out));
    }

    /// Quotient and remainder of long division; divisor must be nonzero.
    static std::pair<BinPoly, BinPoly> divmod(const BinPoly& a, const BinPoly& f) {
        if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
        BinPoly rem = a;
        BinPoly quot;
        int df = f.degree();
        int dr = rem.degree();
        while (dr >= df) {
            std::size_t sh = std::size_t(dr - df);
            rem ^= f.shifted_left(sh);
            quot.set_coeff(sh, true);
            dr = rem.degree();
        }
        return {quot, rem};
    }

    friend BinPoly operator%(const BinPoly& a, const BinPoly& f) {
        if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (a.degree() < f.degree()) return a;
        BinPoly rem = a;
        int df = f.degree();
        int dr = rem.degree();
        while (dr >= df) {
            rem ^= f.shifted_left(std::size_t(dr - df));
            dr = rem.degree();
        }
        return rem;
    }

    friend bool operator==(const BinPoly& a, const BinPoly& b) { return a.w_ == b.w_; }
    friend bool operator!=(const BinPoly& a, const BinPoly& b) { return !(a == b); }

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    std::vector<std::uint64_t> w_;

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }
};

namespace detail {

// In-place Euclid on fixed stack buffers; covers every modulus this library
// targets (degrees below 512). Returns true on success, false if either
// operand does not fit.
inline constexpr std::size_t kFixedWords = 8;

inline bool fixed_load(const BinPoly& p, std::array<std::uint64_t, kFixedWords>& out, int& deg) {
    const auto& w = p.words();
    if (w.size() > kFixedWords) return false;
    out.fill(0);
    std::copy(w.begin(), w.end(), out.begin());
    deg = p.degree();
    return true;
}

inline int fixed_degree(const std::array<std::uint64_t, kFixedWords>& a, int hint) {
    int wi = hint < 0 ? int(kFixedWords) - 1 : hint / 64;
    if (wi >= int(kFixedWords)) wi = int(kFixedWords) - 1;
    for (; wi >= 0; --wi)
        if (a[std::size_t(wi)]) return wi * 64 + 63 - __builtin_clzll(a[std::size_t(wi)]);
    return -1;
}

inline void fixed_xor_shifted(std::array<std::uint64_t, kFixedWords>& a,
                              const std::array<std::uint64_t, kFixedWords>& b, int db, int shift) {
    int words = shift / 64, bits = shift % 64;
    int top = (db + shift) / 64;
    for (int i = db / 64; i >= 0; --i) {
        std::uint64_t w = b[std::size_t(i)];
        if (!w) continue;
        int j = i + words;
        a[std::size_t(j)] ^= w << bits;
        if (bits && j + 1 <= top) a[std::size_t(j + 1)] ^= w >> (64 - bits);
    }
}

// gcd(a, f) == 1, without allocating. Falls back to the caller on overflow.
inline bool fixed_gcd_is_one(const BinPoly& pa, const BinPoly& pf, bool& result) {
    std::array<std::uint64_t, kFixedWords> a, b;
    int da, db;
    if (!fixed_load(pa, a, da) || !fixed_load(pf, b, db)) return false;
    if (da < 0 && db < 0) throw std::invalid_argument("gcd of two zero polynomials");
    while (true) {
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        if (db < 0) {
            result = (da == 0);
            return true;
        }
        if (db == 0) {
            result = true;
            return true;
        }
        // reduce a by b until deg(a) < deg(b)
        while (da >= db) {
            fixed_xor_shifted(a, b, db, da - db);
            da = fixed_degree(a, da);
        }
    }
}

}  // namespace detail

/// Monic gcd; over GF(2) every nonzero polynomial is monic already.
inline BinPoly poly_gcd(BinPoly a, BinPoly b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// gcd(a, f) == 1; the unit test used on every theorem condition, so it runs
/// on stack buffers when the operands fit.
inline bool coprime(const BinPoly& a, const BinPoly& f) {
    bool result;
    if (detail::fixed_gcd_is_one(a, f, result)) return result;
    return poly_gcd(a, f).is_one();
}

struct EgcdResult {
    BinPoly g, u, v;  // g = u*a + v*b
};

inline EgcdResult poly_egcd(const BinPoly& a, const BinPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("egcd of two zero polynomials");
    BinPoly r0 = a, r1 = b;
    BinPoly u0 = BinPoly::one(), u1;
    BinPoly v0, v1 = BinPoly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = BinPoly::divmod(r0, r1);
        BinPoly u2 = u0 ^ (q * u1);
        BinPoly v2 = v0 ^ (q * v1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {r0, u0, v0};
}

/// x^k mod f by square-and-multiply.
inline BinPoly x_pow_mod(std::uint64_t k, const BinPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
    BinPoly result = BinPoly::one() % f;
    if (k == 0) return result;
    int top = 63 - __builtin_clzll(k);
    for (int bit = top; bit >= 0; --bit) {
        result = (result * result) % f;
        if ((k >> bit) & 1) result = result.shifted_left(1) % f;
    }
    return result;
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// True iff the multiplicative order of 2 mod p is p-1, which is exactly when
/// 1+x+...+x^(p-1) is irreducible over GF(2).
inline bool is_two_primitive(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("is_two_primitive requires a prime");
    if (p == 2) return true;
    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        unsigned __int128 acc = 1, base = b % p;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return std::uint64_t(acc);
    };
    for (std::uint64_t q : prime_factors(p - 1))
        if (pow_mod(2, (p - 1) / q) == 1) return false;
    return true;
}

/// Deterministic Rabin irreducibility test: f (degree d) is irreducible iff
/// x^(2^d) = x mod f and gcd(x^(2^(d/q)) - x, f) = 1 for every prime q | d.
inline bool is_irreducible(const BinPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility test requires degree >= 1");
    if (d == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by x
    auto factors = prime_factors(std::uint64_t(d));
    std::vector<std::uint64_t> checkpoints;
    for (auto q : factors) checkpoints.push_back(std::uint64_t(d) / q);
    std::sort(checkpoints.begin(), checkpoints.end());
    const BinPoly x = BinPoly::monomial(1) % f;
    BinPoly h = x;
    std::size_t next = 0;
    for (int k = 1; k <= d; ++k) {
        h = (h * h) % f;
        while (next < checkpoints.size() && std::uint64_t(k) == checkpoints[next]) {
            if (!coprime(h ^ x, f)) return false;
            ++next;
        }
    }
    return h == x;
}

/// 1 + x + ... + x^(p-1).
inline BinPoly mersenne_poly(unsigned p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("M_p(x) requires a prime p");
    std::vector<std::uint64_t> w((p + 63) / 64, ~std::uint64_t(0));
    unsigned excess = unsigned(w.size()) * 64 - p;
    w.back() >>= excess;
    return BinPoly::from_words(std::move(w));
}

/// Least l > 0 with x^l = 1 mod f. Requires a nonzero constant term so that
/// x is a unit. Uses group-order reduction for irreducible moduli, the known
/// order p for the 1+x+...+x^(p-1) family, and capped iteration otherwise.
inline std::uint64_t exponent_of(const BinPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("exponent requires degree >= 1");
    if (!f.coeff(0)) throw std::invalid_argument("exponent requires nonzero constant term");
    // the all-ones polynomial of odd prime length has order p = d+1
    // (p = 2 is excluded: x = 1 mod 1+x, so the order degenerates to 1)
    if (d >= 2 && std::uint64_t(f.weight()) == std::uint64_t(d) + 1 &&
        is_prime_u64(std::uint64_t(d) + 1) && f == mersenne_poly(unsigned(d + 1))) {
        std::uint64_t p = std::uint64_t(d) + 1;
        if (!x_pow_mod(p, f).is_one()) throw std::logic_error("order of x mod M_p is not p");
        return p;
    }
    if (d <= 62 && is_irreducible(f)) {
        std::uint64_t group = (std::uint64_t(1) << d) - 1;
        std::uint64_t order = group;
        for (std::uint64_t q : prime_factors(group))
            while (order % q == 0 && x_pow_mod(order / q, f).is_one()) order /= q;
        return order;
    }
    if (d > 20) throw std::invalid_argument("exponent iteration cap exceeded for reducible modulus");
    std::uint64_t cap = (std::uint64_t(1) << d);
    BinPoly acc = BinPoly::monomial(1) % f;
    for (std::uint64_t l = 1; l <= cap; ++l) {
        if (acc.is_one()) return l;
        acc = acc.shifted_left(1) % f;
    }
    throw std::invalid_argument("x has no finite order modulo f");
}

}  // namespace pmds
