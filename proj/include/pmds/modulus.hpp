#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "pmds/bin_poly.hpp"
#include "pmds/errors.hpp"

namespace pmds {

enum class ModulusKind { Irreducible, MersennePrimeStyle };

/// The defining polynomial f(x) of the coefficient field or ring, together
/// with its degree b (bits per symbol), its exponent e(f) (the order of the
/// residue x), and its kind. Instances are immutable and shared; ring
/// elements identify their ring by pointer to one of these.
class ModulusSpec {
  public:
    using Ptr = std::shared_ptr<const ModulusSpec>;

    /// A field GF(2^b) given by an irreducible f of degree b.
    static Ptr irreducible(BinPoly f) {
        if (f.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
        if (!f.coeff(0)) throw std::invalid_argument("modulus must have nonzero constant term");
        if (!is_irreducible(f)) throw std::invalid_argument("polynomial is not irreducible: " + f.to_octal());
        std::uint64_t e = exponent_of(f);
        unsigned b = unsigned(f.degree());
        return Ptr(new ModulusSpec(std::move(f), b, e, ModulusKind::Irreducible, 0));
    }

    /// The ring of polynomials modulo 1+x+...+x^(p-1); a field exactly when
    /// 2 is primitive mod p.
    static Ptr mersenne(unsigned p) {
        if (!is_prime_u64(p) || p < 3) throw std::invalid_argument("M_p(x) requires an odd prime p");
        BinPoly f = mersenne_poly(p);
        return Ptr(new ModulusSpec(std::move(f), p - 1, p, ModulusKind::MersennePrimeStyle, p));
    }

    /// "mp:<prime>" for the M_p family, otherwise octal digits of an
    /// irreducible polynomial (the notation of standard polynomial tables).
    static Ptr parse(std::string_view text) {
        if (text.rfind("mp:", 0) == 0) {
            unsigned long p = std::stoul(std::string(text.substr(3)));
            return mersenne(unsigned(p));
        }
        std::string_view digits = text;
        if (digits.rfind("0o", 0) == 0) digits.remove_prefix(2);
        return irreducible(BinPoly::from_octal(digits));
    }

    const BinPoly& poly() const { return f_; }
    unsigned degree() const { return b_; }
    std::uint64_t exponent() const { return e_; }
    ModulusKind kind() const { return kind_; }
    unsigned prime() const { return p_; }

    /// Irreducible by construction, or an M_p with 2 primitive mod p.
    bool is_field() const {
        return kind_ == ModulusKind::Irreducible || is_two_primitive(p_);
    }

    BinPoly reduce(const BinPoly& a) const { return a % f_; }
    bool is_unit(const BinPoly& a) const { return !a.is_zero() && coprime(a, f_); }

    std::string to_string() const {
        if (kind_ == ModulusKind::MersennePrimeStyle) return "mp:" + std::to_string(p_);
        return f_.to_octal();
    }

  private:
    ModulusSpec(BinPoly f, unsigned b, std::uint64_t e, ModulusKind k, unsigned p)
        : f_(std::move(f)), b_(b), e_(e), kind_(k), p_(p) {}

    BinPoly f_;
    unsigned b_;
    std::uint64_t e_;
    ModulusKind kind_;
    unsigned p_;
};

/// A residue modulo f(x), always kept reduced (degree < b). Elements carry
/// their ModulusSpec and refuse to mix with elements of another spec.
class RingElement {
  public:
    RingElement() = default;  // unbound; using it in arithmetic throws

    RingElement(ModulusSpec::Ptr spec, BinPoly v) : spec_(std::move(spec)) {
        if (!spec_) throw std::invalid_argument("ring element requires a modulus");
        v_ = spec_->reduce(v);
    }

    static RingElement zero(ModulusSpec::Ptr spec) { return RingElement(std::move(spec), BinPoly::zero()); }
    static RingElement one(ModulusSpec::Ptr spec) { return RingElement(std::move(spec), BinPoly::one()); }

    /// alpha^k where alpha is the residue of x; k is reduced mod e(f).
    static RingElement alpha_pow(ModulusSpec::Ptr spec, std::uint64_t k) {
        if (!spec) throw std::invalid_argument("ring element requires a modulus");
        BinPoly v = x_pow_mod(k % spec->exponent(), spec->poly());
        return RingElement(std::move(spec), std::move(v));
    }

    const BinPoly& residue() const { return v_; }
    const ModulusSpec::Ptr& spec() const { return spec_; }
    bool bound() const { return spec_ != nullptr; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_.is_one(); }
    bool is_unit() const { return require_bound()->is_unit(v_); }

    RingElement& operator^=(const RingElement& o) {
        check_same(o);
        v_ ^= o.v_;
        return *this;
    }

    friend RingElement operator^(RingElement a, const RingElement& b) {
        a ^= b;
        return a;
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check_same(b);
        RingElement out;
        out.spec_ = a.spec_;
        out.v_ = a.spec_->reduce(a.v_ * b.v_);
        return out;
    }

    /// Multiplicative inverse via extended Euclid; exists iff gcd(v, f) = 1.
    RingElement inverse() const {
        auto spec = require_bound();
        if (v_.is_zero()) throw NotInvertibleError("inverse of zero");
        EgcdResult e = poly_egcd(v_, spec->poly());
        if (!e.g.is_one())
            throw NotInvertibleError("element is a zero divisor modulo " + spec->to_string());
        RingElement out;
        out.spec_ = spec_;
        out.v_ = spec->reduce(e.u);
        return out;
    }

    /// Entrywise square, repeated k times (the 2^k-th power).
    RingElement pow2k(unsigned k) const {
        require_bound();
        RingElement out = *this;
        for (unsigned i = 0; i < k; ++i) out = out * out;
        return out;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        if (!a.spec_ || !b.spec_) return a.spec_ == b.spec_ && a.v_ == b.v_;
        return a.same_ring(b) && a.v_ == b.v_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  private:
    ModulusSpec::Ptr spec_;
    BinPoly v_;

    const ModulusSpec* require_bound() const {
        if (!spec_) throw std::invalid_argument("unbound ring element");
        return spec_.get();
    }

    // same shared instance, or distinct instances of the same modulus (as
    // happens after deserialization)
    bool same_ring(const RingElement& o) const {
        return spec_ == o.spec_ || spec_->poly() == o.spec_->poly();
    }

    void check_same(const RingElement& o) const {
        require_bound();
        o.require_bound();
        if (!same_ring(o))
            throw std::invalid_argument("ring elements from different moduli cannot be mixed");
    }
};

/// Spec-facing names for the core ring operations.
inline RingElement mul_mod(const RingElement& a, const RingElement& b) { return a * b; }
inline RingElement inverse_mod(const RingElement& a) { return a.inverse(); }

}  // namespace pmds
