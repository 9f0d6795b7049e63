#ifndef MME_MODULUS_HPP
#define MME_MODULUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "mme/natural.hpp"

namespace mme {

/// Residue arithmetic with a fixed word-sized modulus 2 <= n < 2^63.
/// For n < 2^32 a Barrett reciprocal makes mulmod branch-light; above that we
/// fall back to 128-bit division.
class ModEngine {
  public:
    ModEngine() : n_(0), im_(0) {}
    explicit ModEngine(u64 n) : n_(n) {
        if (n < 2 || n >= (u64(1) << 63)) throw UsageError("ModEngine: modulus out of range");
        // Barrett reciprocal floor(2^64 / n); only used when products fit in 64 bits.
        im_ = (n < (u64(1) << 32)) ? (u64)(((u128)1 << 64) / n) : 0;
    }

    u64 n() const { return n_; }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + n_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : n_ - a; }

    u64 mul(u64 a, u64 b) const {
        if (im_) {
            u64 x = a * b;
            u64 q = (u64)(((u128)x * im_) >> 64);
            u64 r = x - q * n_;
            if (r >= n_) r -= n_;
            if (r >= n_) r -= n_;
            return r;
        }
        return (u64)((u128)a * b % n_);
    }

    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % n_, x = a % n_;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    u64 reduce(const Natural& v) const { return (v % Natural(n_)).to_u64(); }

  private:
    u64 n_;
    u64 im_;
};

/// Modulus of the form n = r^s with r >= 2, s >= 1. n is computed once and
/// cached; the invariant n == r^s holds for every construction path.
class PowerModulus {
  public:
    PowerModulus(Natural r, u32 s) : r_(std::move(r)), s_(s) {
        if (r_ < Natural(2)) throw UsageError("PowerModulus: base must be >= 2");
        if (s_ < 1) throw UsageError("PowerModulus: power must be >= 1");
        n_ = pow(r_, s_);
        if (n_.bit_length() <= 62) eng_ = ModEngine(n_.to_u64());
    }

    const Natural& r() const { return r_; }
    u32 s() const { return s_; }
    const Natural& n() const { return n_; }

    bool small() const { return eng_.n() != 0; }
    const ModEngine& engine() const {
        MME_ASSERT(small());
        return eng_;
    }

    Natural reduce(const Natural& v) const { return v % n_; }

    Natural add(const Natural& a, const Natural& b) const { return (a + b) % n_; }
    Natural sub(const Natural& a, const Natural& b) const {
        return a >= b ? a - b : (n_ - b) + a;
    }
    Natural mul(const Natural& a, const Natural& b) const { return (a * b) % n_; }
    Natural pow_mod(const Natural& a, const Natural& e) const {
        Natural out;
        mpz_class t;
        mpz_powm(t.get_mpz_t(), a.mpz().get_mpz_t(), e.mpz().get_mpz_t(), n_.mpz().get_mpz_t());
        return Natural(t);
    }
    Natural inv(const Natural& a) const { return mod_inverse_natural(a, n_); }

    friend bool operator==(const PowerModulus& a, const PowerModulus& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.s_ == b.s_;
    }

  private:
    Natural r_;
    u32 s_;
    Natural n_;
    ModEngine eng_;
};

using PowerModulusPtr = std::shared_ptr<const PowerModulus>;

inline PowerModulusPtr make_modulus(Natural r, u32 s = 1) {
    return std::make_shared<const PowerModulus>(std::move(r), s);
}

/// A reduced residue paired with its modulus. Canonical form is eager: the
/// stored value is always in [0, n), so equality is structural.
struct RingElem {
    Natural value;
    PowerModulusPtr mod;

    RingElem() = default;
    RingElem(Natural v, PowerModulusPtr m) : value(m->reduce(v)), mod(std::move(m)) {}

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.value == b.value && *a.mod == *b.mod;
    }
};

namespace detail {
inline void require_same_modulus(const RingElem& x, const RingElem& y) {
    if (!(*x.mod == *y.mod)) throw UsageError("ring elements have mismatched moduli");
}
}  // namespace detail

inline RingElem mod_add(const RingElem& x, const RingElem& y) {
    detail::require_same_modulus(x, y);
    return {x.mod->add(x.value, y.value), x.mod};
}
inline RingElem mod_sub(const RingElem& x, const RingElem& y) {
    detail::require_same_modulus(x, y);
    return {x.mod->sub(x.value, y.value), x.mod};
}
inline RingElem mod_mul(const RingElem& x, const RingElem& y) {
    detail::require_same_modulus(x, y);
    return {x.mod->mul(x.value, y.value), x.mod};
}
inline RingElem mod_pow(const RingElem& x, const Natural& e) {
    return {x.mod->pow_mod(x.value, e), x.mod};
}

/// Inverse via extended Euclid (the moduli are generally composite, so
/// Fermat exponentiation is not an option). Throws NonUnitError when
/// gcd(x, n) != 1.
inline RingElem mod_inverse(const RingElem& x) { return {x.mod->inv(x.value), x.mod}; }

}  // namespace mme

#endif
