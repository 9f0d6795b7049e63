#ifndef MME_EXTRING_HPP
#define MME_EXTRING_HPP

#include <memory>
#include <vector>

#include "mme/unipoly.hpp"

namespace mme {

/// Element of (Z/n)[z]/(E(z)): a z-polynomial of degree < e, stored as
/// exactly e reduced coefficients (constant term first).
struct ExtElem {
    std::vector<Natural> c;
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c == b.c; }
};

/// Quotient ring (Z/n)[z]/(E(z)) with E monic of degree e >= 1.
class ExtRingCtx {
  public:
    ExtRingCtx(PowerModulusPtr base, std::vector<Natural> E) : base_(std::move(base)) {
        for (auto& x : E) x = base_->reduce(x);
        while (E.size() > 1 && E.back().is_zero()) E.pop_back();
        if (E.size() < 2) throw UsageError("ExtRingCtx: E must have degree >= 1");
        if (!E.back().is_one()) throw UsageError("ExtRingCtx: E must be monic");
        E_ = UniPoly(base_, E);
        e_ = (u32)E.size() - 1;
    }

    const PowerModulusPtr& base() const { return base_; }
    const UniPoly& E() const { return E_; }
    u32 degree() const { return e_; }

    ExtElem zero() const { return {std::vector<Natural>(e_, Natural(0))}; }
    ExtElem one() const {
        auto z = zero();
        z.c[0] = Natural(1) % base_->n();
        return z;
    }
    ExtElem from_coeffs(std::vector<Natural> raw) const {
        UniPoly p(base_, std::move(raw));
        return from_unipoly(poly_mod(p, E_));
    }
    ExtElem from_unipoly(const UniPoly& p) const {
        MME_ASSERT(p.degree() < (int)e_);
        ExtElem out = zero();
        for (size_t i = 0; i < p.coeffs().size(); ++i) out.c[i] = p.coeffs()[i];
        return out;
    }
    UniPoly to_unipoly(const ExtElem& x) const { return UniPoly(base_, x.c); }

    bool is_zero(const ExtElem& x) const {
        for (const auto& v : x.c)
            if (!v.is_zero()) return false;
        return true;
    }

    ExtElem add(const ExtElem& a, const ExtElem& b) const {
        ExtElem out = zero();
        for (u32 i = 0; i < e_; ++i) out.c[i] = base_->add(a.c[i], b.c[i]);
        return out;
    }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        ExtElem out = zero();
        for (u32 i = 0; i < e_; ++i) out.c[i] = base_->sub(a.c[i], b.c[i]);
        return out;
    }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        std::vector<Natural> out(2 * e_ - 1, Natural(0));
        for (u32 i = 0; i < e_; ++i) {
            if (a.c[i].is_zero()) continue;
            for (u32 j = 0; j < e_; ++j) out[i + j] = base_->add(out[i + j], base_->mul(a.c[i], b.c[j]));
        }
        return from_coeffs(std::move(out));
    }
    ExtElem scalar_mul(const ExtElem& a, const Natural& k) const {
        ExtElem out = zero();
        for (u32 i = 0; i < e_; ++i) out.c[i] = base_->mul(a.c[i], k);
        return out;
    }

    friend bool operator==(const ExtRingCtx& a, const ExtRingCtx& b) {
        return *a.base_ == *b.base_ && a.E_ == b.E_;
    }

  private:
    PowerModulusPtr base_;
    UniPoly E_;
    u32 e_ = 0;
};

using ExtRingCtxPtr = std::shared_ptr<const ExtRingCtx>;

/// Reduce an arbitrary z-polynomial over Z/n into the quotient ring: first
/// coefficients mod n, then the polynomial mod E.
inline ExtElem ext_reduce(const std::vector<Natural>& p, const ExtRingCtx& ctx) {
    return ctx.from_coeffs(p);
}

}  // namespace mme

#endif
