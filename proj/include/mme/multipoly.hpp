#ifndef MME_MULTIPOLY_HPP
#define MME_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "mme/extring.hpp"

namespace mme {

/// Exponent vector e in N^m; weight is the total degree |e|_1.
struct ExpVec {
    std::vector<u32> e;

    ExpVec() = default;
    explicit ExpVec(std::vector<u32> v) : e(std::move(v)) {}

    size_t size() const { return e.size(); }
    u64 weight() const {
        u64 w = 0;
        for (u32 x : e) w += x;
        return w;
    }
    friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }
    friend bool operator<(const ExpVec& a, const ExpVec& b) { return a.e < b.e; }
};

/// All e in N^m with |e|_1 <= k, in a fixed deterministic order
/// (ascending weight, lexicographic within a weight). Size C(m+k, m).
std::vector<ExpVec> exponents_upto(u32 m, u32 k);

/// d^m as size_t with an overflow/memory guard.
size_t checked_coeff_count(u32 d, u32 m);

/// Flat index of exponent e: sum_j e_j d^(j-1); x_1 varies fastest.
inline size_t flat_index(const std::vector<u32>& e, u32 d) {
    size_t idx = 0, stride = 1;
    for (size_t j = 0; j < e.size(); ++j) {
        idx += (size_t)e[j] * stride;
        stride *= d;
    }
    return idx;
}
inline void unflatten(size_t idx, u32 d, u32 m, std::vector<u32>& out) {
    out.resize(m);
    for (u32 j = 0; j < m; ++j) {
        out[j] = (u32)(idx % d);
        idx /= d;
    }
}

/// Pascal triangle of Naturals: row n holds C(n, 0..n). Binomials are always
/// produced this way and then reduced into the ring; factorial division is
/// ill-defined over composite moduli.
std::vector<std::vector<Natural>> pascal_rows(u32 max_n);

using ModPoint = std::vector<Natural>;
using ExtPoint = std::vector<ExtElem>;

/// Dense m-variate polynomial with individual degree < d, over either
/// Z/r^s (modular kind) or (Z/n)[z]/(E) (extension kind). The coefficient of
/// x^e lives at flat index sum_j e_j d^(j-1), so coeffs.size() == d^m.
/// d is part of the type: no operation resizes it implicitly.
class MultiPoly {
  public:
    static MultiPoly zero(u32 m, u32 d, PowerModulusPtr mod);
    static MultiPoly zero_ext(u32 m, u32 d, ExtRingCtxPtr ext);

    u32 m() const { return m_; }
    u32 d() const { return d_; }
    bool is_ext() const { return ext_ != nullptr; }
    const PowerModulusPtr& modulus() const { return mod_; }
    const ExtRingCtxPtr& ext_ring() const { return ext_; }

    size_t coeff_count() const { return is_ext() ? ce_.size() : c_.size(); }

    std::vector<Natural>& mod_coeffs() { return c_; }
    const std::vector<Natural>& mod_coeffs() const { return c_; }
    std::vector<ExtElem>& ext_coeffs() { return ce_; }
    const std::vector<ExtElem>& ext_coeffs() const { return ce_; }

    void set_coeff(size_t flat, Natural v) { c_[flat] = mod_->reduce(v); }
    void set_coeff_ext(size_t flat, ExtElem v) { ce_[flat] = std::move(v); }

    bool is_zero() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.m_ == b.m_ && a.d_ == b.d_ && a.c_ == b.c_ && a.ce_ == b.ce_;
    }

    /// Coefficients as raw u64 residues; requires a modular ring with a
    /// word-sized modulus. Used by the evaluation kernels.
    std::vector<u64> to_u64() const;

  private:
    u32 m_ = 0, d_ = 1;
    PowerModulusPtr mod_;
    ExtRingCtxPtr ext_;
    std::vector<Natural> c_;
    std::vector<ExtElem> ce_;
};

/// Same layout as MultiPoly but coefficients are nonnegative integers (the
/// natural lift to Z).
struct IntMultiPoly {
    u32 m = 0, d = 1;
    std::vector<Natural> coeffs;

    /// Exact evaluation over the integers (test oracle for lift bounds).
    Natural eval(const std::vector<Natural>& point) const;
};

/// f(a) by iterated Horner along the variables; O(d^m) ring operations.
Natural naive_eval(const MultiPoly& f, const ModPoint& a);
ExtElem naive_eval_ext(const MultiPoly& f, const ExtPoint& a);

/// naive_eval at many points (shares the per-call setup).
std::vector<Natural> naive_eval_batch(const MultiPoly& f, const std::vector<ModPoint>& points);
std::vector<ExtElem> naive_eval_ext_batch(const MultiPoly& f, const std::vector<ExtPoint>& points);

/// Hasse derivative with respect to x^e. Any e is accepted; if some e_j >= d
/// the result is the zero polynomial.
MultiPoly hasse_derivative(const MultiPoly& f, const ExpVec& e);

/// All Hasse derivatives of order <= k, keyed by exponent vector; exactly
/// C(m+k, m) entries.
std::map<ExpVec, MultiPoly> hasse_all_upto(const MultiPoly& f, u32 k);

/// Split into homogeneous components, ascending total degree. All-zero
/// components are omitted, except the zero polynomial yields a single
/// degree-0 zero component.
std::vector<std::pair<u64, MultiPoly>> homogeneous_components(const MultiPoly& f);

/// Total degree if every nonzero monomial shares one; zero polynomial -> 0.
std::optional<u64> homogeneous_degree(const MultiPoly& f);

/// Natural lift of every coefficient into [0, n); modular rings only.
IntMultiPoly lift_to_integers(const MultiPoly& f);

/// Reduce every integer coefficient mod n. reduce_mod(lift(f), n) == f when
/// n is f's modulus.
MultiPoly reduce_mod(const IntMultiPoly& F, PowerModulusPtr mod);

}  // namespace mme

#endif
