#ifndef MME_FQ_HPP
#define MME_FQ_HPP

#include <vector>

#include "mme/modulus.hpp"

namespace mme {

/// Arithmetic helpers for a word-sized prime field F_q. For q below the
/// table threshold, discrete log/exp tables make arbitrary powers a lookup
/// plus one multiplication; above it everything falls back to square-and-
/// multiply.
class FqTables {
  public:
    explicit FqTables(u64 q);

    u64 q() const { return q_; }
    const ModEngine& eng() const { return eng_; }

    u64 pow_of(u64 x, u64 e) const {
        if (x == 0) return e == 0 ? 1 : 0;
        if (!expt_.empty()) {
            u64 r = (u64)logt_[x] * (e % (q_ - 1)) % (q_ - 1);
            return expt_[r];
        }
        return eng_.pow(x % q_, e % (q_ - 1));
    }

    /// x^(-e) for x != 0.
    u64 pow_neg_of(u64 x, u64 e) const { return pow_of(x, q_ - 1 - e % (q_ - 1)); }

    u64 inv_of(u64 x) const { return pow_neg_of(x, 1); }

  private:
    u64 q_;
    ModEngine eng_;
    u64 g_ = 0;  // primitive root (only when tables are built)
    std::vector<u32> logt_;
    std::vector<u32> expt_;
};

/// C(a, b) mod q by Lucas' theorem; intended for small b (the per-digit
/// work is O(digit of b)).
u64 binom_mod_p(u64 a, u64 b, u64 q);

}  // namespace mme

#endif
