#ifndef MME_NICE_FIELD_HPP
#define MME_NICE_FIELD_HPP

#include <map>

#include "mme/kakeya.hpp"

namespace mme {

/// Dual-basis weights for reading one coefficient off a Hermite interpolant
/// without materializing it: for R of degree < q(k+1) with Hasse-derivative
/// blocks beta[tau][j] (j <= k) at every tau in F_q,
///   Coeff_{y^T}(R) = sum_{tau, j} wt[tau*(k+1)+j] * beta[tau][j].
/// Derived from the closed-form Hermite basis (y-tau)^j ((y^q-y)/(y-tau))^{k+1}
/// for the all-of-F_q node system. Requires k+1 <= q-1.
std::vector<u64> hermite_topcoeff_weights(const FqTables& fq, u32 k, u64 T);

/// Per-prime evaluation state for one point set, reused across homogeneous
/// components: curve power tables, grid index paths, extraction weights.
class NiceFieldSession {
  public:
    NiceFieldSession(KakeyaSetPtr K, u32 d);

    void set_points(const std::vector<std::vector<u64>>& points);

    /// Evaluate one homogeneous component (dense coefficients, total degree
    /// deg) at every point set via set_points.
    std::vector<u64> eval_component(const std::vector<u64>& coeffs, u64 deg);

    const KakeyaSet& kakeya() const { return *K_; }

  private:
    KakeyaSetPtr K_;
    u32 d_, m_, J_;
    std::vector<std::vector<u64>> binom_;  // C(a,b) mod q for a,b < d
    std::vector<u64> binom_u1_;            // C(u+1, j) mod q, j = 0..J
    std::vector<u64> taupow_;              // [tau*(J+1)+j] = tau^(u+1-j)

    struct PointData {
        std::vector<u64> pw;    // [tau*m*(J+1) + i*(J+1) + j] = (beta_i+tau)^(u+1-j)
        std::vector<u32> flat;  // [tau] = flat index of G_a(tau) in the wi(tau) grid
    };
    std::vector<PointData> pts_;

    struct Lattice {
        std::vector<ExpVec> exps;
        std::vector<size_t> parent;
        std::vector<u32> coord;
    };
    std::map<u32, Lattice> lattices_;
    std::map<std::pair<u32, u64>, std::vector<u64>> weights_;

    const Lattice& lattice(u32 k);
    const std::vector<u64>& weights(u32 k, u64 T);
};

}  // namespace mme

#endif
