#ifndef MME_KAKEYA_HPP
#define MME_KAKEYA_HPP

#include <memory>

#include "mme/fq.hpp"
#include "mme/multipoly.hpp"
#include "mme/prodeval.hpp"

namespace mme {

/// Explicit degree-u Kakeya set in F_q^m, q prime, (u+1) | (q-1). The set is
/// the union over tau in F_q of the product sets S_tau^m where
///   S_tau = {(gamma+tau)^(u+1) - tau^(u+1) : gamma in F_q} = W - tau^(u+1),
/// with W the set of (u+1)-th powers. Every S_tau is a translate of W, so
/// only |W| = (q-1)/(u+1) + 1 distinct product grids exist; per-tau views
/// are index-compatible with the W ordering.
class KakeyaSet {
  public:
    KakeyaSet(u64 q, u32 u, u32 m);

    u64 q() const { return q_; }
    u32 u() const { return u_; }
    u32 m() const { return m_; }
    const FqTables& fq() const { return *fq_; }
    u64 inv_u1() const { return inv_u1_; }

    /// The (u+1)-th power set W, ascending; |S_tau| == |W| for every tau.
    const std::vector<u64>& W() const { return W_; }
    /// tau -> tau^(u+1), the translate applied to W to get S_tau.
    u64 shift_of(u64 tau) const { return shift_[tau]; }
    /// Index of a W element (q entries; kNone for values outside W).
    static constexpr u32 kNone = ~u32(0);
    u32 w_index(u64 value) const { return w_index_[value]; }

    /// Elements of S_tau in the canonical (W-aligned) order.
    std::vector<Natural> s_tau(u64 tau) const;
    /// Index of value in S_tau, or kNone.
    u32 s_index(u64 tau, u64 value) const {
        u64 w = fq_->eng().add(value, shift_[tau]);
        return w_index_[w];
    }

    /// sum_tau |S_tau|^m (the asserted size bound is q ((q-1)/(u+1)+1)^m).
    Natural total_size() const;
    /// |union of the S_tau^m| upper bound ((q-1)/(u+1)+1)^(m+1), from the
    /// translate structure (logged, not asserted).
    Natural distinct_size_bound() const;

  private:
    u64 q_;
    u32 u_, m_;
    std::shared_ptr<const FqTables> fq_;
    std::vector<u64> W_;
    std::vector<u32> w_index_;
    std::vector<u64> shift_;
    u64 inv_u1_;
};

using KakeyaSetPtr = std::shared_ptr<const KakeyaSet>;

/// Build (and validate) the Kakeya set; q prime, u >= 1, (u+1) | (q-1).
/// Instances are cached process-wide by (q, u, m).
KakeyaSetPtr build_kakeya(u64 q, u32 u, u32 m);

/// The degree-u curve G_a(y) = g0 + g1 y + ... + g_{u-1} y^{u-1} + a y^u
/// through leading coefficient a: coordinate i of g_j is
/// C(u+1, j) beta_i^{u+1-j} with beta_i = a_i / (u+1).
struct Curve {
    std::vector<std::vector<u64>> g;  // g[j][i], j = 0..u; g[u] == a

    /// Coordinates of G_a(tau) by direct polynomial evaluation.
    std::vector<u64> eval_poly(const FqTables& fq, u64 tau) const;
};

Curve curve_coeffs(const std::vector<u64>& a, const KakeyaSet& K);

/// Closed-form curve point: coordinate i is (beta_i+tau)^(u+1) - tau^(u+1).
std::vector<u64> curve_point(const std::vector<u64>& a, const KakeyaSet& K, u64 tau);

/// Evaluations of the Hasse derivatives of f (orders |e|_1 <= order) on
/// every S_tau^m, stored once per distinct translate.
class DerivTable {
  public:
    DerivTable(const MultiPoly& f, const KakeyaSet& K, u32 order);

    u32 order() const { return order_; }
    const std::vector<ExpVec>& exponents() const { return exps_; }
    const KakeyaSet& kakeya() const { return *K_; }

    /// Raw grid for derivative index ei over (W - W[wi])^m.
    const std::vector<u64>& grid(size_t ei, size_t wi) const { return grids_[ei][wi]; }

    /// Value of the e-th derivative at a point of S_tau^m given W-aligned
    /// coordinate indices (flattened; first coordinate fastest).
    u64 value_at(size_t ei, u64 tau, size_t flat) const {
        return grids_[ei][wi_of_tau_[tau]][flat];
    }

    /// Completeness: an entry exists for every (e, tau) pair.
    size_t entry_count() const { return exps_.size() * K_->q(); }

    /// Materialize the (e, tau) entry as a GridEvaluations (test/inspection
    /// path; the hot path reads grids directly).
    GridEvaluations grid_evaluations(const ExpVec& e, u64 tau) const;

  private:
    const KakeyaSet* K_;
    KakeyaSetPtr keepalive_;
    u32 order_;
    std::vector<ExpVec> exps_;
    std::vector<u32> wi_of_tau_;
    std::vector<std::vector<std::vector<u64>>> grids_;  // [e index][w index] -> |W|^m values

    friend DerivTable kakeya_derivative_tables(const MultiPoly&, const KakeyaSetPtr&, u32);
};

/// Tables of all order <= k Hasse derivatives of f over the Kakeya set.
DerivTable kakeya_derivative_tables(const MultiPoly& f, const KakeyaSetPtr& K, u32 k);

/// Hasse derivatives h^(j)(tau), j <= T.order(), of h(t) = f(G_a(t)) at
/// every tau, via the chain-rule polynomial
///   h_l(t, Z) = sum_i Z^i sum_{|e|=i} (d_e f)(G_a(t)) * gtilde_e(t, Z)
/// with gtilde_i(t, Z) = (g_i(t+Z) - g_i(t)) / Z, products truncated at Z^l.
/// Returns blocks[tau][j].
std::vector<std::vector<u64>> curve_hasse_transfer(const DerivTable& T, const Curve& C,
                                                   const KakeyaSet& K);

/// Evaluate a homogeneous f over F_q at N points: derivative tables on the
/// Kakeya set, per-point curve restriction and Hermite recovery, leading-
/// coefficient read-off. dTilde must divide q-1 and u = (q-1)/dTilde - 1
/// must be >= 1.
std::vector<Natural> mme_nice_field(const MultiPoly& f, const std::vector<ModPoint>& points,
                                    u32 d, const Natural& dTilde);

}  // namespace mme

#endif
