#include "mme/kakeya.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mme/kernels.hpp"
#include "mme/primes.hpp"

namespace mme {

KakeyaSet::KakeyaSet(u64 q, u32 u, u32 m) : q_(q), u_(u), m_(m) {
    if (u < 1) throw UsageError("KakeyaSet: curve degree u must be >= 1");
    if ((q - 1) % (u + 1) != 0)
        throw UsageError("KakeyaSet: (u+1) = " + std::to_string(u + 1) + " must divide q-1 = " +
                         std::to_string(q - 1));
    fq_ = std::make_shared<const FqTables>(q);  // validates primality
    const auto& E = fq_->eng();

    // W = image of x -> x^(u+1); S_tau = W - tau^(u+1)
    shift_.resize(q);
    w_index_.assign(q, kNone);
    for (u64 x = 0; x < q; ++x) {
        u64 p = fq_->pow_of(x, u + 1);
        shift_[x] = p;
        if (w_index_[p] == kNone) w_index_[p] = 0;  // mark; numbered below
    }
    for (u64 v = 0; v < q; ++v)
        if (w_index_[v] != kNone) W_.push_back(v);
    for (u32 i = 0; i < W_.size(); ++i) w_index_[W_[i]] = i;

    MME_ASSERT(W_.size() == (q - 1) / (u + 1) + 1);
    inv_u1_ = fq_->inv_of((u + 1) % q);
    (void)E;
}

std::vector<Natural> KakeyaSet::s_tau(u64 tau) const {
    std::vector<Natural> out;
    out.reserve(W_.size());
    for (u64 w : W_) out.emplace_back(fq_->eng().sub(w, shift_[tau]));
    return out;
}

Natural KakeyaSet::total_size() const {
    Natural per = pow(Natural(W_.size()), m_);
    return Natural(q_) * per;
}

Natural KakeyaSet::distinct_size_bound() const { return pow(Natural(W_.size()), m_ + 1); }

namespace {
std::mutex g_kakeya_mutex;
std::map<std::tuple<u64, u32, u32>, KakeyaSetPtr> g_kakeya_cache;
}  // namespace

KakeyaSetPtr build_kakeya(u64 q, u32 u, u32 m) {
    std::lock_guard<std::mutex> lock(g_kakeya_mutex);
    auto key = std::make_tuple(q, u, m);
    auto it = g_kakeya_cache.find(key);
    if (it != g_kakeya_cache.end()) return it->second;
    auto K = std::make_shared<const KakeyaSet>(q, u, m);
    if (g_kakeya_cache.size() > 256) g_kakeya_cache.clear();
    g_kakeya_cache.emplace(key, K);
    return K;
}

std::vector<u64> Curve::eval_poly(const FqTables& fq, u64 tau) const {
    const auto& E = fq.eng();
    const size_t m = g.empty() ? 0 : g[0].size();
    std::vector<u64> out(m, 0);
    for (size_t i = 0; i < m; ++i) {
        u64 acc = 0;
        for (size_t j = g.size(); j-- > 0;) acc = E.add(E.mul(acc, tau), g[j][i]);
        out[i] = acc;
    }
    return out;
}

Curve curve_coeffs(const std::vector<u64>& a, const KakeyaSet& K) {
    if (a.size() != K.m()) throw UsageError("curve_coeffs: point dimension mismatch");
    const auto& fq = K.fq();
    const auto& E = fq.eng();
    const u32 u = K.u();
    Curve C;
    C.g.assign(u + 1, std::vector<u64>(K.m(), 0));
    for (u32 i = 0; i < K.m(); ++i) {
        u64 beta = E.mul(a[i] % K.q(), K.inv_u1());
        // g_j(a)_i = C(u+1, j) beta^{u+1-j}; the y^u coefficient is exactly a_i
        for (u32 j = 0; j <= u; ++j) {
            u64 binom = binom_mod_p(u + 1, j, K.q());
            C.g[j][i] = E.mul(binom, fq.pow_of(beta, u + 1 - j));
        }
        MME_ASSERT(C.g[u][i] == a[i] % K.q());
    }
    return C;
}

std::vector<u64> curve_point(const std::vector<u64>& a, const KakeyaSet& K, u64 tau) {
    const auto& fq = K.fq();
    const auto& E = fq.eng();
    std::vector<u64> out(K.m());
    for (u32 i = 0; i < K.m(); ++i) {
        u64 beta = E.mul(a[i] % K.q(), K.inv_u1());
        out[i] = E.sub(fq.pow_of(E.add(beta, tau), K.u() + 1), K.shift_of(tau));
    }
    return out;
}

DerivTable::DerivTable(const MultiPoly& f, const KakeyaSet& K, u32 order)
    : K_(&K), order_(order) {
    if (f.is_ext() || !f.modulus()->small() || !(f.modulus()->n() == Natural(K.q())))
        throw UsageError("DerivTable: f must live over F_q of the Kakeya set");
    const auto& E = K.fq().eng();
    const u32 m = f.m(), d = f.d();
    if (m != K.m()) throw UsageError("DerivTable: dimension mismatch");

    exps_ = exponents_upto(m, order);
    wi_of_tau_.resize(K.q());
    for (u64 tau = 0; tau < K.q(); ++tau) wi_of_tau_[tau] = K.w_index(K.shift_of(tau));

    auto coeffs = f.to_u64();
    auto binom = kern::binom_table(d, E);
    const auto& W = K.W();

    grids_.resize(exps_.size());
    std::vector<u64> s(W.size());
    for (size_t ei = 0; ei < exps_.size(); ++ei) {
        auto dcoeffs = kern::hasse_derivative(E, coeffs, m, d, exps_[ei].e, binom);
        grids_[ei].resize(W.size());
        for (size_t wi = 0; wi < W.size(); ++wi) {
            for (size_t i = 0; i < W.size(); ++i) s[i] = E.sub(W[i], W[wi]);
            kern::product_grid(E, dcoeffs, m, d, s, grids_[ei][wi]);
        }
    }
}

GridEvaluations DerivTable::grid_evaluations(const ExpVec& e, u64 tau) const {
    auto it = std::find(exps_.begin(), exps_.end(), e);
    if (it == exps_.end()) throw InternalError("DerivTable: missing entry for exponent");
    size_t ei = it - exps_.begin();
    GridEvaluations g;
    g.m = K_->m();
    g.S = K_->s_tau(tau);
    const auto& raw = grids_[ei][wi_of_tau_[tau]];
    g.values.reserve(raw.size());
    for (u64 v : raw) g.values.emplace_back(v);
    return g;
}

DerivTable kakeya_derivative_tables(const MultiPoly& f, const KakeyaSetPtr& K, u32 k) {
    DerivTable t(f, *K, k);
    t.keepalive_ = K;
    return t;
}

std::vector<std::vector<u64>> curve_hasse_transfer(const DerivTable& T, const Curve& C,
                                                   const KakeyaSet& K) {
    const auto& fq = K.fq();
    const auto& E = fq.eng();
    const u32 m = K.m();
    const u32 ell = T.order();
    const auto& exps = T.exponents();

    // parent links through the exponent lattice: e = parent + unit(coord)
    std::vector<std::pair<size_t, u32>> parent(exps.size());
    {
        std::map<ExpVec, size_t> pos;
        for (size_t i = 0; i < exps.size(); ++i) pos[exps[i]] = i;
        for (size_t i = 1; i < exps.size(); ++i) {
            ExpVec p = exps[i];
            u32 j = 0;
            while (p.e[j] == 0) ++j;
            p.e[j] -= 1;
            parent[i] = {pos.at(p), j};
        }
    }

    std::vector<std::vector<u64>> blocks(K.q(), std::vector<u64>(ell + 1, 0));
    // gtilde_i(tau, Z) = (g_i(tau+Z) - g_i(tau)) / Z, truncated at Z^ell
    std::vector<std::vector<u64>> gt(m, std::vector<u64>(ell + 1, 0));
    std::vector<std::vector<u64>> prods(exps.size(), std::vector<u64>(ell + 1, 0));

    for (u64 tau = 0; tau < K.q(); ++tau) {
        auto pt = C.eval_poly(fq, tau);
        // coordinate indices of G_a(tau) inside the tau grid
        size_t flat = 0, stride = 1;
        for (u32 i = 0; i < m; ++i) {
            u32 si = K.s_index(tau, pt[i]);
            if (si == KakeyaSet::kNone) throw InternalError("curve point escaped the Kakeya set");
            flat += (size_t)si * stride;
            stride *= K.W().size();
        }

        // Taylor re-centering of each coordinate polynomial at tau
        for (u32 i = 0; i < m; ++i) {
            std::fill(gt[i].begin(), gt[i].end(), 0);
            // shift coefficients: iterate Horner, tracking only orders <= ell+1
            std::vector<u64> sh(std::min<size_t>(C.g.size(), ell + 2), 0);
            for (size_t cj = C.g.size(); cj-- > 0;) {
                for (size_t t2 = sh.size(); t2-- > 1;) sh[t2] = E.add(E.mul(sh[t2], tau), sh[t2 - 1]);
                sh[0] = E.add(E.mul(sh[0], tau), C.g[cj][i]);
            }
            for (size_t j = 1; j < sh.size(); ++j) gt[i][j - 1] = sh[j];
        }

        prods[0].assign(ell + 1, 0);
        prods[0][0] = 1;
        for (size_t ei = 1; ei < exps.size(); ++ei) {
            const auto& [pi, coord] = parent[ei];
            const auto& pa = prods[pi];
            auto& out = prods[ei];
            std::fill(out.begin(), out.end(), 0);
            u32 cap = ell - (u32)exps[ei].weight();
            for (u32 x = 0; x <= cap; ++x) {
                if (pa[x] == 0) continue;
                for (u32 y = 0; x + y <= cap; ++y)
                    out[x + y] = E.add(out[x + y], E.mul(pa[x], gt[coord][y]));
            }
        }

        auto& blk = blocks[tau];
        for (size_t ei = 0; ei < exps.size(); ++ei) {
            u64 val = T.value_at(ei, tau, flat);
            if (val == 0) continue;
            u32 wgt = (u32)exps[ei].weight();
            for (u32 j = 0; wgt + j <= ell; ++j)
                blk[wgt + j] = E.add(blk[wgt + j], E.mul(val, prods[ei][j]));
        }
    }
    return blocks;
}

}  // namespace mme
