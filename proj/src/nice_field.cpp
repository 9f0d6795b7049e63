#include "mme/nice_field.hpp"

#include "mme/kernels.hpp"

namespace mme {

namespace {

// Coeff_{x^c} of (x + x^2 + ... + x^(q-1))^n mod q, via
// P^n = (x^q - x)^n (x-1)^(-n):
//   c_n(c) = sum_v (-1)^v C(n,v) C(c - qv + v - 1, n-1)  over v with qv + n - v <= c.
u64 power_sum_coeff(u64 q, u32 n, i64 c) {
    if (c < 1) return 0;
    ModEngine E(q);
    u64 acc = 0;
    for (u32 v = 0; v <= n; ++v) {
        if ((i64)c - (i64)(q * v) - (i64)(n - v) < 0) break;
        i64 top = c - (i64)(q * v) + v - 1;
        u64 term = E.mul(binom_mod_p(n, v, q), binom_mod_p((u64)top, n - 1, q));
        acc = (v & 1) ? E.sub(acc, term) : E.add(acc, term);
    }
    return acc;
}

}  // namespace

std::vector<u64> hermite_topcoeff_weights(const FqTables& fq, u32 k, u64 T) {
    const u64 q = fq.q();
    const u32 n = k + 1;
    if (n > q - 1) throw UsageError("hermite_topcoeff_weights: multiplicity k+1 must be <= q-1");
    const ModEngine& E = fq.eng();

    std::vector<u64> K(n, 0), S(n, 0);
    for (u32 w = 0; w < n; ++w) K[w] = power_sum_coeff(q, n, (i64)T - (i64)w);
    for (u32 j = 0; j < n; ++j) {
        u64 acc = 0;
        for (u32 w = 0; w <= j; ++w) {
            u64 term = E.mul(binom_mod_p(j, w, q), K[w]);
            acc = ((j - w) & 1) ? E.sub(acc, term) : E.add(acc, term);
        }
        S[j] = acc;
    }

    std::vector<u64> wt((size_t)q * n, 0);
    // tau = 0: the basis polynomial is (-1)^n y^j (y^(q-1) - 1)^n
    for (u32 j = 0; j < n; ++j) {
        if ((u64)j > T) break;
        u64 diff = T - j;
        if (diff % (q - 1) == 0 && diff / (q - 1) <= n) {
            u64 v = diff / (q - 1);
            u64 b = binom_mod_p(n, v, q);
            wt[j] = (v & 1) ? E.neg(b) : b;
        }
    }
    // tau != 0: (-1)^n tau^(j-T) S_j
    for (u64 tau = 1; tau < q; ++tau) {
        u64 p = fq.pow_neg_of(tau, T % (q - 1));
        for (u32 j = 0; j < n; ++j) {
            u64 v = E.mul(p, S[j]);
            wt[tau * n + j] = (n & 1) ? E.neg(v) : v;
            p = E.mul(p, tau);
        }
    }
    return wt;
}

NiceFieldSession::NiceFieldSession(KakeyaSetPtr K, u32 d) : K_(std::move(K)), d_(d), m_(K_->m()) {
    const auto& E = K_->fq().eng();
    const u64 q = K_->q();
    const u32 u = K_->u();
    J_ = std::min<u32>(2 * m_ + 1, u);

    binom_ = kern::binom_table(d_, E);
    binom_u1_.resize(J_ + 2);
    for (u32 j = 0; j <= J_ + 1; ++j) binom_u1_[j] = binom_mod_p(u + 1, j, q);

    taupow_.assign((size_t)q * (J_ + 1), 0);
    for (u64 tau = 0; tau < q; ++tau) {
        u64 v = K_->fq().pow_of(tau, u + 1 - J_);
        for (u32 j = J_ + 1; j-- > 0;) {
            taupow_[tau * (J_ + 1) + j] = v;
            if (j > 0) v = E.mul(v, tau);
        }
    }
}

void NiceFieldSession::set_points(const std::vector<std::vector<u64>>& points) {
    const auto& fq = K_->fq();
    const auto& E = fq.eng();
    const u64 q = K_->q();
    const u32 u = K_->u();
    const size_t nw = K_->W().size();

    pts_.assign(points.size(), PointData{});
    for (size_t pi = 0; pi < points.size(); ++pi) {
        const auto& a = points[pi];
        if (a.size() != m_) throw UsageError("nice field: point dimension mismatch");
        auto& P = pts_[pi];
        P.pw.assign((size_t)q * m_ * (J_ + 1), 0);
        P.flat.assign(q, 0);
        std::vector<u64> beta(m_);
        for (u32 i = 0; i < m_; ++i) beta[i] = E.mul(a[i] % q, K_->inv_u1());
        for (u64 tau = 0; tau < q; ++tau) {
            size_t flat = 0, stride = 1;
            for (u32 i = 0; i < m_; ++i) {
                u64 base = E.add(beta[i], tau);
                u64* row = &P.pw[(tau * m_ + i) * (J_ + 1)];
                u64 v = fq.pow_of(base, u + 1 - J_);
                for (u32 j = J_ + 1; j-- > 0;) {
                    row[j] = v;
                    if (j > 0) v = E.mul(v, base);
                }
                // row[0] = (beta_i + tau)^(u+1) is the W representative of
                // coordinate i of G_a(tau)
                u32 si = K_->w_index(row[0]);
                MME_ASSERT(si != KakeyaSet::kNone);
                flat += (size_t)si * stride;
                stride *= nw;
            }
            P.flat[tau] = (u32)flat;
        }
    }
}

const NiceFieldSession::Lattice& NiceFieldSession::lattice(u32 k) {
    auto it = lattices_.find(k);
    if (it != lattices_.end()) return it->second;
    Lattice lat;
    lat.exps = exponents_upto(m_, k);
    lat.parent.assign(lat.exps.size(), 0);
    lat.coord.assign(lat.exps.size(), 0);
    std::map<ExpVec, size_t> pos;
    for (size_t i = 0; i < lat.exps.size(); ++i) pos[lat.exps[i]] = i;
    for (size_t i = 1; i < lat.exps.size(); ++i) {
        ExpVec p = lat.exps[i];
        u32 j = 0;
        while (p.e[j] == 0) ++j;
        p.e[j] -= 1;
        lat.parent[i] = pos.at(p);
        lat.coord[i] = j;
    }
    return lattices_.emplace(k, std::move(lat)).first->second;
}

const std::vector<u64>& NiceFieldSession::weights(u32 k, u64 T) {
    auto key = std::make_pair(k, T);
    auto it = weights_.find(key);
    if (it != weights_.end()) return it->second;
    return weights_.emplace(key, hermite_topcoeff_weights(K_->fq(), k, T)).first->second;
}

std::vector<u64> NiceFieldSession::eval_component(const std::vector<u64>& coeffs, u64 deg) {
    const auto& E = K_->fq().eng();
    const u64 q = K_->q();
    const u32 u = K_->u();
    const size_t N = pts_.size();

    if (deg == 0) return std::vector<u64>(N, coeffs.empty() ? 0 : coeffs[0]);

    const u64 T = (u64)u * deg;
    // degree budget from the paper's parameterization, and the exact
    // multiplicity this component needs
    MME_ASSERT(T < q * (u64)(2 * m_ + 1));
    const u32 n = (u32)((T + 1 + q - 1) / q);
    const u32 k = n - 1;
    MME_ASSERT(k <= 2 * m_);
    MME_ASSERT(q * (u64)n > T);

    const Lattice& lat = lattice(k);
    const std::vector<u64>& wt = weights(k, T);
    const auto& W = K_->W();
    const size_t nw = W.size();

    // derivative grids, one per (exponent, translate)
    std::vector<std::vector<std::vector<u64>>> grids(lat.exps.size());
    {
        std::vector<u64> s(nw);
        for (size_t ei = 0; ei < lat.exps.size(); ++ei) {
            auto dc = kern::hasse_derivative(E, coeffs, m_, d_, lat.exps[ei].e, binom_);
            grids[ei].resize(nw);
            for (size_t wi = 0; wi < nw; ++wi) {
                for (size_t i = 0; i < nw; ++i) s[i] = E.sub(W[i], W[wi]);
                kern::product_grid(E, dc, m_, d_, s, grids[ei][wi]);
            }
        }
    }

    const u32 gtlen = std::max<u32>(k, 1);  // used coefficients of each gtilde
    std::vector<u64> gt((size_t)m_ * gtlen);
    std::vector<u64> prods(lat.exps.size() * (size_t)(k + 1));
    std::vector<u64> blk(k + 1);
    std::vector<u64> out(N, 0);

    for (size_t pi = 0; pi < N; ++pi) {
        const auto& P = pts_[pi];
        u64 acc = 0;
        for (u64 tau = 0; tau < q; ++tau) {
            const u32 wi = K_->w_index(K_->shift_of(tau));
            const u32 flat = P.flat[tau];
            std::fill(blk.begin(), blk.end(), 0);

            if (k == 0) {
                blk[0] = grids[0][wi][flat];
            } else {
                // gtilde_i(tau, Z) coefficients: C(u+1, j+1) ((beta_i+tau)^(u-j) - tau^(u-j))
                const u64* tp = &taupow_[tau * (J_ + 1)];
                for (u32 i = 0; i < m_; ++i) {
                    const u64* row = &P.pw[(tau * m_ + i) * (J_ + 1)];
                    for (u32 jj = 0; jj < gtlen; ++jj)
                        gt[i * gtlen + jj] =
                            (jj + 1 <= u) ? E.mul(binom_u1_[jj + 1], E.sub(row[jj + 1], tp[jj + 1])) : 0;
                }
                // truncated products over the exponent lattice
                std::fill(prods.begin(), prods.end(), 0);
                prods[0] = 1;
                for (size_t ei = 1; ei < lat.exps.size(); ++ei) {
                    const u64* pa = &prods[lat.parent[ei] * (k + 1)];
                    const u64* g = &gt[lat.coord[ei] * gtlen];
                    u64* o = &prods[ei * (k + 1)];
                    const u32 cap = k - (u32)lat.exps[ei].weight();
                    for (u32 x = 0; x <= cap; ++x) {
                        if (pa[x] == 0) continue;
                        const u32 ymax = std::min(cap - x, gtlen - 1);
                        for (u32 y = 0; y <= ymax; ++y) o[x + y] = E.add(o[x + y], E.mul(pa[x], g[y]));
                    }
                }
                for (size_t ei = 0; ei < lat.exps.size(); ++ei) {
                    const u64 val = grids[ei][wi][flat];
                    if (val == 0) continue;
                    const u32 w = (u32)lat.exps[ei].weight();
                    const u64* pr = &prods[ei * (k + 1)];
                    for (u32 j = 0; w + j <= k; ++j) blk[w + j] = E.add(blk[w + j], E.mul(val, pr[j]));
                }
            }

            const u64* wrow = &wt[tau * n];
            for (u32 j = 0; j <= k; ++j)
                if (blk[j]) acc = E.add(acc, E.mul(blk[j], wrow[j]));
        }
        out[pi] = acc;
    }
    return out;
}

std::vector<Natural> mme_nice_field(const MultiPoly& f, const std::vector<ModPoint>& points,
                                    u32 d, const Natural& dTilde) {
    if (f.is_ext() || !f.modulus()->small())
        throw UsageError("mme_nice_field: f must live over a word-sized prime field");
    if (f.d() != d) throw UsageError("mme_nice_field: degree bound mismatch");
    const u64 q = f.modulus()->n().to_u64();
    const u32 m = f.m();

    auto deg = homogeneous_degree(f);
    if (!deg) throw UsageError("mme_nice_field: input must be homogeneous");

    if (!dTilde.fits_u64() || dTilde.is_zero()) throw UsageError("mme_nice_field: bad dTilde");
    const u64 dt = dTilde.to_u64();
    if ((q - 1) % dt != 0)
        throw UsageError("mme_nice_field: dTilde must divide q-1 (got dTilde=" + dTilde.to_string() +
                         ", q=" + std::to_string(q) + ")");
    if ((q - 1) / dt < 2) throw UsageError("mme_nice_field: curve degree u = (q-1)/dTilde - 1 must be >= 1");
    const u32 u = (u32)((q - 1) / dt - 1);

    auto K = build_kakeya(q, u, m);
    NiceFieldSession session(K, d);
    std::vector<std::vector<u64>> pts64(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != m) throw UsageError("mme_nice_field: point dimension mismatch");
        pts64[i].resize(m);
        for (u32 j = 0; j < m; ++j) pts64[i][j] = (points[i][j] % Natural(q)).to_u64();
    }
    session.set_points(pts64);
    auto vals = session.eval_component(f.to_u64(), *deg);
    std::vector<Natural> out;
    out.reserve(vals.size());
    for (u64 v : vals) out.emplace_back(v);
    return out;
}

}  // namespace mme
