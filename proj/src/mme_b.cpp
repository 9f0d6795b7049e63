#include "mme/mme_b.hpp"

#include <map>

#include "mme/interp.hpp"
#include "mme/kernels.hpp"
#include "mme/prodeval.hpp"
#include "mme/primes.hpp"

namespace mme {

namespace {

void validate_ring(const MultiPoly& f, const Natural& r, u32 s) {
    if (f.is_ext()) throw UsageError("mme_b: modular entry point given an extension polynomial");
    if (!(f.modulus()->r() == r) || f.modulus()->s() != s)
        throw UsageError("mme_b: f's ring must be Z/r^s for the given r, s");
    if (s < 1) throw UsageError("mme_b: s must be >= 1");
    if (s > f.m()) throw UsageError("mme_b: s must be <= m");
}

// ---- small-modulus fast path of the base algorithm ----

std::vector<Natural> product_set_small(const MultiPoly& f, const std::vector<ModPoint>& points,
                                       u64 r, u32 s) {
    const auto& mod = *f.modulus();
    const ModEngine& E = mod.engine();
    const u32 m = f.m(), d = f.d();
    const size_t N = points.size();
    auto exps = exponents_upto(m, s - 1);

    auto coeffs = f.to_u64();
    auto binom = kern::binom_table(d, E);
    std::vector<std::vector<u64>> derivs(exps.size());
    for (size_t ei = 0; ei < exps.size(); ++ei)
        derivs[ei] = kern::hasse_derivative(E, coeffs, m, d, exps[ei].e, binom);

    // grid over [0,r)^m, unless direct per-point evaluation is cheaper
    u64 grid_cost = kern::product_grid_cost(m, d, r);
    u64 direct_cost = 0;
    {
        u64 per_point = 1;
        for (u32 i = 0; i < m; ++i)
            per_point = per_point > (u64(1) << 40) ? per_point : per_point * d;
        direct_cost = 2 * per_point * std::max<u64>(N, 1);
    }
    size_t grid_size = 1;
    bool grid_ok = true;
    for (u32 i = 0; i < m && grid_ok; ++i) {
        if (grid_size > (size_t(1) << 28) / r) grid_ok = false;
        grid_size *= r;
    }
    const bool use_grid = grid_ok && grid_cost <= direct_cost;

    std::vector<std::vector<u64>> grids;
    if (use_grid) {
        std::vector<u64> S(r);
        for (u64 i = 0; i < r; ++i) S[i] = i;
        grids.resize(exps.size());
        for (size_t ei = 0; ei < exps.size(); ++ei)
            kern::product_grid(E, derivs[ei], m, d, S, grids[ei]);
    }

    std::vector<Natural> out(N);
    std::vector<u64> a(m), abar(m), diff(m);
    for (size_t i = 0; i < N; ++i) {
        if (points[i].size() != m) throw UsageError("mme_product_set: point dimension mismatch");
        size_t flat = 0, stride = 1;
        for (u32 j = 0; j < m; ++j) {
            a[j] = E.reduce(points[i][j]);
            abar[j] = a[j] % r;
            diff[j] = E.sub(a[j], abar[j]);
            flat += (size_t)abar[j] * stride;
            stride *= r;
        }
        // diff powers per coordinate up to s-1
        std::vector<u64> pows((size_t)m * s, 1 % E.n());
        for (u32 j = 0; j < m; ++j)
            for (u32 p = 1; p < s; ++p) pows[j * s + p] = E.mul(pows[j * s + p - 1], diff[j]);

        u64 acc = 0;
        for (size_t ei = 0; ei < exps.size(); ++ei) {
            u64 v = use_grid ? grids[ei][flat] : kern::horner_eval(E, derivs[ei].data(), m, d, abar.data());
            if (v == 0) continue;
            for (u32 j = 0; j < m; ++j) {
                u32 e = exps[ei].e[j];
                if (e) v = E.mul(v, pows[j * s + e]);
            }
            acc = E.add(acc, v);
        }
        out[i] = Natural(acc);
    }
    return out;
}

// ---- generic (arbitrary-size modulus) path ----

std::vector<Natural> product_set_big(const MultiPoly& f, const std::vector<ModPoint>& points,
                                     const Natural& r, u32 s) {
    const auto& mod = f.modulus();
    const u32 m = f.m();
    auto derivs = hasse_all_upto(f, s - 1);
    std::vector<Natural> out(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& a = points[i];
        if (a.size() != m) throw UsageError("mme_product_set: point dimension mismatch");
        ModPoint abar(m);
        for (u32 j = 0; j < m; ++j) abar[j] = mod->reduce(a[j]) % r;
        std::map<ExpVec, Natural> vals;
        for (const auto& [e, df] : derivs) vals.emplace(e, naive_eval(df, abar));
        out[i] = taylor_correction(vals, a, abar, *mod);
    }
    return out;
}

}  // namespace

std::vector<Natural> mme_product_set(const MultiPoly& f, const std::vector<ModPoint>& points,
                                     const Natural& r, u32 s) {
    validate_ring(f, r, s);
    if (f.modulus()->small() && r.fits_u64())
        return product_set_small(f, points, r.to_u64(), s);
    return product_set_big(f, points, r, s);
}

std::vector<Natural> mme_b(const MultiPoly& f, const std::vector<ModPoint>& points,
                           const Natural& r, u32 s, u32 t) {
    validate_ring(f, r, s);
    if (t == 0) return mme_product_set(f, points, r, s);

    const auto& mod = f.modulus();
    const u32 m = f.m(), d = f.d();
    const size_t N = points.size();
    auto exps = exponents_upto(m, s - 1);

    // Step 2: derivative lifts to Z with coefficients in [0, r^s)
    std::vector<std::vector<Natural>> lifts;
    lifts.reserve(exps.size());
    for (const auto& e : exps) lifts.push_back(hasse_derivative(f, e).mod_coeffs());

    // Step 3: small lifts of the points (coordinates in [0, r)) and their
    // residues. Reducing from the SMALL lift is what keeps the prime bound
    // independent of s.
    std::vector<ModPoint> atilde(N, ModPoint(m));
    std::vector<ModPoint> abar(N, ModPoint(m));
    for (size_t i = 0; i < N; ++i) {
        if (points[i].size() != m) throw UsageError("mme_b: point dimension mismatch");
        for (u32 j = 0; j < m; ++j) {
            atilde[i][j] = mod->reduce(points[i][j]) % r;
            abar[i][j] = atilde[i][j];
        }
    }

    // Step 4: M = d r^d; minimal prime prefix with product > M. (The prime
    // powers p_j^m then have product > d^m r^{dm}, which dominates every
    // lifted derivative value.)
    const Natural M = Natural(d) * pow(r, d);
    auto primes = small_primes_exceeding(M);
    const size_t k = primes.size();
    {
        u64 bound = 16 * ceil_log2(M);
        for (const auto& p : primes) MME_ASSERT(p <= Natural(bound));
    }

    std::vector<Natural> pk(k);
    std::vector<PowerModulusPtr> submod(k);
    for (size_t j = 0; j < k; ++j) {
        submod[j] = make_modulus(primes[j], m);
        pk[j] = submod[j]->n();
    }

    // Steps 5-7: per-prime reductions and recursive calls. Point sets are
    // shared across derivatives for the same prime; identical reduced
    // polynomials share one subcall.
    //   residues[ei][i][j] = f_e(atilde_i) mod p_j^m
    std::vector<std::vector<std::vector<Natural>>> residues(
        exps.size(), std::vector<std::vector<Natural>>(N, std::vector<Natural>(k)));

    for (size_t j = 0; j < k; ++j) {
        std::vector<ModPoint> subpts(N, ModPoint(m));
        for (size_t i = 0; i < N; ++i)
            for (u32 v = 0; v < m; ++v) subpts[i][v] = atilde[i][v] % pk[j];

        std::map<std::vector<Natural>, size_t> memo;
        std::vector<std::vector<Natural>> results;
        std::vector<size_t> which(exps.size());
        for (size_t ei = 0; ei < exps.size(); ++ei) {
            std::vector<Natural> reduced(lifts[ei].size());
            for (size_t c = 0; c < reduced.size(); ++c) reduced[c] = lifts[ei][c] % pk[j];
            auto it = memo.find(reduced);
            if (it != memo.end()) {
                which[ei] = it->second;
                continue;
            }
            MultiPoly sub = MultiPoly::zero(m, d, submod[j]);
            sub.mod_coeffs() = reduced;
            results.push_back(mme_b(sub, subpts, primes[j], m, t - 1));
            memo.emplace(std::move(reduced), results.size() - 1);
            which[ei] = results.size() - 1;
        }
        for (size_t ei = 0; ei < exps.size(); ++ei)
            for (size_t i = 0; i < N; ++i) residues[ei][i][j] = results[which[ei]][i];
    }

    // Step 8: CRT back to the integers, then reduce mod r^s.
    const Natural crt_bound = pow(Natural(d), m) * pow(r, (u64)d * m);
    PreparedCrt crt(pk);
    MME_ASSERT(crt.product() > crt_bound);
    std::vector<std::vector<Natural>> dvals(exps.size(), std::vector<Natural>(N));
    for (size_t ei = 0; ei < exps.size(); ++ei)
        for (size_t i = 0; i < N; ++i) {
            Natural Q = crt.combine(residues[ei][i]);
            MME_ASSERT(Q < crt_bound);
            dvals[ei][i] = Q % mod->n();
        }

    // Step 9: Taylor correction per point.
    std::vector<Natural> out(N);
    for (size_t i = 0; i < N; ++i) {
        std::map<ExpVec, Natural> vals;
        for (size_t ei = 0; ei < exps.size(); ++ei) vals.emplace(exps[ei], dvals[ei][i]);
        out[i] = taylor_correction(vals, points[i], abar[i], *mod);
    }
    return out;
}

std::vector<ExtElem> mme_b_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                               const Natural& r, u32 t) {
    if (!f.is_ext()) throw UsageError("mme_b_ext: extension-ring input required");
    const auto& ring = *f.ext_ring();
    if (!(ring.base()->n() == r)) throw UsageError("mme_b_ext: r must match the base ring size");
    const u32 m = f.m(), d = f.d(), e = ring.degree();
    const size_t N = points.size();

    // Step 3: ell = ed, prime P in [ell, 2ell], smallest P-power r' >= d(er)^d.
    const u64 ell = (u64)e * d;
    u64 P = ell;
    while (!is_prime_u64(P)) ++P;
    MME_ASSERT(P <= 2 * ell);
    const Natural target = Natural(d) * pow(Natural(e) * r, d);
    Natural rprime(P);
    u32 w = 1;
    while (rprime < target) {
        rprime *= Natural(P);
        ++w;
    }
    MME_ASSERT(w == 1 || rprime / Natural(P) < target);
    auto sub_ring = make_modulus(rprime, m);  // Z / r'^m

    // Steps 1-2, 4: lifted coefficient slices f_u and per-node Taylor data
    // of the points.
    std::vector<MultiPoly> fu;
    fu.reserve(e);
    for (u32 u = 0; u < e; ++u) fu.push_back(MultiPoly::zero(m, d, sub_ring));
    for (size_t idx = 0; idx < f.coeff_count(); ++idx)
        for (u32 u = 0; u < e; ++u) fu[u].set_coeff(idx, f.ext_coeffs()[idx].c[u]);

    // a_{i,j,u}: coefficient of (z-j)^u of coordinate polys of the lifted points
    // taylor[i][j][v][u]
    std::vector<std::vector<std::vector<std::vector<Natural>>>> taylor(N);
    std::vector<ModPoint> subpts(N * ell, ModPoint(m));
    for (size_t i = 0; i < N; ++i) {
        if (points[i].size() != m) throw UsageError("mme_b_ext: point dimension mismatch");
        taylor[i].assign(ell, std::vector<std::vector<Natural>>(m));
        for (u64 j = 0; j < ell; ++j) {
            for (u32 v = 0; v < m; ++v) {
                UniPoly coord(sub_ring, points[i][v].c);
                UniPoly sh = taylor_shift(coord, Natural(j));
                auto& tv = taylor[i][j][v];
                tv.assign(e, Natural(0));
                for (size_t u = 0; u < sh.coeffs().size(); ++u) tv[u] = sh.coeffs()[u];
                subpts[i * ell + j][v] = tv[0];
            }
        }
    }

    // Step 5: Hasse derivatives of each slice to order < m.
    auto exps = exponents_upto(m, m - 1);

    // Step 6: one recursive MME-B call per (derivative, slice), evaluated at
    // all N*ell shared points.
    //   vals[ei][u][i*ell+j]
    std::vector<std::vector<std::vector<Natural>>> vals(exps.size());
    for (size_t ei = 0; ei < exps.size(); ++ei) {
        vals[ei].resize(e);
        for (u32 u = 0; u < e; ++u) {
            MultiPoly df = hasse_derivative(fu[u], exps[ei]);
            vals[ei][u] = mme_b(df, subpts, rprime, m, t);
        }
    }

    // Step 7: b_{i,j}(z) = sum_u sum_e f_{e,u}(a_{i,j,0}) (abar_i - a_{i,j,0})^e z^u
    // mod (z-j)^m, assembled in the shifted basis.
    const auto& Rm = *sub_ring;
    // (y+j)^u truncated at y^m, per (j, u)
    std::vector<std::vector<std::vector<Natural>>> zpow(ell);
    for (u64 j = 0; j < ell; ++j) {
        zpow[j].assign(e, std::vector<Natural>(m, Natural(0)));
        for (u32 u = 0; u < e; ++u) {
            UniPoly base(sub_ring, {Natural(j), Natural(1)});
            UniPoly acc(sub_ring, {Natural(1)});
            for (u32 x = 0; x < u; ++x) acc = acc * base;
            for (u32 x = 0; x < m && x < acc.coeffs().size(); ++x) zpow[j][u][x] = acc.coeffs()[x];
        }
    }

    PreparedHermite hermite(sub_ring, [&] {
        std::vector<std::pair<Natural, u32>> nodes;
        for (u64 j = 0; j < ell; ++j) nodes.emplace_back(Natural(j), m);
        return nodes;
    }());

    std::vector<ExtElem> out(N, ring.zero());
    std::vector<std::vector<Natural>> blocks(ell);
    for (size_t i = 0; i < N; ++i) {
        for (u64 j = 0; j < ell; ++j) {
            // delta_v(y) = sum_{u>=1} a_{i,j,u} y^u, truncated at y^m
            std::vector<std::vector<Natural>> delta(m, std::vector<Natural>(m, Natural(0)));
            for (u32 v = 0; v < m; ++v)
                for (u32 u = 1; u < e && u < m; ++u) delta[v][u] = taylor[i][j][v][u];

            // truncated products over the derivative lattice
            std::vector<std::vector<Natural>> prods(exps.size(), std::vector<Natural>(m, Natural(0)));
            prods[0][0] = Natural(1) % Rm.n();
            for (size_t ei = 1; ei < exps.size(); ++ei) {
                ExpVec p = exps[ei];
                u32 coord = 0;
                while (p.e[coord] == 0) ++coord;
                p.e[coord] -= 1;
                size_t pi = std::find(exps.begin(), exps.end(), p) - exps.begin();
                for (u32 x = 0; x < m; ++x) {
                    if (prods[pi][x].is_zero()) continue;
                    for (u32 y = 0; x + y < m; ++y)
                        prods[ei][x + y] =
                            Rm.add(prods[ei][x + y], Rm.mul(prods[pi][x], delta[coord][y]));
                }
            }

            std::vector<Natural> block(m, Natural(0));
            for (u32 u = 0; u < e; ++u) {
                std::vector<Natural> slice(m, Natural(0));
                for (size_t ei = 0; ei < exps.size(); ++ei) {
                    const Natural& v = vals[ei][u][i * ell + j];
                    if (v.is_zero()) continue;
                    for (u32 x = 0; x < m; ++x)
                        if (!prods[ei][x].is_zero()) slice[x] = Rm.add(slice[x], Rm.mul(v, prods[ei][x]));
                }
                // slice(y) * (y+j)^u truncated at y^m
                for (u32 x = 0; x < m; ++x) {
                    if (slice[x].is_zero()) continue;
                    for (u32 y = 0; x + y < m; ++y)
                        block[x + y] = Rm.add(block[x + y], Rm.mul(slice[x], zpow[j][u][y]));
                }
            }
            blocks[j] = std::move(block);
        }

        // Step 8: Hermite interpolation over Z/r'^m at nodes 0..ell-1.
        UniPoly bi = hermite.interpolate(blocks);
        MME_ASSERT(bi.degree() < (int)((u64)ell * m));

        // Step 9: lift the digits and reduce mod (r, E).
        std::vector<Natural> digits(bi.coeffs());
        out[i] = ring.from_coeffs(std::move(digits));
    }
    return out;
}

u32 theorem61_depth(const MultiPoly& f, const DepthConfig& cfg) {
    auto auto_c = [&](const Natural& size) {
        u32 c = 0;
        Natural cur = size;
        Natural target(std::max<u32>(f.d(), 2));
        while (cur > target && c < 64) {
            cur = Natural(ceil_log2(cur));
            ++c;
        }
        return c;
    };
    if (f.is_ext()) {
        const auto& ring = *f.ext_ring();
        Natural rx = Natural(f.d()) * pow(Natural(ring.degree()) * ring.base()->n(), f.d());
        u32 c = cfg.c ? *cfg.c : auto_c(rx);
        u32 cap = log_star(rx);
        u32 t = std::max<u32>(c, 2);
        if (cap >= 1) t = std::min(t, cap - 1);
        return t;
    }
    const Natural& r = f.modulus()->r();
    u32 c = cfg.c ? *cfg.c : auto_c(r);
    u32 cap = log_star(r);
    u32 t = c;
    if (cap >= 1) t = std::min(t, cap - 1);
    return t;
}

std::vector<Natural> evaluate_theorem61(const MultiPoly& f, const std::vector<ModPoint>& points,
                                        const DepthConfig& cfg) {
    if (f.is_ext()) throw UsageError("evaluate_theorem61: modular entry point");
    return mme_b(f, points, f.modulus()->r(), f.modulus()->s(), theorem61_depth(f, cfg));
}

std::vector<ExtElem> evaluate_theorem61_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                                            const DepthConfig& cfg) {
    return mme_b_ext(f, points, f.ext_ring()->base()->n(), theorem61_depth(f, cfg));
}

}  // namespace mme
