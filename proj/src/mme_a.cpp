#include "mme/mme_a.hpp"

#include "mme/interp.hpp"
#include "mme/nice_field.hpp"

namespace mme {

namespace {

struct LiftedComponent {
    u64 deg;
    std::vector<Natural> coeffs;  // lifted to Z, laid out at the padded degree bound
};

// re-embed a coefficient array from degree bound d0 into bound d1 >= d0
std::vector<Natural> reshape_coeffs(const std::vector<Natural>& c, u32 m, u32 d0, u32 d1) {
    if (d0 == d1) return c;
    std::vector<Natural> out(checked_coeff_count(d1, m), Natural(0));
    std::vector<u32> a(m, 0);
    for (size_t idx = 0; idx < c.size(); ++idx) {
        if (!c[idx].is_zero()) {
            size_t j = 0, stride = 1;
            for (u32 v = 0; v < m; ++v) {
                j += (size_t)a[v] * stride;
                stride *= d1;
            }
            out[j] = c[idx];
        }
        for (u32 v = 0; v < m; ++v) {
            if (++a[v] < d0) break;
            a[v] = 0;
        }
    }
    return out;
}

// Core of the A pipeline, shared by mme_a and the theorem-1.1 driver so the
// per-prime sessions and point data are built once for all homogeneous
// components. Returns values[comp][point] in Z/n.
std::vector<std::vector<Natural>> mme_a_components(const std::vector<LiftedComponent>& comps,
                                                   u32 m, u32 d, const Natural& n,
                                                   const std::vector<ModPoint>& points,
                                                   const MmeAConfig& cfg) {
    const size_t N = points.size();

    // Steps 1-2: natural lifts of the points (coefficients arrive lifted).
    std::vector<std::vector<Natural>> lifted(N);
    for (size_t i = 0; i < N; ++i) {
        if (points[i].size() != m) throw UsageError("mme_a: point dimension mismatch");
        lifted[i].resize(m);
        for (u32 j = 0; j < m; ++j) lifted[i][j] = points[i][j] % n;
    }

    // Step 3: M = d^m r^{dm} and the AP prime search, padding d upward when
    // the search comes back empty (padding never changes values).
    u32 dd = std::max<u32>(d, 5);
    const u32 dd_cap = dd + cfg.pad_limit;
    ApPrimeResult ap;
    Natural M;
    while (true) {
        M = pow(Natural(dd), m) * pow(n, (u64)dd * m);
        try {
            ap = ap_prime_search(Natural(dd), M);
            break;
        } catch (const NoProgressionError&) {
            if (++dd > dd_cap) throw;
        }
    }
    const u64 dt = ap.dTilde.to_u64();
    const size_t k = ap.primes.size();

    std::vector<std::vector<Natural>> padded;
    padded.reserve(comps.size());
    for (const auto& c : comps) padded.push_back(reshape_coeffs(c.coeffs, m, d, dd));

    // Steps 4-5: per-prime reduction and Kakeya-set evaluation.
    // residues[comp][pt][prime]
    std::vector<std::vector<std::vector<Natural>>> residues(
        comps.size(), std::vector<std::vector<Natural>>(N, std::vector<Natural>(k)));

    for (size_t j = 0; j < k; ++j) {
        const u64 p = ap.primes[j].to_u64();
        MME_ASSERT(p % dt == 1 && p >= 2 * dt + 1);
        const u32 u = (u32)((p - 1) / dt - 1);
        auto K = build_kakeya(p, u, m);
        NiceFieldSession session(K, dd);

        std::vector<std::vector<u64>> pts(N, std::vector<u64>(m));
        for (size_t i = 0; i < N; ++i)
            for (u32 v = 0; v < m; ++v)
                pts[i][v] = mpz_fdiv_ui(lifted[i][v].mpz().get_mpz_t(), p);
        session.set_points(pts);

        std::vector<u64> c64(padded.empty() ? 0 : padded[0].size());
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            for (size_t t = 0; t < padded[ci].size(); ++t)
                c64[t] = mpz_fdiv_ui(padded[ci][t].mpz().get_mpz_t(), p);
            auto vals = session.eval_component(c64, comps[ci].deg);
            for (size_t i = 0; i < N; ++i) residues[ci][i][j] = Natural(vals[i]);
        }
    }

    // Steps 6-7: per-point CRT and reduction mod n.
    PreparedCrt crt(ap.primes);
    std::vector<std::vector<Natural>> out(comps.size(), std::vector<Natural>(N));
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        for (size_t i = 0; i < N; ++i) {
            Natural Q = crt.combine(residues[ci][i]);
            MME_ASSERT(Q < M);  // lift-magnitude soundness
#ifndef MME_UNCHECKED
            for (size_t j = 0; j < k; ++j)
                MME_ASSERT(Q % ap.primes[j] == residues[ci][i][j]);  // per-prime consistency
#endif
            out[ci][i] = Q % n;
        }
    }
    return out;
}

std::vector<LiftedComponent> lift_components(const MultiPoly& f, bool require_homogeneous) {
    auto comps = homogeneous_components(f);
    if (require_homogeneous && comps.size() != 1)
        throw UsageError("mme_a: input polynomial must be homogeneous");
    std::vector<LiftedComponent> out;
    out.reserve(comps.size());
    for (auto& [deg, poly] : comps) out.push_back({deg, lift_to_integers(poly).coeffs});
    return out;
}

}  // namespace

std::vector<Natural> mme_a(const MultiPoly& f, const std::vector<ModPoint>& points,
                           const Natural& r, const MmeAConfig& cfg) {
    if (f.is_ext()) throw UsageError("mme_a: use mme_a_ext for extension rings");
    if (!(f.modulus()->n() == r)) throw UsageError("mme_a: r must match f's ring size");
    auto comps = lift_components(f, true);
    auto vals = mme_a_components(comps, f.m(), f.d(), r, points, cfg);
    return vals[0];
}

std::vector<Natural> evaluate_theorem1(const MultiPoly& f, const std::vector<ModPoint>& points,
                                       const MmeAConfig& cfg) {
    if (f.is_ext()) throw UsageError("evaluate_theorem1: modular entry point");
    const Natural& n = f.modulus()->n();
    auto comps = lift_components(f, false);
    auto vals = mme_a_components(comps, f.m(), f.d(), n, points, cfg);
    std::vector<Natural> out(points.size(), Natural(0));
    for (const auto& comp_vals : vals)
        for (size_t i = 0; i < out.size(); ++i) out[i] = f.modulus()->add(out[i], comp_vals[i]);
    return out;
}

namespace {

// Shared by mme_a_ext and the extension-ring theorem-1.1 driver.
std::vector<ExtElem> mme_a_ext_components(const MultiPoly& f, const std::vector<ExtPoint>& points,
                                          bool require_homogeneous, const MmeAConfig& cfg) {
    if (!f.is_ext()) throw UsageError("mme_a_ext: extension-ring input required");
    const auto& ring = *f.ext_ring();
    const Natural& r = ring.base()->n();
    const u32 m = f.m(), d = f.d(), e = ring.degree();
    const size_t N = points.size();

    auto comps = homogeneous_components(f);
    if (require_homogeneous && comps.size() != 1)
        throw UsageError("mme_a_ext: input polynomial must be homogeneous");

    // M = d^m (e(r-1))^((d-1)m+1) + 1 bounds every z-coefficient of the
    // lifted values; r' = M^((e-1)dm+1) bounds their evaluation at z = M.
    const Natural M = pow(Natural(d), m) * pow(Natural(e) * (r - Natural(1)), (u64)(d - 1) * m + 1) +
                      Natural(1);
    const u64 rprime_exp = (u64)(e - 1) * d * m + 1;
    const Natural rprime = pow(M, rprime_exp);
    auto mod_rp = make_modulus(rprime, 1);

    // z = M powers mod r'
    std::vector<Natural> Mpow(e, Natural(1));
    for (u32 i = 1; i < e; ++i) Mpow[i] = (Mpow[i - 1] * M) % rprime;

    auto collapse = [&](const ExtElem& x) {
        Natural acc(0);
        for (u32 i = 0; i < e; ++i) acc = mod_rp->add(acc, mod_rp->mul(x.c[i], Mpow[i]));
        return acc;
    };

    // Steps 1-2: lift and collapse the components and the points.
    std::vector<LiftedComponent> lifted;
    lifted.reserve(comps.size());
    for (auto& [deg, poly] : comps) {
        LiftedComponent lc;
        lc.deg = deg;
        lc.coeffs.reserve(poly.coeff_count());
        for (const auto& x : poly.ext_coeffs()) lc.coeffs.push_back(collapse(x));
        lifted.push_back(std::move(lc));
    }
    std::vector<ModPoint> pts(N, ModPoint(m));
    for (size_t i = 0; i < N; ++i) {
        if (points[i].size() != m) throw UsageError("mme_a_ext: point dimension mismatch");
        for (u32 j = 0; j < m; ++j) pts[i][j] = collapse(points[i][j]);
    }

    // Step 3: the whole family of components through one mme_a pass over Z/r'.
    auto vals = mme_a_components(lifted, m, d, rprime, pts, cfg);

    // Step 4: base-M digit extraction and reduction mod (r, E).
    std::vector<ExtElem> out(N, ring.zero());
    for (size_t ci = 0; ci < vals.size(); ++ci) {
        for (size_t i = 0; i < N; ++i) {
            Natural v = vals[ci][i];
            std::vector<Natural> digits;
            digits.reserve(rprime_exp);
            while (!v.is_zero()) {
                auto [q2, rem] = divmod(v, M);
                MME_ASSERT(rem < M);
                digits.push_back(rem);
                v = q2;
            }
            MME_ASSERT(digits.size() <= rprime_exp);
            out[i] = ring.add(out[i], ring.from_coeffs(std::move(digits)));
        }
    }
    return out;
}

}  // namespace

std::vector<ExtElem> mme_a_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                               const MmeAConfig& cfg) {
    return mme_a_ext_components(f, points, true, cfg);
}

std::vector<ExtElem> evaluate_theorem1_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                                           const MmeAConfig& cfg) {
    return mme_a_ext_components(f, points, false, cfg);
}

}  // namespace mme
