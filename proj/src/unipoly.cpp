#include "mme/unipoly.hpp"

namespace mme {

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& f, const UniPoly& g) {
    if (g.degree() < 1) throw UsageError("poly_mod: divisor must have degree >= 1");
    if (!g.coeffs().back().is_one()) throw UsageError("poly_mod: divisor must be monic");
    const auto& mod = g.modulus();
    std::vector<Natural> rem = f.coeffs();
    const int dg = g.degree();
    int dr = f.degree();
    if (dr < dg) return {UniPoly(mod), UniPoly(mod, std::move(rem))};

    std::vector<Natural> quot(dr - dg + 1, Natural(0));
    for (int k = dr; k >= dg; --k) {
        Natural lead = rem[k];
        if (lead.is_zero()) continue;
        quot[k - dg] = lead;
        for (int i = 0; i <= dg; ++i) {
            size_t idx = k - dg + i;
            rem[idx] = mod->sub(rem[idx], mod->mul(lead, g.coeffs()[i]));
        }
    }
    rem.resize(dg);
    return {UniPoly(mod, std::move(quot)), UniPoly(mod, std::move(rem))};
}

UniPoly poly_mod(const UniPoly& f, const UniPoly& g) { return poly_divmod(f, g).second; }

UniPoly taylor_shift(const UniPoly& p, const Natural& c) {
    const auto& mod = p.modulus();
    // Horner: q := q*(x+c) + p_i from the top coefficient down.
    std::vector<Natural> q;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        q.insert(q.begin(), Natural(0));
        for (size_t j = 0; j + 1 < q.size(); ++j) q[j] = mod->add(q[j], mod->mul(q[j + 1], c));
        q[0] = mod->add(q[0], p.coeffs()[i]);
    }
    return UniPoly(mod, std::move(q));
}

UniPoly hasse_deriv_1d(const UniPoly& p, u64 j) {
    const auto& mod = p.modulus();
    if ((u64)(p.degree() + 1) <= j) return UniPoly(mod);
    size_t n = p.coeffs().size();
    // Pascal row per output coefficient: C(i, j) for i = j .. deg
    std::vector<Natural> out(n - j, Natural(0));
    // iterative binomial C(i, j): C(j, j) = 1; C(i+1, j) = C(i, j) * (i+1) / (i+1-j)
    Natural binom(1);
    for (size_t i = j; i < n; ++i) {
        out[i - j] = mod->mul(p.coeffs()[i], binom % mod->n());
        binom = (binom * Natural(i + 1)) / Natural(i + 1 - j);
    }
    return UniPoly(mod, std::move(out));
}

}  // namespace mme
