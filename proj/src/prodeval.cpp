#include "mme/prodeval.hpp"

#include <set>

#include "mme/kernels.hpp"

namespace mme {

namespace {

void grid_rec_big(const PowerModulus& mod, const Natural* coeffs, u32 m, u32 d,
                  const std::vector<Natural>& S, Natural* out) {
    if (m == 0) {
        out[0] = coeffs[0];
        return;
    }
    size_t block = 1, outblock = 1;
    for (u32 j = 0; j + 1 < m; ++j) {
        block *= d;
        outblock *= S.size();
    }
    std::vector<Natural> sub(block);
    for (size_t ai = 0; ai < S.size(); ++ai) {
        const Natural& x = S[ai];
        for (size_t b = 0; b < block; ++b) sub[b] = coeffs[(size_t)(d - 1) * block + b];
        for (u32 i = d - 1; i-- > 0;) {
            const Natural* row = coeffs + (size_t)i * block;
            for (size_t b = 0; b < block; ++b) sub[b] = mod.add(mod.mul(sub[b], x), row[b]);
        }
        grid_rec_big(mod, sub.data(), m - 1, d, S, out + ai * outblock);
    }
}

}  // namespace

GridEvaluations product_set_eval(const MultiPoly& f, const std::vector<Natural>& S) {
    if (f.is_ext()) throw UsageError("product_set_eval: modular rings only");
    if (S.empty()) throw UsageError("product_set_eval: S must be nonempty");
    {
        std::set<Natural> seen(S.begin(), S.end());
        if (seen.size() != S.size()) throw UsageError("product_set_eval: S elements must be distinct");
    }
    const auto& mod = *f.modulus();
    GridEvaluations g;
    g.S = S;
    g.m = f.m();
    size_t total = 1;
    for (u32 j = 0; j < f.m(); ++j) {
        if (total > (size_t(1) << 31) / S.size()) throw ResourceError("product grid |S|^m too large");
        total *= S.size();
    }
    g.values.assign(total, Natural(0));

    if (mod.small()) {
        std::vector<u64> s64(S.size());
        for (size_t i = 0; i < S.size(); ++i) s64[i] = S[i].to_u64();
        std::vector<u64> out;
        kern::product_grid(mod.engine(), f.to_u64(), f.m(), f.d(), s64, out);
        for (size_t i = 0; i < out.size(); ++i) g.values[i] = Natural(out[i]);
    } else {
        grid_rec_big(mod, f.mod_coeffs().data(), f.m(), f.d(), S, g.values.data());
    }
    return g;
}

Natural taylor_correction(const std::map<ExpVec, Natural>& derivs_at_b, const ModPoint& a,
                          const ModPoint& b, const PowerModulus& mod) {
    if (a.size() != b.size()) throw UsageError("taylor_correction: point dimension mismatch");
    const u32 m = (u32)a.size();
    const Natural& r = mod.r();

    std::vector<Natural> diff(m);
    for (u32 i = 0; i < m; ++i) {
        diff[i] = mod.sub(mod.reduce(a[i]), mod.reduce(b[i]));
        if (!(diff[i] % r).is_zero())
            throw UsageError("taylor_correction: coordinate " + std::to_string(i) +
                             " of a-b is not divisible by r");
    }

    // power tables per coordinate, up to the largest exponent used
    std::vector<u32> max_e(m, 0);
    for (const auto& [e, v] : derivs_at_b) {
        if (e.size() != m) throw UsageError("taylor_correction: exponent dimension mismatch");
        for (u32 i = 0; i < m; ++i) max_e[i] = std::max(max_e[i], e.e[i]);
    }
    std::vector<std::vector<Natural>> pows(m);
    for (u32 i = 0; i < m; ++i) {
        pows[i].assign(max_e[i] + 1, Natural(1));
        for (u32 j = 1; j <= max_e[i]; ++j) pows[i][j] = mod.mul(pows[i][j - 1], diff[i]);
    }

    Natural acc(0);
    for (const auto& [e, v] : derivs_at_b) {
        Natural term = mod.reduce(v);
        for (u32 i = 0; i < m; ++i)
            if (e.e[i]) term = mod.mul(term, pows[i][e.e[i]]);
        acc = mod.add(acc, term);
    }
    return acc;
}

}  // namespace mme
