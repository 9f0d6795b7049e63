#include "mme/multipoly.hpp"

#include "mme/kernels.hpp"

namespace mme {

namespace {
void compositions_rec(u32 m, u32 w, size_t pos, std::vector<u32>& cur, std::vector<ExpVec>& out) {
    if (pos + 1 == m) {
        cur[pos] = w;
        out.emplace_back(cur);
        return;
    }
    for (u32 v = 0; v <= w; ++v) {
        cur[pos] = v;
        compositions_rec(m, w - v, pos + 1, cur, out);
    }
}
}  // namespace

std::vector<ExpVec> exponents_upto(u32 m, u32 k) {
    std::vector<ExpVec> out;
    if (m == 0) {
        out.emplace_back(std::vector<u32>{});
        return out;
    }
    std::vector<u32> cur(m, 0);
    for (u32 w = 0; w <= k; ++w) compositions_rec(m, w, 0, cur, out);
    return out;
}

size_t checked_coeff_count(u32 d, u32 m) {
    if (d < 1) throw UsageError("degree bound d must be >= 1");
    size_t n = 1;
    for (u32 i = 0; i < m; ++i) {
        if (n > (size_t(1) << 31) / d) throw ResourceError("coefficient array d^m too large");
        n *= d;
    }
    return n;
}

std::vector<std::vector<Natural>> pascal_rows(u32 max_n) {
    std::vector<std::vector<Natural>> rows(max_n + 1);
    for (u32 n = 0; n <= max_n; ++n) {
        rows[n].assign(n + 1, Natural(1));
        for (u32 i = 1; i < n; ++i) rows[n][i] = rows[n - 1][i - 1] + rows[n - 1][i];
    }
    return rows;
}

MultiPoly MultiPoly::zero(u32 m, u32 d, PowerModulusPtr mod) {
    MultiPoly f;
    f.m_ = m;
    f.d_ = d;
    f.mod_ = std::move(mod);
    f.c_.assign(checked_coeff_count(d, m), Natural(0));
    return f;
}

MultiPoly MultiPoly::zero_ext(u32 m, u32 d, ExtRingCtxPtr ext) {
    MultiPoly f;
    f.m_ = m;
    f.d_ = d;
    f.ext_ = std::move(ext);
    f.ce_.assign(checked_coeff_count(d, m), f.ext_->zero());
    return f;
}

bool MultiPoly::is_zero() const {
    if (is_ext()) {
        for (const auto& x : ce_)
            if (!ext_->is_zero(x)) return false;
        return true;
    }
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<u64> MultiPoly::to_u64() const {
    if (is_ext() || !mod_->small()) throw UsageError("to_u64: needs a small modular ring");
    std::vector<u64> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].to_u64();
    return out;
}

Natural IntMultiPoly::eval(const std::vector<Natural>& point) const {
    if (point.size() != m) throw UsageError("IntMultiPoly::eval: dimension mismatch");
    // Horner along the last variable, recursively.
    std::vector<Natural> cur(coeffs);
    size_t block = cur.size();
    for (u32 v = m; v-- > 0;) {
        block /= d;
        const Natural& x = point[v];
        std::vector<Natural> next(block, Natural(0));
        for (size_t b = 0; b < block; ++b) {
            Natural acc(0);
            for (u32 i = d; i-- > 0;) acc = acc * x + cur[i * block + b];
            next[b] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur[0];
}

namespace {

// Horner along the last variable; generic over the two coefficient kinds.
template <class Elem, class MulAdd>
Elem eval_horner(const std::vector<Elem>& coeffs, u32 m, u32 d, const std::vector<Elem>& a,
                 const Elem& zero, MulAdd mul_add) {
    std::vector<Elem> cur(coeffs);
    size_t block = cur.size();
    for (u32 v = m; v-- > 0;) {
        block /= d;
        std::vector<Elem> next(block, zero);
        for (size_t b = 0; b < block; ++b) {
            Elem acc = zero;
            for (u32 i = d; i-- > 0;) acc = mul_add(acc, a[v], cur[i * block + b]);
            next[b] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur[0];
}

}  // namespace

Natural naive_eval(const MultiPoly& f, const ModPoint& a) {
    if (f.is_ext()) throw UsageError("naive_eval: extension-ring polynomial given a modular point");
    if (a.size() != f.m()) throw UsageError("naive_eval: dimension mismatch");
    const auto& mod = *f.modulus();
    if (f.m() == 0) return f.mod_coeffs()[0];
    if (mod.small()) {
        const auto& E = mod.engine();
        std::vector<u64> c64 = f.to_u64();
        std::vector<u64> pt(f.m());
        for (u32 j = 0; j < f.m(); ++j) pt[j] = E.reduce(a[j]);
        return Natural(kern::horner_eval(E, c64.data(), f.m(), f.d(), pt.data()));
    }
    return eval_horner<Natural>(
        f.mod_coeffs(), f.m(), f.d(), a, Natural(0),
        [&](const Natural& acc, const Natural& x, const Natural& c) { return mod.add(mod.mul(acc, x), c); });
}

ExtElem naive_eval_ext(const MultiPoly& f, const ExtPoint& a) {
    if (!f.is_ext()) throw UsageError("naive_eval_ext: modular polynomial given an extension point");
    if (a.size() != f.m()) throw UsageError("naive_eval_ext: dimension mismatch");
    const auto& R = *f.ext_ring();
    if (f.m() == 0) return f.ext_coeffs()[0];
    return eval_horner<ExtElem>(
        f.ext_coeffs(), f.m(), f.d(), a, R.zero(),
        [&](const ExtElem& acc, const ExtElem& x, const ExtElem& c) { return R.add(R.mul(acc, x), c); });
}

std::vector<Natural> naive_eval_batch(const MultiPoly& f, const std::vector<ModPoint>& points) {
    std::vector<Natural> out;
    out.reserve(points.size());
    if (!f.is_ext() && f.modulus()->small() && f.m() > 0) {
        const auto& E = f.modulus()->engine();
        std::vector<u64> c64 = f.to_u64();
        std::vector<u64> pt(f.m());
        for (const auto& a : points) {
            if (a.size() != f.m()) throw UsageError("naive_eval: dimension mismatch");
            for (u32 j = 0; j < f.m(); ++j) pt[j] = E.reduce(a[j]);
            out.emplace_back(kern::horner_eval(E, c64.data(), f.m(), f.d(), pt.data()));
        }
        return out;
    }
    for (const auto& a : points) out.push_back(naive_eval(f, a));
    return out;
}

std::vector<ExtElem> naive_eval_ext_batch(const MultiPoly& f, const std::vector<ExtPoint>& points) {
    std::vector<ExtElem> out;
    out.reserve(points.size());
    for (const auto& a : points) out.push_back(naive_eval_ext(f, a));
    return out;
}

MultiPoly hasse_derivative(const MultiPoly& f, const ExpVec& e) {
    if (e.size() != f.m()) throw UsageError("hasse_derivative: exponent dimension mismatch");
    const u32 m = f.m(), d = f.d();
    MultiPoly out = f.is_ext() ? MultiPoly::zero_ext(m, d, f.ext_ring()) : MultiPoly::zero(m, d, f.modulus());
    for (u32 j = 0; j < m; ++j)
        if (e.e[j] >= d) return out;  // derivative order beyond the degree box

    auto rows = pascal_rows(d == 0 ? 0 : d - 1);
    const Natural& n = f.is_ext() ? f.ext_ring()->base()->n() : f.modulus()->n();

    std::vector<u32> a(m);
    const size_t total = f.coeff_count();
    for (size_t idx = 0; idx < total; ++idx) {
        unflatten(idx, d, m, a);
        bool ok = true;
        for (u32 j = 0; j < m; ++j)
            if (a[j] < e.e[j]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Natural binom(1);
        for (u32 j = 0; j < m; ++j) binom *= rows[a[j]][e.e[j]];
        Natural scalar = binom % n;
        if (scalar.is_zero()) continue;

        std::vector<u32> shifted(m);
        for (u32 j = 0; j < m; ++j) shifted[j] = a[j] - e.e[j];
        size_t out_idx = flat_index(shifted, d);
        if (f.is_ext()) {
            const auto& R = *f.ext_ring();
            if (R.is_zero(f.ext_coeffs()[idx])) continue;
            out.ext_coeffs()[out_idx] = R.scalar_mul(f.ext_coeffs()[idx], scalar);
        } else {
            out.mod_coeffs()[out_idx] = f.modulus()->mul(f.mod_coeffs()[idx], scalar);
        }
    }
    return out;
}

std::map<ExpVec, MultiPoly> hasse_all_upto(const MultiPoly& f, u32 k) {
    std::map<ExpVec, MultiPoly> out;
    for (const auto& e : exponents_upto(f.m(), k)) out.emplace(e, hasse_derivative(f, e));
    return out;
}

std::vector<std::pair<u64, MultiPoly>> homogeneous_components(const MultiPoly& f) {
    const u32 m = f.m(), d = f.d();
    const u64 max_deg = (u64)(d - 1) * m;
    std::vector<bool> used(max_deg + 1, false);
    std::vector<MultiPoly> comp;
    comp.reserve(max_deg + 1);
    for (u64 D = 0; D <= max_deg; ++D)
        comp.push_back(f.is_ext() ? MultiPoly::zero_ext(m, d, f.ext_ring())
                                  : MultiPoly::zero(m, d, f.modulus()));

    std::vector<u32> a(m);
    for (size_t idx = 0; idx < f.coeff_count(); ++idx) {
        u64 w = 0;
        unflatten(idx, d, m, a);
        for (u32 j = 0; j < m; ++j) w += a[j];
        if (f.is_ext()) {
            if (f.ext_ring()->is_zero(f.ext_coeffs()[idx])) continue;
            comp[w].ext_coeffs()[idx] = f.ext_coeffs()[idx];
        } else {
            if (f.mod_coeffs()[idx].is_zero()) continue;
            comp[w].mod_coeffs()[idx] = f.mod_coeffs()[idx];
        }
        used[w] = true;
    }

    std::vector<std::pair<u64, MultiPoly>> out;
    for (u64 D = 0; D <= max_deg; ++D)
        if (used[D]) out.emplace_back(D, std::move(comp[D]));
    if (out.empty()) out.emplace_back(0, std::move(comp[0]));  // zero polynomial
    return out;
}

std::optional<u64> homogeneous_degree(const MultiPoly& f) {
    auto comps = homogeneous_components(f);
    if (comps.size() != 1) return std::nullopt;
    return comps[0].first;
}

IntMultiPoly lift_to_integers(const MultiPoly& f) {
    if (f.is_ext()) throw UsageError("lift_to_integers: modular rings only");
    IntMultiPoly F;
    F.m = f.m();
    F.d = f.d();
    F.coeffs = f.mod_coeffs();
    return F;
}

MultiPoly reduce_mod(const IntMultiPoly& F, PowerModulusPtr mod) {
    MultiPoly f = MultiPoly::zero(F.m, F.d, std::move(mod));
    for (size_t i = 0; i < F.coeffs.size(); ++i) f.set_coeff(i, F.coeffs[i]);
    return f;
}

}  // namespace mme
