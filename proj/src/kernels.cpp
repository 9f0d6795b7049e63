#include "mme/kernels.hpp"

namespace mme::kern {

u64 horner_eval(const ModEngine& E, const u64* coeffs, u32 m, u32 d, const u64* point) {
    if (m == 0) return coeffs[0];
    if (m == 1) {
        u64 acc = coeffs[d - 1];
        for (u32 i = d - 1; i-- > 0;) acc = E.add(E.mul(acc, point[0]), coeffs[i]);
        return acc;
    }
    size_t block = 1;
    for (u32 j = 0; j + 1 < m; ++j) block *= d;
    const u64 x = point[m - 1];
    std::vector<u64> sub(coeffs + (size_t)(d - 1) * block, coeffs + (size_t)d * block);
    for (u32 i = d - 1; i-- > 0;) {
        const u64* row = coeffs + (size_t)i * block;
        for (size_t b = 0; b < block; ++b) sub[b] = E.add(E.mul(sub[b], x), row[b]);
    }
    return horner_eval(E, sub.data(), m - 1, d, point);
}

namespace {
void grid_rec(const ModEngine& E, const u64* coeffs, u32 m, u32 d, const u64* s, size_t ns, u64* out) {
    if (m == 0) {
        out[0] = coeffs[0];
        return;
    }
    size_t block = 1, outblock = 1;
    for (u32 j = 0; j + 1 < m; ++j) {
        block *= d;
        outblock *= ns;
    }
    std::vector<u64> sub(block);
    for (size_t ai = 0; ai < ns; ++ai) {
        const u64 x = s[ai];
        const u64* top = coeffs + (size_t)(d - 1) * block;
        for (size_t b = 0; b < block; ++b) sub[b] = top[b];
        for (u32 i = d - 1; i-- > 0;) {
            const u64* row = coeffs + (size_t)i * block;
            for (size_t b = 0; b < block; ++b) sub[b] = E.add(E.mul(sub[b], x), row[b]);
        }
        grid_rec(E, sub.data(), m - 1, d, s, ns, out + ai * outblock);
    }
}
}  // namespace

void product_grid(const ModEngine& E, const std::vector<u64>& coeffs, u32 m, u32 d,
                  const std::vector<u64>& S, std::vector<u64>& out) {
    size_t total = 1;
    for (u32 j = 0; j < m; ++j) total *= S.size();
    out.assign(total, 0);
    grid_rec(E, coeffs.data(), m, d, S.data(), S.size(), out.data());
}

u64 product_grid_cost(u32 m, u32 d, u64 ns) {
    // sum_{i=1..m} ns^i * d^(m-i+1); saturates at 2^62.
    const u64 CAP = u64(1) << 62;
    u64 total = 0;
    for (u32 i = 1; i <= m; ++i) {
        u64 term = 1;
        for (u32 j = 0; j < i; ++j) {
            if (term > CAP / ns) return CAP;
            term *= ns;
        }
        for (u32 j = 0; j < m - i + 1; ++j) {
            if (term > CAP / d) return CAP;
            term *= d;
        }
        if (total > CAP - term) return CAP;
        total += term;
    }
    return total;
}

std::vector<std::vector<u64>> binom_table(u32 d, const ModEngine& E) {
    std::vector<std::vector<u64>> out(d, std::vector<u64>(d, 0));
    for (u32 a = 0; a < d; ++a) {
        out[a][0] = 1 % E.n();
        for (u32 b = 1; b <= a; ++b)
            out[a][b] = a == b ? 1 % E.n() : E.add(out[a - 1][b - 1], out[a - 1][b]);
    }
    return out;
}

std::vector<u64> hasse_derivative(const ModEngine& E, const std::vector<u64>& coeffs, u32 m, u32 d,
                                  const std::vector<u32>& e,
                                  const std::vector<std::vector<u64>>& binom) {
    std::vector<u64> out(coeffs.size(), 0);
    for (u32 j = 0; j < m; ++j)
        if (e[j] >= d) return out;
    std::vector<u32> a(m, 0);
    for (size_t idx = 0; idx < coeffs.size(); ++idx) {
        bool ok = true;
        for (u32 j = 0; j < m; ++j)
            if (a[j] < e[j]) {
                ok = false;
                break;
            }
        if (ok && coeffs[idx] != 0) {
            u64 scalar = 1 % E.n();
            for (u32 j = 0; j < m; ++j)
                if (e[j]) scalar = E.mul(scalar, binom[a[j]][e[j]]);
            if (scalar != 0) {
                size_t out_idx = 0, stride = 1;
                for (u32 j = 0; j < m; ++j) {
                    out_idx += (size_t)(a[j] - e[j]) * stride;
                    stride *= d;
                }
                out[out_idx] = E.mul(coeffs[idx], scalar);
            }
        }
        for (u32 j = 0; j < m; ++j) {
            if (++a[j] < d) break;
            a[j] = 0;
        }
    }
    return out;
}

}  // namespace mme::kern
