#include "mme/fq.hpp"

#include "mme/primes.hpp"

namespace mme {

namespace {

// q-1 = prod of these prime factors (distinct)
std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 find_primitive_root(u64 q, const ModEngine& eng) {
    auto factors = distinct_prime_factors(q - 1);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (u64 f : factors)
            if (eng.pow(g, (q - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InternalError("find_primitive_root: none found (q not prime?)");
}

constexpr u64 kTableLimit = u64(1) << 22;

}  // namespace

FqTables::FqTables(u64 q) : q_(q), eng_(q) {
    if (!is_prime_u64(q)) throw UsageError("FqTables: q must be prime");
    if (q <= kTableLimit) {
        g_ = find_primitive_root(q, eng_);
        expt_.resize(q - 1);
        logt_.assign(q, 0);
        u64 x = 1;
        for (u64 i = 0; i < q - 1; ++i) {
            expt_[i] = (u32)x;
            logt_[x] = (u32)i;
            x = eng_.mul(x, g_);
        }
    }
}

u64 binom_mod_p(u64 a, u64 b, u64 q) {
    if (b == 0) return 1;
    if (a < b) return 0;
    ModEngine eng(q);
    u64 result = 1;
    while (a > 0 || b > 0) {
        u64 ad = a % q, bd = b % q;
        if (bd > ad) return 0;
        // C(ad, bd) mod q by the multiplicative formula; bd < q so the
        // denominator is invertible
        u64 num = 1, den = 1;
        if (bd > ad - bd) bd = ad - bd;
        for (u64 i = 0; i < bd; ++i) {
            num = eng.mul(num, (ad - i) % q);
            den = eng.mul(den, (i + 1) % q);
        }
        result = eng.mul(result, eng.mul(num, eng.pow(den, q - 2)));
        a /= q;
        b /= q;
    }
    return result;
}

}  // namespace mme
