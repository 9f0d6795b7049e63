#include "mme/primes.hpp"

#include "mme/errors.hpp"

namespace mme {

std::vector<u64> sieve_primes(u64 limit) {
    if (limit < 2) throw UsageError("sieve_primes: limit must be >= 2");
    if (limit > (u64(1) << 31)) throw ResourceError("sieve_primes: limit exceeds memory budget");
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> out;
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 n) { return (u64)((u128)a * b % n); }

u64 powmod_u64(u64 a, u64 e, u64 n) {
    u64 r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is exact for all n < 3.3 * 10^24, in particular < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const Natural& n) {
    if (!n.fits_u64())
        throw UnsupportedError("is_prime: values of 65+ bits are not supported (and never needed)");
    return is_prime_u64(n.to_u64());
}

std::vector<Natural> small_primes_exceeding(const Natural& M) {
    if (M < Natural(2)) throw UsageError("small_primes_exceeding: M must be >= 2");
    u64 limit = 16 * ceil_log2(M);
    if (limit < 3) limit = 3;
    auto primes = sieve_primes(limit);
    std::vector<Natural> out;
    Natural product(1);
    for (u64 p : primes) {
        out.emplace_back(p);
        product *= Natural(p);
        if (product > M) return out;
    }
    // the product of the primes up to 16 log2 M always exceeds M
    throw InternalError("small_primes_exceeding: prime prefix up to 16 log2 M did not exceed M");
}

ApPrimeResult ap_prime_search(const Natural& D, const Natural& M) {
    if (!D.fits_u64()) throw UnsupportedError("ap_prime_search: D exceeds 64 bits");
    const u64 d = D.to_u64();
    if (d < 5) throw UsageError("ap_prime_search: D must be >= 5");
    if (M < Natural(2)) throw UsageError("ap_prime_search: M must be >= 2");

    const Natural cap = pow(D * Natural(ceil_log2(M)), 3);
    const u64 cap64 = cap.fits_u64() ? cap.to_u64() : ~u64(0);
    const u64 lo = (4 * d + 4) / 5;  // ceil(0.8 D)

    for (u64 dt = d; dt >= lo; --dt) {
        std::vector<Natural> primes;
        Natural product(1);
        bool done = false;
        for (u64 k = 2;; ++k) {
            if (dt > (cap64 - 1) / k) break;  // 1 + k*dt would pass the cap
            u64 cand = 1 + k * dt;
            if (cand > cap64) break;
            if (!is_prime_u64(cand)) continue;
            primes.emplace_back(cand);
            product *= Natural(cand);
            if (product > M) {
                done = true;
                break;
            }
        }
        if (done) {
            ApPrimeResult res;
            res.dTilde = Natural(dt);
            res.primes = std::move(primes);
            res.product = std::move(product);
            return res;
        }
    }
    throw NoProgressionError(
        "ap_prime_search: exhausted the candidate cap (D log2 M)^3 for every common difference in "
        "[ceil(0.8 D), D]; increase D (pad the degree bound) and retry");
}

u32 log_star(const Natural& x) {
    if (x.is_zero()) throw UsageError("log_star: x must be >= 1");
    Natural cur = x;
    u32 c = 0;
    while (cur > Natural(1)) {
        cur = Natural(ceil_log2(cur));
        ++c;
    }
    return c;
}

Natural iterated_log(const Natural& x, u32 c) {
    if (x.is_zero()) throw UsageError("iterated_log: x must be >= 1");
    Natural cur = x;
    for (u32 i = 0; i < c; ++i) {
        if (cur <= Natural(1)) return Natural(0);
        cur = Natural(ceil_log2(cur));
    }
    return cur;
}

}  // namespace mme
