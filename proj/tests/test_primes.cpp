#include <mme/primes.hpp>
#include <mme/rng.hpp>

#include "testutil.hpp"

using namespace mme;

static void test_sieve() {
    testutil::set_context("sieve");
    auto p20 = sieve_primes(20);
    CHECK(p20 == (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19}));
    CHECK(sieve_primes(2) == (std::vector<u64>{2}));
    CHECK_EQ(sieve_primes(1000000).size(), 78498u);
    CHECK_THROWS(sieve_primes(1), UsageError);
}

static void test_is_prime() {
    testutil::set_context("is-prime");
    CHECK(!is_prime(Natural(561)));  // Carmichael
    CHECK(is_prime(Natural((u64(1) << 31) - 1)));
    CHECK(!is_prime(Natural(0)));
    CHECK(!is_prime(Natural(1)));
    CHECK(is_prime(Natural(2)));
    CHECK_THROWS(is_prime(pow(Natural(2), 65)), UnsupportedError);

    // exhaustive agreement with the sieve
    auto primes = sieve_primes(100000);
    size_t pi = 0;
    for (u64 n = 2; n <= 100000; ++n) {
        bool in_sieve = pi < primes.size() && primes[pi] == n;
        if (in_sieve) ++pi;
        if (is_prime_u64(n) != in_sieve) {
            CHECK(false);
            break;
        }
    }
}

static void test_small_primes_exceeding() {
    testutil::set_context("small-primes");
    auto r2 = small_primes_exceeding(Natural(2));
    CHECK(r2 == (std::vector<Natural>{Natural(2), Natural(3)}));

    auto r100 = small_primes_exceeding(Natural(100));
    CHECK(r100 == (std::vector<Natural>{Natural(2), Natural(3), Natural(5), Natural(7)}));

    Natural M(1000000);
    auto r1m = small_primes_exceeding(M);
    Natural prod(1);
    u64 bound = 16 * ceil_log2(M);
    for (const auto& p : r1m) {
        CHECK(p <= Natural(bound));
        prod *= p;
    }
    CHECK(prod > M);
    // minimality: dropping the largest prime must not exceed M
    CHECK(!(prod / r1m.back() > M));
}

static void test_prime_product_lemma() {
    testutil::set_context("16logN-lemma");
    // product of the primes <= 16 log2 N exceeds N, sampled over [2, 10^6]
    auto primes = sieve_primes(16 * 20);
    DetRng rng(83);
    for (int t = 0; t < 1000; ++t) {
        u64 N = 2 + rng.below_u64(999999);
        u64 limit = 16 * ceil_log2(Natural(N));
        Natural prod(1);
        for (u64 p : primes) {
            if (p > limit) break;
            prod *= Natural(p);
        }
        CHECK(prod > Natural(N));
    }
}

static void test_ap_prime_search_example() {
    testutil::set_context("ap-search-example");
    // D = 10, M = 50: dTilde = 10 wins with primes 31, 41
    auto res = ap_prime_search(Natural(10), Natural(50));
    CHECK_EQ(res.dTilde, Natural(10));
    CHECK(res.primes == (std::vector<Natural>{Natural(31), Natural(41)}));
    CHECK_EQ(res.product, Natural(31 * 41));

    CHECK_THROWS(ap_prime_search(Natural(4), Natural(50)), UsageError);
}

// independent re-check of all four ApPrimeResult invariants, with primality
// retested by trial division
static void check_ap_invariants(const Natural& D, const Natural& M) {
    auto res = ap_prime_search(D, M);
    u64 d = D.to_u64();
    u64 dt = res.dTilde.to_u64();
    CHECK(dt >= (4 * d + 4) / 5 && dt <= d);
    Natural cap = pow(D * Natural(ceil_log2(M)), 3);
    Natural prod(1);
    Natural last(0);
    for (const auto& p : res.primes) {
        CHECK(p > last);
        last = p;
        u64 pv = p.to_u64();
        bool prime = pv >= 2;
        for (u64 q = 2; q * q <= pv; ++q)
            if (pv % q == 0) {
                prime = false;
                break;
            }
        CHECK(prime);
        CHECK(pv % dt == 1);
        CHECK(pv >= 2 * dt + 1);
        CHECK(p <= cap);
        prod *= p;
    }
    CHECK(prod > M);
    CHECK_EQ(prod, res.product);
}

static void test_ap_prime_search_invariants() {
    testutil::set_context("ap-search-invariants");
    check_ap_invariants(Natural(100), pow(Natural(2), 128));
    check_ap_invariants(Natural(20), pow(Natural(2), 64));
    check_ap_invariants(Natural(7), Natural(1000));

    // determinism across calls
    auto a = ap_prime_search(Natural(50), pow(Natural(2), 100));
    auto b = ap_prime_search(Natural(50), pow(Natural(2), 100));
    CHECK(a.dTilde == b.dTilde && a.primes == b.primes && a.product == b.product);
}

static void test_log_star() {
    testutil::set_context("log-star");
    CHECK_EQ(log_star(Natural(1)), 0u);
    CHECK_EQ(log_star(Natural(2)), 1u);
    CHECK_EQ(log_star(Natural(16)), 3u);
    CHECK_EQ(log_star(pow(Natural(2), 65536)), 5u);
    CHECK_EQ(iterated_log(Natural(65536), 1), Natural(16));
    CHECK_EQ(iterated_log(Natural(65536), 2), Natural(4));
    CHECK_EQ(iterated_log(Natural(65536), 10), Natural(0));
}

int main() {
    test_sieve();
    test_is_prime();
    test_small_primes_exceeding();
    test_prime_product_lemma();
    test_ap_prime_search_example();
    test_ap_prime_search_invariants();
    test_log_star();
    return testutil::finish("test_primes");
}
