#ifndef MME_PRIMES_HPP
#define MME_PRIMES_HPP

#include <vector>

#include "mme/natural.hpp"

namespace mme {

/// Output of ap_prime_search(D, M): a common difference dTilde in
/// [ceil(0.8 D), D] and distinct primes p = 1 (mod dTilde), each
/// p >= 2*dTilde + 1 and p <= (D ceil(log2 M))^3, with product > M.
struct ApPrimeResult {
    Natural dTilde;
    std::vector<Natural> primes;  // ascending
    Natural product;
};

/// Exactly the primes <= limit, ascending (Sieve of Eratosthenes).
std::vector<u64> sieve_primes(u64 limit);

/// Deterministic primality for n < 2^64 (Miller-Rabin with a witness set
/// that is exact below 2^64); larger inputs are rejected with
/// UnsupportedError. All primes the evaluation algorithms need are far below
/// the 64-bit range.
bool is_prime(const Natural& n);
bool is_prime_u64(u64 n);

/// The minimal ascending prefix of the primes whose product exceeds M.
/// Every returned prime is <= 16 ceil(log2 M).
std::vector<Natural> small_primes_exceeding(const Natural& M);

/// Deterministic search for primes in an arithmetic progression: tries
/// dTilde = D, D-1, ..., ceil(0.8 D); for each, walks candidates
/// 1 + k*dTilde (k = 2, 3, ...) up to the cap (D ceil(log2 M))^3,
/// accumulating primes until their product exceeds M. The first dTilde that
/// succeeds wins. Throws NoProgressionError if every dTilde exhausts its cap.
ApPrimeResult ap_prime_search(const Natural& D, const Natural& M);

/// Smallest c >= 0 with log2 applied c times to x giving a value <= 1,
/// computed by iterating ceil(log2).
u32 log_star(const Natural& x);

/// ceil(log2) applied c times (values at or below 1 stay put as 1 -> 0).
Natural iterated_log(const Natural& x, u32 c);

}  // namespace mme

#endif
