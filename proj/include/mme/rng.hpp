#ifndef MME_RNG_HPP
#define MME_RNG_HPP

#include <random>

#include "mme/natural.hpp"

namespace mme {

/// Deterministic random source: same seed, same stream, on every platform
/// (mt19937_64 is pinned by the standard).
class DetRng {
  public:
    explicit DetRng(u64 seed) : eng_(seed) {}

    u64 next_u64() { return eng_(); }

    u64 below_u64(u64 n) {
        // rejection sampling to stay unbiased
        u64 lim = ~u64(0) - ~u64(0) % n;
        u64 x;
        do {
            x = eng_();
        } while (x >= lim);
        return x % n;
    }

    /// Uniform Natural in [0, n).
    Natural below(const Natural& n) {
        if (n.fits_u64()) return Natural(below_u64(n.to_u64()));
        u64 bits = n.bit_length();
        u64 words = (bits + 63) / 64;
        while (true) {
            Natural x(0);
            for (u64 i = 0; i < words; ++i) x = x * Natural(u64(1) << 32) * Natural(u64(1) << 32) + Natural(eng_());
            // trim to the bit length
            Natural mask = pow(Natural(2), bits);
            x = x % mask;
            if (x < n) return x;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace mme

#endif
