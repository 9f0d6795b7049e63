#ifndef MME_MME_A_HPP
#define MME_MME_A_HPP

#include "mme/multipoly.hpp"
#include "mme/primes.hpp"

namespace mme {

struct MmeAConfig {
    /// The AP prime search needs a sufficiently large degree bound; when it
    /// fails, the degree bound is padded upward (padding never changes
    /// values) up to this many steps past max(d, 5) before giving up.
    u32 pad_limit = 16;
};

/// Algorithm family A over Z/rZ: lift to Z, multimodular reduction through
/// primes = 1 (mod dTilde) from the AP search, per-prime Kakeya-set
/// evaluation, per-point Chinese remaindering, reduction mod r.
/// f must be homogeneous; r must equal f's ring size.
std::vector<Natural> mme_a(const MultiPoly& f, const std::vector<ModPoint>& points,
                           const Natural& r, const MmeAConfig& cfg = {});

/// Algorithm family A over (Z/rZ)[z]/(E): lift to Z[z], collapse z at the
/// huge evaluation point z = M modulo r' = M^((e-1)dm+1), run mme_a over
/// Z/r', recover the z-polynomial by base-M digit extraction, reduce mod
/// (r, E). f must be homogeneous.
std::vector<ExtElem> mme_a_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                               const MmeAConfig& cfg = {});

/// Driver: split an arbitrary polynomial into homogeneous components,
/// evaluate each with the A pipeline, and sum pointwise.
std::vector<Natural> evaluate_theorem1(const MultiPoly& f, const std::vector<ModPoint>& points,
                                       const MmeAConfig& cfg = {});
std::vector<ExtElem> evaluate_theorem1_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                                           const MmeAConfig& cfg = {});

}  // namespace mme

#endif
