#ifndef MME_MME_B_HPP
#define MME_MME_B_HPP

#include <optional>

#include "mme/multipoly.hpp"

namespace mme {

/// Base algorithm over Z/r^s: evaluate all Hasse derivatives of order < s on
/// the small-lift grid [0,r)^m, then per point reduce coordinates mod r and
/// apply the Taylor correction. When the grid would cost more than direct
/// per-point evaluation of the derivatives, the evaluations are computed
/// directly instead (the outputs are identical either way).
std::vector<Natural> mme_product_set(const MultiPoly& f, const std::vector<ModPoint>& points,
                                     const Natural& r, u32 s);

/// Recursive algorithm over Z/r^s: depth t = 0 delegates to
/// mme_product_set; otherwise the derivative lifts are solved modulo the
/// prime powers p_j^m for the minimal prime prefix with product > d*r^d,
/// recursing at depth t-1, then recombined per point by CRT and finished
/// with the Taylor correction.
std::vector<Natural> mme_b(const MultiPoly& f, const std::vector<ModPoint>& points,
                           const Natural& r, u32 s, u32 t);

/// Extension-ring variant over (Z/rZ)[z]/(E): lift to Z[z], work modulo
/// (r'^m, (z-j)^m) for j = 0..ed-1 with r' a prime power, solve the slice
/// evaluations with mme_b, reassemble by Hermite interpolation, reduce mod
/// (r, E).
std::vector<ExtElem> mme_b_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                               const Natural& r, u32 t);

/// Recursion-depth policy for the drivers: fixed constant c, or automatic
/// (smallest c whose c-fold iterated log brings the modulus down to d).
struct DepthConfig {
    std::optional<u32> c;  // nullopt = auto
};

/// Driver choosing t: plain rings use t = min(c, log*(r) - 1), extension
/// rings t = min(max(c, 2), log*(d (er)^d) - 1), both clamped to >= 0.
std::vector<Natural> evaluate_theorem61(const MultiPoly& f, const std::vector<ModPoint>& points,
                                        const DepthConfig& cfg = {});
std::vector<ExtElem> evaluate_theorem61_ext(const MultiPoly& f, const std::vector<ExtPoint>& points,
                                            const DepthConfig& cfg = {});

/// The t the driver would choose (exposed for the CLI's --depth default).
u32 theorem61_depth(const MultiPoly& f, const DepthConfig& cfg);

}  // namespace mme

#endif
