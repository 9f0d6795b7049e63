#ifndef MME_INTERP_HPP
#define MME_INTERP_HPP

#include <utility>
#include <vector>

#include "mme/unipoly.hpp"

namespace mme {

/// Chinese remaindering input: pairwise-coprime moduli >= 2 and residues
/// with residues[i] < moduli[i].
struct CrtInstance {
    std::vector<Natural> moduli;
    std::vector<Natural> residues;
};

/// The unique v < prod(moduli) with v = residues[i] (mod moduli[i]).
/// Iterative Garner combination; throws UsageError on non-coprime moduli or
/// out-of-range residues.
Natural crt_combine(const CrtInstance& inst);

/// Garner data for a fixed modulus list, reused across many residue vectors.
class PreparedCrt {
  public:
    explicit PreparedCrt(std::vector<Natural> moduli);

    const Natural& product() const { return product_; }
    size_t size() const { return moduli_.size(); }

    Natural combine(const std::vector<Natural>& residues) const;

  private:
    std::vector<Natural> moduli_;
    std::vector<Natural> prefix_;   // prefix_[i] = n_0 * ... * n_{i-1}
    std::vector<Natural> inv_;      // inv_[i] = prefix_[i]^(-1) mod n_i
    Natural product_;
};

/// One Hermite node: f mod (x - node)^multiplicity, carried in the shifted
/// basis (taylor[j] is the coefficient of (x - node)^j).
struct HermiteBlock {
    Natural node;
    u32 multiplicity = 1;
    std::vector<Natural> taylor;
};

/// Idempotents for a fixed node/multiplicity set over a fixed ring; the
/// per-point work of interpolation is then a short combination. Node
/// differences must be units; violations name the offending pair.
class PreparedHermite {
  public:
    PreparedHermite(PowerModulusPtr mod, std::vector<std::pair<Natural, u32>> nodes);

    u64 capacity() const { return capacity_; }  // sum of multiplicities

    /// taylor[i] holds the shifted-basis block at node i (size = multiplicity).
    UniPoly interpolate(const std::vector<std::vector<Natural>>& taylor) const;

  private:
    PowerModulusPtr mod_;
    std::vector<std::pair<Natural, u32>> nodes_;
    std::vector<UniPoly> delta_;  // delta_i = 1 - lambda_i^{e_i} mod master
    UniPoly master_;              // prod (x - a_i)^{e_i}
    u64 capacity_ = 0;
};

/// Recover the unique f with deg f < sum(multiplicities) matching every
/// block, by the delta_i = 1 - lambda_i^{e_i} idempotent construction (valid
/// over non-field rings as long as node differences are units).
UniPoly hermite_interpolate(const std::vector<HermiteBlock>& blocks, PowerModulusPtr ring);

}  // namespace mme

#endif
