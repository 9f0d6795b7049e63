#include "mme/interp.hpp"

namespace mme {

Natural crt_combine(const CrtInstance& inst) {
    if (inst.moduli.size() != inst.residues.size())
        throw UsageError("crt_combine: moduli/residue length mismatch");
    if (inst.moduli.empty()) throw UsageError("crt_combine: empty instance");
    for (size_t i = 0; i < inst.moduli.size(); ++i) {
        if (inst.moduli[i] < Natural(2)) throw UsageError("crt_combine: moduli must be >= 2");
        if (!(inst.residues[i] < inst.moduli[i]))
            throw UsageError("crt_combine: residue out of range at index " + std::to_string(i));
    }
    for (size_t i = 0; i < inst.moduli.size(); ++i)
        for (size_t j = i + 1; j < inst.moduli.size(); ++j)
            if (!gcd(inst.moduli[i], inst.moduli[j]).is_one())
                throw UsageError("crt_combine: moduli " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not coprime");
    PreparedCrt prep(inst.moduli);
    return prep.combine(inst.residues);
}

PreparedCrt::PreparedCrt(std::vector<Natural> moduli) : moduli_(std::move(moduli)), product_(1) {
    if (moduli_.empty()) throw UsageError("PreparedCrt: empty modulus list");
    prefix_.reserve(moduli_.size());
    inv_.reserve(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] < Natural(2)) throw UsageError("PreparedCrt: moduli must be >= 2");
        prefix_.push_back(product_);
        if (i == 0) {
            inv_.push_back(Natural(1));
        } else {
            try {
                inv_.push_back(mod_inverse_natural(product_ % moduli_[i], moduli_[i]));
            } catch (const NonUnitError&) {
                throw UsageError("PreparedCrt: moduli are not pairwise coprime (index " +
                                 std::to_string(i) + ")");
            }
        }
        product_ *= moduli_[i];
    }
}

Natural PreparedCrt::combine(const std::vector<Natural>& residues) const {
    if (residues.size() != moduli_.size()) throw UsageError("PreparedCrt: residue count mismatch");
    Natural x = residues[0] % moduli_[0];
    for (size_t i = 1; i < moduli_.size(); ++i) {
        const Natural& n = moduli_[i];
        Natural xi = x % n;
        Natural ri = residues[i] % n;
        Natural delta = ri >= xi ? ri - xi : (n - xi) + ri;
        Natural t = (delta * inv_[i]) % n;
        x += prefix_[i] * t;
    }
    return x;
}

namespace {

UniPoly poly_powmod(const UniPoly& base, u64 e, const UniPoly& master) {
    const auto& mod = master.modulus();
    UniPoly result(mod, {Natural(1)});
    UniPoly b = poly_mod(base, master);
    while (e) {
        if (e & 1) result = poly_mod(result * b, master);
        b = poly_mod(b * b, master);
        e >>= 1;
    }
    return result;
}

UniPoly linear_power(const PowerModulusPtr& mod, const Natural& a, u32 e) {
    // (x - a)^e
    UniPoly p(mod, {mod->sub(Natural(0), a), Natural(1)});
    UniPoly out(mod, {Natural(1)});
    for (u32 i = 0; i < e; ++i) out = out * p;
    return out;
}

}  // namespace

PreparedHermite::PreparedHermite(PowerModulusPtr mod, std::vector<std::pair<Natural, u32>> nodes)
    : mod_(std::move(mod)), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw UsageError("PreparedHermite: no nodes");
    const size_t l = nodes_.size();
    for (auto& [a, e] : nodes_) {
        if (e < 1) throw UsageError("PreparedHermite: multiplicity must be >= 1");
        a = mod_->reduce(a);
        capacity_ += e;
    }
    // every pairwise node difference must be a unit
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i + 1; j < l; ++j) {
            Natural diff = mod_->sub(nodes_[i].first, nodes_[j].first);
            if (!gcd(diff, mod_->n()).is_one())
                throw NonUnitError("hermite: difference of nodes " + std::to_string(i) + " and " +
                                   std::to_string(j) + " is not a unit");
        }

    master_ = UniPoly(mod_, {Natural(1)});
    for (const auto& [a, e] : nodes_) master_ = master_ * linear_power(mod_, a, e);

    delta_.reserve(l);
    for (size_t i = 0; i < l; ++i) {
        const auto& [ai, ei] = nodes_[i];
        auto [Pi, rem] = poly_divmod(master_, linear_power(mod_, ai, ei));
        MME_ASSERT(rem.is_zero());
        Natural ri = Pi.eval(ai);
        Natural ri_inv = mod_->inv(ri);  // unit since every a_i - a_j is
        // lambda_i = 1 - ri^-1 * Pi, a multiple of (x - a_i)
        UniPoly lambda = UniPoly(mod_, {Natural(1)}) - Pi.scaled(ri_inv);
        UniPoly delta = UniPoly(mod_, {Natural(1)}) - poly_powmod(lambda, ei, master_);
        delta_.push_back(poly_mod(delta, master_));
    }

#ifndef MME_UNCHECKED
    // idempotent property: delta_i = 1 mod (x-a_i)^{e_i}, = 0 mod (x-a_j)^{e_j}
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) {
            UniPoly rem = poly_mod(delta_[i], linear_power(mod_, nodes_[j].first, nodes_[j].second));
            if (i == j)
                MME_ASSERT(rem == UniPoly(mod_, {Natural(1)}));
            else
                MME_ASSERT(rem.is_zero());
        }
#endif
}

UniPoly PreparedHermite::interpolate(const std::vector<std::vector<Natural>>& taylor) const {
    if (taylor.size() != nodes_.size()) throw UsageError("hermite: block count mismatch");
    UniPoly acc(mod_);
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const auto& [ai, ei] = nodes_[i];
        if (taylor[i].size() != ei) throw UsageError("hermite: block size must equal multiplicity");
        // shifted-basis block -> plain polynomial f_i(x) = B(x - a_i)
        UniPoly block(mod_, taylor[i]);
        UniPoly fi = taylor_shift(block, mod_->sub(Natural(0), ai));
        acc = acc + delta_[i] * fi;
    }
    return poly_mod(acc, master_);
}

UniPoly hermite_interpolate(const std::vector<HermiteBlock>& blocks, PowerModulusPtr ring) {
    if (blocks.empty()) throw UsageError("hermite_interpolate: no blocks");
    std::vector<std::pair<Natural, u32>> nodes;
    std::vector<std::vector<Natural>> taylor;
    nodes.reserve(blocks.size());
    for (const auto& b : blocks) {
        if (b.taylor.size() != b.multiplicity)
            throw UsageError("hermite_interpolate: taylor block capacity must equal multiplicity");
        nodes.emplace_back(b.node, b.multiplicity);
        taylor.push_back(b.taylor);
    }
    PreparedHermite prep(std::move(ring), std::move(nodes));
    return prep.interpolate(taylor);
}

}  // namespace mme
