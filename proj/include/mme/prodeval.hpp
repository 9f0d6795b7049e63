#ifndef MME_PRODEVAL_HPP
#define MME_PRODEVAL_HPP

#include <map>

#include "mme/multipoly.hpp"

namespace mme {

/// Evaluations of a polynomial on the grid S^m. values[sum idx_j |S|^(j-1)]
/// is the value at (S[idx_1], ..., S[idx_m]); the first coordinate varies
/// fastest, matching the MultiPoly flat-index convention. Downstream index
/// arithmetic (kakeya tables, algorithm B) relies on this layout.
struct GridEvaluations {
    std::vector<Natural> S;
    u32 m = 0;
    std::vector<Natural> values;

    size_t index_of(const std::vector<size_t>& pos) const {
        size_t idx = 0, stride = 1;
        for (size_t j = 0; j < pos.size(); ++j) {
            idx += pos[j] * stride;
            stride *= S.size();
        }
        return idx;
    }
};

/// Evaluate f on S^m in O((d^m + |S|^m) poly(m, d)) ring operations, by
/// substituting the last variable first and recursing.
GridEvaluations product_set_eval(const MultiPoly& f, const std::vector<Natural>& S);

/// f(a) from the Hasse-derivative values of f at a nearby point b, where
/// every coordinate of a - b lies in the ideal r Z / r^s Z:
///   f(a) = sum_{|e|_1 < s} derivs[e] * (a-b)^e.
/// The caller owns the derivative evaluation so it can be amortized across
/// many points.
Natural taylor_correction(const std::map<ExpVec, Natural>& derivs_at_b, const ModPoint& a,
                          const ModPoint& b, const PowerModulus& mod);

}  // namespace mme

#endif
