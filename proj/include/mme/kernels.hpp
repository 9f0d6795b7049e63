#ifndef MME_KERNELS_HPP
#define MME_KERNELS_HPP

#include <vector>

#include "mme/modulus.hpp"

namespace mme::kern {

/// f(point) by Horner along the variables, raw residues.
u64 horner_eval(const ModEngine& E, const u64* coeffs, u32 m, u32 d, const u64* point);

/// Evaluations of f on S^m. out[sum idx_j * |S|^(j-1)] = f(S[idx_1], ..., S[idx_m]);
/// the first coordinate varies fastest. Substitutes the last variable first.
void product_grid(const ModEngine& E, const std::vector<u64>& coeffs, u32 m, u32 d,
                  const std::vector<u64>& S, std::vector<u64>& out);

/// Ring-operation estimate of product_grid (drives the grid-vs-direct choice;
/// deterministic, no timing involved).
u64 product_grid_cost(u32 m, u32 d, u64 ns);

/// C(a, b) mod n for a, b < d, by Pascal recurrence over the integers then
/// reduction (factorial division is ill-defined over composite moduli).
std::vector<std::vector<u64>> binom_table(u32 d, const ModEngine& E);

/// Hasse derivative of a dense coefficient array with respect to exponent e.
std::vector<u64> hasse_derivative(const ModEngine& E, const std::vector<u64>& coeffs, u32 m, u32 d,
                                  const std::vector<u32>& e,
                                  const std::vector<std::vector<u64>>& binom);

}  // namespace mme::kern

#endif
