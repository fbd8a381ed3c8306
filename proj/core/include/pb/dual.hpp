#ifndef PB_DUAL_HPP
#define PB_DUAL_HPP

#include "pb/piggyback.hpp"

namespace pb {

/// Result of a dual-membership test. `residuals[i]` is
/// F x_{.,i} + sum_{j>i} P(i,j) x_{.,j}; membership iff all are zero.
struct DualWitness {
  bool member = false;
  std::vector<Vec> residuals;
};

/// Closed-form membership test for x in the dual of the array code.
DualWitness in_dual(const PiggybackCode& code, const GfMatrix& x);

/// Independent oracle: checks <x, encode(a)> = 0 for all kt basis
/// messages (exact) and `trials` random messages. Must agree with
/// in_dual on every input.
bool frobenius_check(const PiggybackCode& code, const GfMatrix& x,
                     std::size_t trials, std::uint64_t seed);

/// The (kt) x (nt) constraint matrix whose kernel is the dual space.
/// Variable order is substripe-major: column index = substripe * n + node.
GfMatrix dual_constraint_matrix(const PiggybackCode& code);

/// Basis of the dual space as n x t matrices; dimension (n-k) t.
std::vector<GfMatrix> dual_basis(const PiggybackCode& code);

/// All q^{(n-k)t} dual codewords, lexicographic in the coefficient
/// vector over the basis. Throws BudgetError if the count exceeds
/// `budget`.
std::vector<GfMatrix> enumerate_dual(const PiggybackCode& code,
                                     std::size_t budget = 1'000'000);

GfMatrix unflatten_dual(const PiggybackCode& code, const Vec& flat);

}  // namespace pb

#endif
