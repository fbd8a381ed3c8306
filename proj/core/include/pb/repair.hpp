#ifndef PB_REPAIR_HPP
#define PB_REPAIR_HPP

#include <map>

#include "pb/dual.hpp"

namespace pb {

/// Candidate repair scheme: t matrices of shape n x t for a failed
/// node and repair set. Validity is established by verify_scheme.
struct RepairScheme {
  std::size_t failed = 0;
  std::vector<std::size_t> repair_set;  // sorted, excludes `failed`
  std::vector<GfMatrix> matrices;       // W^(0) .. W^(t-1)
  bool operator==(const RepairScheme&) const = default;
};

/// Queries derived from a verified scheme. queries[i] is a canonical
/// basis (RREF rows) of the span of {W^(j) row i}; bandwidth is the
/// total query count.
struct QueryPlan {
  std::map<std::size_t, std::vector<Vec>> queries;
  std::size_t bandwidth = 0;
};

/// Normalized shape of a perfect-bandwidth scheme: k-1 shared helper
/// rows plus one row exclusive to each matrix.
struct StandardFormInfo {
  std::vector<std::size_t> shared_rows;     // T, size k-1
  std::vector<std::size_t> exclusive_rows;  // r_j, one per matrix
};

/// Checks the three repair-matrix conditions (dual membership, support
/// confined to {failed} and the repair set, full row rank at the failed
/// node) and returns the exact query plan. Throws VerifyError naming
/// the violated condition.
QueryPlan verify_scheme(const PiggybackCode& code, const RepairScheme& scheme);

/// Runs the linear repair: downloads one symbol per query, reconstructs
/// the t independent equations for the failed row, and solves them.
Vec execute_repair(const PiggybackCode& code, const RepairScheme& scheme,
                   const Codeword& cw);

/// Scheme-equivalence transforms: same per-node row spans.
RepairScheme scale_matrix(const RepairScheme& scheme, std::size_t j, Fp kappa);
RepairScheme add_matrix(const RepairScheme& scheme, std::size_t j,
                        std::size_t l, Fp kappa);

/// Download-equivalence transform: adds kappa times the last column to
/// column `target_col` of every matrix. Piggybacking permits only
/// column 0; linebacking any column except the last.
RepairScheme add_last_column(const PiggybackCode& code,
                             const RepairScheme& scheme,
                             std::size_t target_col, Fp kappa);

/// Equivalent scheme in standard form for a verified perfect-bandwidth
/// scheme. Shared rows are the k-1 smallest of the repair set;
/// exclusive rows are chosen smallest-first.
std::pair<RepairScheme, StandardFormInfo> to_standard_form(
    const PiggybackCode& code, const RepairScheme& scheme);

/// For a verified perfect t=2 scheme: the scalars kappa_i with
/// W^(1) row i = kappa_i W^(0) row i across the repair set, after
/// normalizing the failed rows to e_0, e_1. They are pairwise distinct.
std::vector<Fp> t2_row_scalars(const PiggybackCode& code,
                               const RepairScheme& scheme);

/// Row spans per node, for equivalence checks in tests.
std::vector<std::vector<Vec>> row_sets(const RepairScheme& scheme,
                                       std::size_t n);

}  // namespace pb

#endif
