#ifndef PB_CONSTRUCT_HPP
#define PB_CONSTRUCT_HPP

#include <optional>

#include "pb/repair.hpp"

namespace pb {

struct SearchBudget {
  std::size_t max_candidates = 1'000'000;
  std::uint64_t seed = 0;
  double time_limit_s = 300.0;
};

enum class SearchStatus { found, exhausted, budget };

struct SearchOutcome {
  SearchStatus status = SearchStatus::budget;
  std::optional<RepairScheme> scheme;
  std::size_t candidates_tried = 0;
};

/// The (6,3) t=2 q=7 example code and its six perfect repair schemes,
/// embedded verbatim as data.
std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> fig3_fixture();

/// Explicit perfect-bandwidth piggybacking construction for k=2, t=2.
/// Returns the code plus one verified bandwidth-3 scheme per node.
std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> construct_k2_t2(
    const BaseCode& base);

struct LinebackResult {
  SearchStatus status = SearchStatus::budget;
  std::optional<PiggybackCode> code;
  /// Scheme per (failed node, repair set); covers every (t+1)-subset.
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, RepairScheme>
      schemes;
  std::size_t draws = 0;
  std::size_t best_coverage = 0;  // most (i*, S) pairs any draw satisfied
  std::size_t pair_count = 0;
  /// Union-bound failure estimate n C(n-1,t+1) (1 - prod(1 - q^-i)).
  double union_bound = 0.0;
};

/// Randomized k=2 linebacking construction: redraws random piggyback
/// matrices until every node is repairable from every (t+1)-subset at
/// bandwidth t+1. max_candidates caps the number of draws.
LinebackResult construct_k2_lineback(const BaseCode& base, std::size_t t,
                                     const SearchBudget& budget);

/// Substripe reduction t -> t-1: drops substripe 0 and derives a
/// bandwidth <= b-1 scheme per node from the given ones. Needs t >= 3.
std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> reduce_substripe(
    const PiggybackCode& code,
    const std::map<std::size_t, RepairScheme>& schemes);

/// Exhaustive search for a scheme for (failed, S) with bandwidth at
/// most target_b, enumerating support-restricted dual tuples with the
/// failed-node rows fixed to the identity (one representative per
/// equivalence class).
SearchOutcome exhaustive_scheme_search(const PiggybackCode& code,
                                       std::size_t failed,
                                       const std::vector<std::size_t>& s,
                                       std::size_t target_b,
                                       const SearchBudget& budget = {});

/// Samples `num_codes` piggyback codes (RS base, random piggyback
/// matrices) and searches each for a pair of perfect schemes for nodes
/// 0 and 1 sharing the nonzero rows {0..k+t-1}. Status `exhausted`
/// means no sampled code admits such a pair.
SearchOutcome witness_any_d_impossibility(std::size_t n, std::size_t k,
                                          std::size_t t, std::uint32_t q,
                                          std::size_t num_codes,
                                          const SearchBudget& budget);

double lineback_union_bound(std::size_t n, std::size_t t, std::uint32_t q);

}  // namespace pb

#endif
