#pragma once

#include <cstdint>

#include "varseq/core.hpp"

namespace varseq {

enum class Objective { MaxVariance, MinVariance };

/// Everything the exhaustive search found: all optima, in lexicographic
/// order, plus the optimal value.
struct OracleResult {
  Objective objective = Objective::MaxVariance;
  std::vector<Sequence> optima;
  double best_value = 0.0;
  std::optional<ExactInt> best_numerator;  ///< n^2 * best_value on the exact path
  std::uint64_t explored = 0;              ///< arrangements evaluated
  bool exact = false;                      ///< integer arithmetic was used
};

struct OracleOptions {
  /// Refuse instances above this size; never raised past kOracleHardLimit.
  int limit_n = 9;
  /// Fix c_1 to the smallest value (MaxVariance only; justified by the
  /// necessary condition c_1 = a_1). (n-1)! arrangements instead of n!.
  /// Off by default so the oracle re-derives that condition independently.
  bool pin_first = false;
  /// Worker threads; 0 picks hardware concurrency. Results are identical
  /// regardless of the thread count.
  int threads = 0;
};

inline constexpr int kOracleHardLimit = 11;

/// Enumerates every arrangement of the set and returns ALL optima. Exact
/// integer comparisons when the set is integral; otherwise floating point
/// with a 1e-9 relative grouping of near-ties (check OracleResult::exact).
/// Throws InstanceTooLarge when n exceeds the limit.
OracleResult brute_force(const NumberSet& set, Objective objective,
                         const OracleOptions& options = {});

}  // namespace varseq
