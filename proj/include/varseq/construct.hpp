#pragma once

#include "varseq/core.hpp"

namespace varseq {

/// The two closed-form variance maximizers of a set. `primary` interleaves
/// odd-ranked values ascending and even-ranked values descending, so it
/// starts at the smallest value and ends at the second smallest; `dual_form`
/// is its dual and starts with the two smallest values. For distinct values
/// these are exactly the maximizers; with ties they are still maximal but
/// possibly not unique. They coincide for n <= 2.
struct OptimalPair {
  Sequence primary;
  Sequence dual_form;
};

OptimalPair construct_optimal(const NumberSet& set);

/// Result of the interleaving check on a sequence of the form c_1 = a_1,
/// c_n = a_2 (the `primary` shape above).
enum class InterleaveStatus {
  Holds,          ///< the strict interleaving c_{n+2-k} < c_k < c_{n+1-k} holds
  Violated,       ///< right shape at the ends, interleaving broken inside
  NotApplicable,  ///< sequence does not start at a_1 and end at a_2
};

InterleaveStatus check_optimal_interleaving(const Sequence& seq);

}  // namespace varseq
