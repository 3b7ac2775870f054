#pragma once

#include "varseq/core.hpp"
#include "varseq/transforms.hpp"

namespace varseq {

enum class SearchStrategy {
  FirstImprovement,  ///< apply the first favorable interchange found
  BestImprovement,   ///< apply the largest-delta interchange, ties to the
                     ///< lexicographically smallest (i,j)
  TransformsFirst,   ///< prefer the composite sum transforms, fall back to
                     ///< single interchanges
};

/// Trajectory of a favorable-interchange local search. The end sequence
/// admits no favorable pairwise interchange; that is a local condition, so
/// `reached_closed_form` records (rather than asserts) whether the end
/// coincides with one of the two constructed optima.
struct SearchReport {
  Sequence start;
  Sequence end;
  std::vector<TransformTrace> steps;
  std::vector<double> f_trajectory;  ///< f(start), then f after each step
  bool converged = false;
  bool reached_closed_form = false;
};

/// Climbs from `start` by strictly improving moves until none remains.
/// Terminates for every input: f strictly increases and takes finitely many
/// values over the permutations of a set.
SearchReport local_search(const Sequence& start, SearchStrategy strategy);

}  // namespace varseq
