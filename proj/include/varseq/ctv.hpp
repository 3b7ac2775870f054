#pragma once

#include "varseq/core.hpp"

namespace varseq {

/// Outcome of the transform-based dominance test between two arrangements
/// of the same set. The roles invert relative to variance maximization:
/// a transform strictly INCREASES f, so its pre-image is the sequence with
/// the SMALLER variance and therefore the better completion-time-variance
/// (minimization) candidate.
enum class CtvDominance {
  AFirst,        ///< seq_a is the transform image of seq_b: f(a) > f(b), b preferred
  BFirst,        ///< seq_b is the transform image of seq_a: f(b) > f(a), a preferred
  Incomparable,  ///< neither is the other's transform; compare raw variances
};

/// Tests whether one sequence is the sum-'n+2' transform of the other
/// (optionally also the sum-'n+1' transform). Throws MismatchedSets when
/// the sequences permute different sets.
CtvDominance ctv_dominates(const Sequence& seq_a, const Sequence& seq_b,
                           bool include_sum_n1 = false);

/// Drops every candidate that is the transform image of another candidate;
/// such an image has strictly larger variance, so a minimum-variance
/// candidate always survives. Input order is preserved.
std::vector<Sequence> ctv_screen(const std::vector<Sequence>& candidates,
                                 bool include_sum_n1 = false);

}  // namespace varseq
