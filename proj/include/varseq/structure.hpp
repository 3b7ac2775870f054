#pragma once

#include "varseq/core.hpp"
#include "varseq/transforms.hpp"

namespace varseq {

/// Necessary conditions for a variance-maximizing arrangement. An empty
/// violation list does NOT certify optimality; a non-empty one disproves it.
enum class ViolationKind {
  FirstNotMin,       ///< c_1 is not a smallest value
  LastIsMax,         ///< c_n is a largest value (only checked for n > 3)
  PartialMeanOrder,  ///< a window mean sits on the wrong side of the grand mean
  NotWedgeShaped,    ///< not ascending-then-descending around the maximum
};

struct Violation {
  ViolationKind kind = ViolationKind::NotWedgeShaped;
  /// A favorable interchange proving non-optimality, when one is implied.
  std::optional<Interchange> witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// True iff entries ascend up to a maximum element and descend after it
/// (non-strictly when the set has ties).
bool is_wedge_shaped(const Sequence& seq);

/// True iff entries descend to a minimum element and ascend after it. This
/// is the known shape of completion-time-variance minimizers.
bool is_v_shaped(const Sequence& seq);

/// Every necessary-for-optimality condition the sequence violates, each
/// with a witnessing favorable interchange where the theory provides one.
std::vector<Violation> violated_necessary_conditions(const Sequence& seq);

}  // namespace varseq
