#pragma once

#include "varseq/core.hpp"

namespace varseq {

/// One position swap, 1-based, i < j.
struct Interchange {
  int i = 0;
  int j = 0;
  friend bool operator==(const Interchange&, const Interchange&) = default;
};

/// n^2-scaled integer view of an interchange delta (integer inputs only).
/// delta_f_num = d1_num * delta^2 + d2_num * delta holds exactly.
struct ExactDeltaF {
  ExactInt delta = 0;        ///< c_j - c_i
  ExactInt d1_num = 0;       ///< n^2 * d1 = (j-i)(n-(j-i))
  ExactInt d2_num = 0;       ///< n^2 * d2
  ExactInt delta_f_num = 0;  ///< n^2 * (f(C') - f(C))
};

/// Closed-form effect of the (i,j)-interchange on f, as the quadratic
/// phi(delta) = d1*delta^2 + d2*delta in delta = c_j - c_i. The swap pays
/// off exactly when phi(delta) > 0:
///   d2 > 0  -> favorable for delta > 0 or delta < -d2/d1,
///   d2 <= 0 -> favorable for delta < 0 or delta > -d2/d1,
/// with phi(0) = phi(-d2/d1) = 0 on the boundary.
struct InterchangeDelta {
  int i = 0;
  int j = 0;
  double delta = 0.0;
  double d1 = 0.0;  ///< (j-i)/n * (1-(j-i)/n); positive whenever j-i < n
  double d2 = 0.0;  ///< 2(j-i)/n * (mu_ij - mean)
  double delta_f = 0.0;
  std::optional<ExactDeltaF> exact;
};

enum class TransformKind { Dual, SumN2, SumN1, Single };

enum class TransformStatus {
  Transformed,  ///< interchanges applied, sequence changed
  NoOp,         ///< nothing to do, sequence returned unchanged
  GateNotMet,   ///< the transform's precondition failed, unchanged
};

/// Exact totals for a trace over integer inputs, n^2-scaled.
struct ExactTraceTotals {
  ExactInt f_before_num = 0;
  ExactInt f_after_num = 0;
  std::vector<ExactInt> per_step_num;
};

/// Record of one (possibly composite) transform. The per-step deltas sum to
/// f_after - f_before; individual steps inside a composite transform may be
/// negative even when the total is guaranteed positive.
struct TransformTrace {
  TransformKind kind = TransformKind::Single;
  TransformStatus status = TransformStatus::NoOp;
  std::vector<Interchange> applied;
  double f_before = 0.0;
  double f_after = 0.0;
  std::vector<double> per_step;
  std::optional<ExactTraceTotals> exact;
};

struct TransformResult {
  Sequence sequence;
  TransformTrace trace;
};

/// Swaps positions i and j (1-based, i < j). Throws IndexOutOfRange.
Sequence interchange(const Sequence& seq, int i, int j);

/// Closed-form delta of the (i,j)-interchange; equals
/// variance(interchange(seq,i,j)) - variance(seq). Throws IndexOutOfRange.
InterchangeDelta delta_f(const Sequence& seq, int i, int j);

/// True iff the (i,j)-interchange strictly increases f. Exact for integer
/// inputs; otherwise uses a 1e-9 relative tolerance so boundary swaps are
/// not reported as improvements.
bool is_favorable(const Sequence& seq, int i, int j);

/// The dual arrangement {c_1, c_n, c_{n-1}, ..., c_2}. Preserves f exactly
/// and is an involution.
Sequence dual(const Sequence& seq);

/// dual() with a full trace: the (k, n+2-k) interchange chain whose
/// per-step deltas telescope to exactly zero.
TransformResult dual_transform(const Sequence& seq);

/// Pairs position k with n+2-k for 2 <= k <= ceil(n/2). When the strict
/// pair comparisons are mixed (some c_k < c_{n+2-k}, some >), flips every
/// < pair in ascending k; the result satisfies c_k >= c_{n+2-k} everywhere
/// and f strictly increases. When all non-tied pairs already lean the same
/// way the gate is not met and the sequence is returned unchanged (flipping
/// everything would just build the dual, which cannot improve f).
TransformResult sum_n2_transform(const Sequence& seq);

/// Pairs position k with n+1-k for 2 <= k <= floor(n/2) and flips every
/// pair with c_k > c_{n+1-k}. A no-op when no such pair exists; otherwise
/// f strictly increases.
TransformResult sum_n1_transform(const Sequence& seq);

}  // namespace varseq
