#include "varseq/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace varseq {

namespace {

void check_pair(const Sequence& seq, int i, int j) {
  if (i < 1 || j <= i || j > seq.size()) {
    throw IndexOutOfRange(
        fmt::format("interchange: want 1 <= i < j <= {}, got i={} j={}", seq.size(), i, j));
  }
}

std::vector<double> swapped_entries(const Sequence& seq, int i, int j) {
  std::vector<double> entries(seq.entries().begin(), seq.entries().end());
  std::swap(entries[static_cast<std::size_t>(i) - 1], entries[static_cast<std::size_t>(j) - 1]);
  return entries;
}

// Applies a chain of disjoint-or-not interchanges in order, recording the
// per-step deltas from the closed form.
TransformResult apply_chain(const Sequence& seq, TransformKind kind,
                            std::vector<Interchange> steps) {
  TransformTrace trace;
  trace.kind = kind;
  trace.status = TransformStatus::Transformed;
  const PartialSumStats before = partial_sums(seq);
  trace.f_before = before.variance;
  if (before.exact_numerator) {
    trace.exact = ExactTraceTotals{*before.exact_numerator, *before.exact_numerator, {}};
  }

  Sequence current = seq;
  for (const Interchange& step : steps) {
    const InterchangeDelta d = delta_f(current, step.i, step.j);
    trace.per_step.push_back(d.delta_f);
    if (trace.exact && d.exact) {
      trace.exact->per_step_num.push_back(d.exact->delta_f_num);
    }
    current = interchange(current, step.i, step.j);
  }
  trace.applied = std::move(steps);

  const PartialSumStats after = partial_sums(current);
  trace.f_after = after.variance;
  if (trace.exact && after.exact_numerator) {
    trace.exact->f_after_num = *after.exact_numerator;
  }
  return {std::move(current), std::move(trace)};
}

TransformResult unchanged(const Sequence& seq, TransformKind kind, TransformStatus status) {
  TransformTrace trace;
  trace.kind = kind;
  trace.status = status;
  const PartialSumStats stats = partial_sums(seq);
  trace.f_before = stats.variance;
  trace.f_after = stats.variance;
  if (stats.exact_numerator) {
    trace.exact = ExactTraceTotals{*stats.exact_numerator, *stats.exact_numerator, {}};
  }
  return {seq, std::move(trace)};
}

}  // namespace

Sequence interchange(const Sequence& seq, int i, int j) {
  check_pair(seq, i, j);
  return Sequence(seq.set(), swapped_entries(seq, i, j));
}

InterchangeDelta delta_f(const Sequence& seq, int i, int j) {
  check_pair(seq, i, j);
  const int n = seq.size();
  const int span = j - i;

  InterchangeDelta d;
  d.i = i;
  d.j = j;
  d.delta = seq.at(j) - seq.at(i);

  if (seq.set().integral()) {
    const auto ints = seq.exact_entries();
    __int128 s = 0, total = 0, window = 0;
    for (int k = 1; k <= n; ++k) {
      s += ints[static_cast<std::size_t>(k) - 1];
      total += s;
      if (k >= i && k < j) window += s;
    }
    const auto delta =
        static_cast<__int128>(ints[static_cast<std::size_t>(j) - 1]) -
        ints[static_cast<std::size_t>(i) - 1];
    const __int128 d1_num = static_cast<__int128>(span) * (n - span);
    const __int128 d2_num = 2 * (static_cast<__int128>(n) * window - span * total);
    const __int128 df_num = d1_num * delta * delta + d2_num * delta;

    d.exact = ExactDeltaF{static_cast<ExactInt>(delta), static_cast<ExactInt>(d1_num),
                          static_cast<ExactInt>(d2_num), static_cast<ExactInt>(df_num)};
    const double n2 = static_cast<double>(n) * n;
    d.d1 = static_cast<double>(d1_num) / n2;
    d.d2 = static_cast<double>(d2_num) / n2;
    d.delta_f = static_cast<double>(df_num) / n2;
    return d;
  }

  const PartialSumStats stats = partial_sums(seq);
  const double frac = static_cast<double>(span) / n;
  d.d1 = frac * (1.0 - frac);
  d.d2 = 2.0 * frac * (partial_mean(stats, i, j) - stats.mean);
  d.delta_f = d.d1 * d.delta * d.delta + d.d2 * d.delta;
  return d;
}

bool is_favorable(const Sequence& seq, int i, int j) {
  const InterchangeDelta d = delta_f(seq, i, j);
  if (d.exact) return d.exact->delta_f_num > 0;
  const double scale = std::max(1.0, std::abs(partial_sums(seq).variance));
  return d.delta_f > 1e-9 * scale;
}

Sequence dual(const Sequence& seq) {
  const auto entries = seq.entries();
  const int n = seq.size();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(entries[0]);
  for (int k = 2; k <= n; ++k) {
    out.push_back(entries[static_cast<std::size_t>(n + 1 - k)]);
  }
  return Sequence(seq.set(), std::move(out));
}

TransformResult dual_transform(const Sequence& seq) {
  const int n = seq.size();
  std::vector<Interchange> flips;
  for (int k = 2; k <= (n + 1) / 2; ++k) flips.push_back({k, n + 2 - k});
  if (flips.empty()) {
    return unchanged(seq, TransformKind::Dual, TransformStatus::NoOp);
  }
  return apply_chain(seq, TransformKind::Dual, std::move(flips));
}

TransformResult sum_n2_transform(const Sequence& seq) {
  const int n = seq.size();
  const int u = (n + 1) / 2;  // ceil(n/2)

  // Strict pair comparisons; tied pairs sit in neither camp and are never
  // flipped (their delta would be zero).
  bool any_less = false;
  bool any_greater = false;
  std::vector<Interchange> flips;
  for (int k = 2; k <= u; ++k) {
    const double a = seq.at(k);
    const double b = seq.at(n + 2 - k);
    if (a < b) {
      any_less = true;
      flips.push_back({k, n + 2 - k});
    } else if (a > b) {
      any_greater = true;
    }
  }

  // Gate: if every non-tied pair already leans one way the transform is not
  // defined; a uniform flip is exactly the dual and leaves f unchanged.
  if (!any_less || !any_greater) {
    return unchanged(seq, TransformKind::SumN2, TransformStatus::GateNotMet);
  }
  return apply_chain(seq, TransformKind::SumN2, std::move(flips));
}

TransformResult sum_n1_transform(const Sequence& seq) {
  const int n = seq.size();
  const int u = n / 2;  // floor(n/2)

  std::vector<Interchange> flips;
  for (int k = 2; k <= u; ++k) {
    if (seq.at(k) > seq.at(n + 1 - k)) {
      flips.push_back({k, n + 1 - k});
    }
  }
  if (flips.empty()) {
    return unchanged(seq, TransformKind::SumN1, TransformStatus::NoOp);
  }
  return apply_chain(seq, TransformKind::SumN1, std::move(flips));
}

}  // namespace varseq
