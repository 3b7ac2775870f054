#include "varseq/search.hpp"

#include <utility>

#include "varseq/construct.hpp"

namespace varseq {

namespace {

// Exact-aware "is this move strictly better than the incumbent".
bool strictly_larger(const InterchangeDelta& a, const InterchangeDelta& b) {
  if (a.exact && b.exact) return a.exact->delta_f_num > b.exact->delta_f_num;
  return a.delta_f > b.delta_f;
}

std::optional<Interchange> pick_move(const Sequence& seq, SearchStrategy strategy) {
  const int n = seq.size();
  std::optional<Interchange> choice;
  std::optional<InterchangeDelta> best;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!is_favorable(seq, i, j)) continue;
      if (strategy != SearchStrategy::BestImprovement) return Interchange{i, j};
      const InterchangeDelta d = delta_f(seq, i, j);
      if (!best || strictly_larger(d, *best)) {
        best = d;
        choice = Interchange{i, j};
      }
    }
  }
  return choice;
}

TransformTrace single_step(const Sequence& seq, const Interchange& move) {
  TransformTrace trace;
  trace.kind = TransformKind::Single;
  trace.status = TransformStatus::Transformed;
  trace.applied = {move};
  const PartialSumStats before = partial_sums(seq);
  const PartialSumStats after = partial_sums(interchange(seq, move.i, move.j));
  const InterchangeDelta d = delta_f(seq, move.i, move.j);
  trace.f_before = before.variance;
  trace.f_after = after.variance;
  trace.per_step = {d.delta_f};
  if (before.exact_numerator && after.exact_numerator) {
    trace.exact = ExactTraceTotals{*before.exact_numerator, *after.exact_numerator,
                                   {d.exact->delta_f_num}};
  }
  return trace;
}

}  // namespace

SearchReport local_search(const Sequence& start, SearchStrategy strategy) {
  Sequence current = start;
  std::vector<TransformTrace> steps;
  std::vector<double> trajectory{variance(current)};

  for (;;) {
    if (strategy == SearchStrategy::TransformsFirst) {
      TransformResult n2 = sum_n2_transform(current);
      if (n2.trace.status == TransformStatus::Transformed) {
        current = std::move(n2.sequence);
        trajectory.push_back(n2.trace.f_after);
        steps.push_back(std::move(n2.trace));
        continue;
      }
      TransformResult n1 = sum_n1_transform(current);
      if (n1.trace.status == TransformStatus::Transformed) {
        current = std::move(n1.sequence);
        trajectory.push_back(n1.trace.f_after);
        steps.push_back(std::move(n1.trace));
        continue;
      }
    }
    const auto move = pick_move(current, strategy);
    if (!move) break;
    TransformTrace trace = single_step(current, *move);
    current = interchange(current, move->i, move->j);
    trajectory.push_back(trace.f_after);
    steps.push_back(std::move(trace));
  }

  const OptimalPair optimal = construct_optimal(current.set());
  SearchReport report{start, current, std::move(steps), std::move(trajectory),
                      /*converged=*/true, /*reached_closed_form=*/false};
  report.reached_closed_form =
      report.end == optimal.primary || report.end == optimal.dual_form;
  return report;
}

}  // namespace varseq
