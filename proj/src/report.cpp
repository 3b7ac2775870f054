#include "varseq/report.hpp"

namespace varseq {

namespace {

Json fraction_json(ExactInt numerator, int n) {
  return Json{{"numerator", numerator}, {"denominator", static_cast<ExactInt>(n) * n}};
}

const char* kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::Dual: return "dual";
    case TransformKind::SumN2: return "sum-n2";
    case TransformKind::SumN1: return "sum-n1";
    case TransformKind::Single: return "single";
  }
  return "?";
}

const char* status_name(TransformStatus status) {
  switch (status) {
    case TransformStatus::Transformed: return "transformed";
    case TransformStatus::NoOp: return "no-op";
    case TransformStatus::GateNotMet: return "gate-not-met";
  }
  return "?";
}

}  // namespace

Json sequence_json(const Sequence& seq) {
  Json out;
  out["values"] = seq.entries();
  out["order"] = seq.ranks();
  return out;
}

Json stats_json(const PartialSumStats& stats) {
  Json out;
  out["partial_sums"] = stats.sums;
  out["mean"] = stats.mean;
  out["variance"] = stats.variance;
  if (stats.exact_numerator) {
    out["exact"] = fraction_json(*stats.exact_numerator,
                                 static_cast<int>(stats.sums.size()));
  }
  return out;
}

Json trace_json(const TransformTrace& trace, int n) {
  Json out;
  out["kind"] = kind_name(trace.kind);
  out["status"] = status_name(trace.status);
  Json applied = Json::array();
  for (const Interchange& step : trace.applied) {
    applied.push_back(Json::array({step.i, step.j}));
  }
  out["applied"] = std::move(applied);
  out["f_before"] = trace.f_before;
  out["f_after"] = trace.f_after;
  out["delta_f"] = trace.f_after - trace.f_before;
  out["per_step"] = trace.per_step;
  if (trace.exact) {
    Json exact;
    exact["f_before"] = fraction_json(trace.exact->f_before_num, n);
    exact["f_after"] = fraction_json(trace.exact->f_after_num, n);
    exact["delta_f"] =
        fraction_json(trace.exact->f_after_num - trace.exact->f_before_num, n);
    exact["per_step_numerators"] = trace.exact->per_step_num;
    out["exact"] = std::move(exact);
  }
  return out;
}

Json optimal_json(const OptimalPair& pair) {
  Json out;
  out["c_star"] = sequence_json(pair.primary);
  out["c_star_dual"] = sequence_json(pair.dual_form);
  const PartialSumStats stats = partial_sums(pair.primary);
  out["variance"] = stats.variance;
  if (stats.exact_numerator) {
    out["exact"] = fraction_json(*stats.exact_numerator, pair.primary.size());
  }
  return out;
}

Json oracle_json(const OracleResult& result) {
  Json out;
  out["objective"] = result.objective == Objective::MaxVariance ? "max" : "min";
  out["explored"] = result.explored;
  out["exact"] = result.exact;
  out["best_variance"] = result.best_value;
  if (result.best_numerator && !result.optima.empty()) {
    out["best_exact"] = fraction_json(*result.best_numerator, result.optima.front().size());
  }
  Json optima = Json::array();
  for (const Sequence& seq : result.optima) optima.push_back(sequence_json(seq));
  out["optima"] = std::move(optima);
  return out;
}

Json search_json(const SearchReport& report, const std::string& strategy_name) {
  Json out;
  out["strategy"] = strategy_name;
  out["start"] = sequence_json(report.start);
  out["end"] = sequence_json(report.end);
  Json steps = Json::array();
  for (const TransformTrace& trace : report.steps) {
    steps.push_back(trace_json(trace, report.start.size()));
  }
  out["steps"] = std::move(steps);
  out["f_trajectory"] = report.f_trajectory;
  out["converged"] = report.converged;
  out["reached_closed_form"] = report.reached_closed_form;
  return out;
}

Json ctv_screen_json(const std::vector<Sequence>& candidates,
                     const std::vector<Sequence>& surviving) {
  auto entry = [](const Sequence& seq) {
    Json item = sequence_json(seq);
    const PartialSumStats stats = partial_sums(seq);
    item["variance"] = stats.variance;
    if (stats.exact_numerator) {
      item["exact"] = fraction_json(*stats.exact_numerator, seq.size());
    }
    return item;
  };
  Json out;
  Json cand = Json::array();
  for (const Sequence& seq : candidates) cand.push_back(entry(seq));
  out["candidates"] = std::move(cand);
  Json kept = Json::array();
  for (const Sequence& seq : surviving) kept.push_back(entry(seq));
  out["surviving"] = std::move(kept);
  return out;
}

Json verify_json(const std::vector<PropertyCheck>& checks) {
  Json out;
  Json properties = Json::array();
  bool all = true;
  for (const PropertyCheck& check : checks) {
    Json item;
    item["name"] = check.name;
    item["pass"] = check.pass;
    if (!check.detail.empty()) item["detail"] = check.detail;
    properties.push_back(std::move(item));
    all = all && check.pass;
  }
  out["properties"] = std::move(properties);
  out["all_pass"] = all;
  return out;
}

}  // namespace varseq
