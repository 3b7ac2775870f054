#include "varseq/verify.hpp"

#include <cmath>

#include <fmt/format.h>

#include "varseq/ctv.hpp"
#include "varseq/structure.hpp"

namespace varseq {

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

PropertyCheck check_definitional_form(const Sequence& seq) {
  const PartialSumStats stats = partial_sums(seq);
  long double acc = 0.0L;
  for (double s : stats.sums) {
    const long double d = static_cast<long double>(s) - stats.mean;
    acc += d * d;
  }
  const double definitional = static_cast<double>(acc / seq.size());
  const bool pass = close(definitional, stats.variance);
  return {"variance-definitional-agreement", pass,
          fmt::format("simplified {} vs definitional {}", stats.variance, definitional)};
}

PropertyCheck check_dual_invariance(const Sequence& seq) {
  const PartialSumStats a = partial_sums(seq);
  const PartialSumStats b = partial_sums(dual(seq));
  bool pass;
  if (a.exact_numerator && b.exact_numerator) {
    pass = *a.exact_numerator == *b.exact_numerator;
  } else {
    pass = close(a.variance, b.variance);
  }
  return {"dual-preserves-variance", pass,
          fmt::format("f = {}, f(dual) = {}", a.variance, b.variance)};
}

PropertyCheck check_delta_closed_form(const Sequence& seq) {
  const int n = seq.size();
  const PartialSumStats base = partial_sums(seq);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const InterchangeDelta d = delta_f(seq, i, j);
      const PartialSumStats after = partial_sums(interchange(seq, i, j));
      if (d.exact && base.exact_numerator && after.exact_numerator) {
        if (*after.exact_numerator - *base.exact_numerator != d.exact->delta_f_num) {
          return {"interchange-delta-closed-form", false,
                  fmt::format("mismatch at ({},{})", i, j)};
        }
      } else if (!close(after.variance - base.variance, d.delta_f)) {
        return {"interchange-delta-closed-form", false,
                fmt::format("mismatch at ({},{})", i, j)};
      }
    }
  }
  return {"interchange-delta-closed-form", true, "all pairs agree"};
}

PropertyCheck check_favorability_sign(const Sequence& seq) {
  const int n = seq.size();
  const PartialSumStats base = partial_sums(seq);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool favorable = is_favorable(seq, i, j);
      const PartialSumStats after = partial_sums(interchange(seq, i, j));
      bool agrees;
      if (base.exact_numerator && after.exact_numerator) {
        agrees = favorable == (*after.exact_numerator > *base.exact_numerator);
      } else {
        // One-sided in float mode: a favorable move must really improve f.
        agrees = !favorable || after.variance > base.variance;
      }
      if (!agrees) {
        return {"favorable-iff-delta-positive", false, fmt::format("mismatch at ({},{})", i, j)};
      }
    }
  }
  return {"favorable-iff-delta-positive", true, "all pairs agree"};
}

PropertyCheck check_partial_mean_monotone(const Sequence& seq) {
  const PartialSumStats stats = partial_sums(seq);
  const int n = seq.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!(partial_mean(stats, i, j) < partial_mean(stats, i, j + 1))) {
        return {"partial-mean-monotone", false, fmt::format("not increasing in j at ({},{})", i, j)};
      }
      if (i + 1 < j && !(partial_mean(stats, i, j) < partial_mean(stats, i + 1, j))) {
        return {"partial-mean-monotone", false, fmt::format("not increasing in i at ({},{})", i, j)};
      }
    }
  }
  return {"partial-mean-monotone", true, "strictly increasing in i and j"};
}

PropertyCheck check_partial_mean_mixing(const Sequence& seq) {
  const PartialSumStats stats = partial_sums(seq);
  const int n = seq.size();
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n + 1; ++k) {
        const double mixed = ((j - i) * partial_mean(stats, i, j) +
                              (k - j) * partial_mean(stats, j, k)) /
                             (k - i);
        if (!close(mixed, partial_mean(stats, i, k))) {
          return {"partial-mean-mixing", false, fmt::format("fails at ({},{},{})", i, j, k)};
        }
      }
    }
  }
  return {"partial-mean-mixing", true, "windows mix to the enclosing mean"};
}

PropertyCheck check_transform(const Sequence& seq, bool sum_n2) {
  const char* name = sum_n2 ? "sum-n2-improves" : "sum-n1-improves";
  const TransformResult result = sum_n2 ? sum_n2_transform(seq) : sum_n1_transform(seq);
  if (result.trace.status != TransformStatus::Transformed) {
    return {name, true,
            result.trace.status == TransformStatus::NoOp ? "not applicable (no-op)"
                                                         : "not applicable (gate not met)"};
  }
  bool pass;
  if (result.trace.exact) {
    pass = result.trace.exact->f_after_num > result.trace.exact->f_before_num;
  } else {
    pass = result.trace.f_after > result.trace.f_before;
  }
  return {name, pass,
          fmt::format("f {} -> {}", result.trace.f_before, result.trace.f_after)};
}

PropertyCheck check_construction(const Sequence& seq) {
  const OptimalPair pair = construct_optimal(seq.set());
  const bool shapes = is_wedge_shaped(pair.primary) && is_wedge_shaped(pair.dual_form);
  const bool clean = violated_necessary_conditions(pair.primary).empty() &&
                     violated_necessary_conditions(pair.dual_form).empty();
  const bool involution = dual(pair.primary) == pair.dual_form;
  const bool interleaved =
      check_optimal_interleaving(pair.primary) != InterleaveStatus::Violated;
  const bool pass = shapes && clean && involution && interleaved;
  return {"construction-passes-checks", pass,
          fmt::format("wedge={} violations-empty={} dual-pair={} interleaving={}", shapes,
                      clean, involution, interleaved)};
}

}  // namespace

std::vector<PropertyCheck> verify_instance(const Sequence& seq) {
  std::vector<PropertyCheck> checks;
  checks.push_back(check_definitional_form(seq));
  checks.push_back(check_dual_invariance(seq));
  checks.push_back(check_delta_closed_form(seq));
  checks.push_back(check_favorability_sign(seq));
  checks.push_back(check_partial_mean_monotone(seq));
  checks.push_back(check_partial_mean_mixing(seq));
  checks.push_back(check_transform(seq, /*sum_n2=*/true));
  checks.push_back(check_transform(seq, /*sum_n2=*/false));
  checks.push_back(check_construction(seq));
  return checks;
}

}  // namespace varseq
