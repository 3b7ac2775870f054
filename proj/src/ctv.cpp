#include "varseq/ctv.hpp"

#include <algorithm>

#include "varseq/transforms.hpp"

namespace varseq {

namespace {

bool reachable_by_transform(const Sequence& from, const Sequence& to, bool include_sum_n1) {
  const TransformResult n2 = sum_n2_transform(from);
  if (n2.trace.status == TransformStatus::Transformed &&
      std::ranges::equal(n2.sequence.entries(), to.entries())) {
    return true;
  }
  if (include_sum_n1) {
    const TransformResult n1 = sum_n1_transform(from);
    if (n1.trace.status == TransformStatus::Transformed &&
        std::ranges::equal(n1.sequence.entries(), to.entries())) {
      return true;
    }
  }
  return false;
}

}  // namespace

CtvDominance ctv_dominates(const Sequence& seq_a, const Sequence& seq_b,
                           bool include_sum_n1) {
  if (seq_a.set() != seq_b.set()) {
    throw MismatchedSets("ctv_dominates: sequences permute different sets");
  }
  if (reachable_by_transform(seq_a, seq_b, include_sum_n1)) return CtvDominance::BFirst;
  if (reachable_by_transform(seq_b, seq_a, include_sum_n1)) return CtvDominance::AFirst;
  return CtvDominance::Incomparable;
}

std::vector<Sequence> ctv_screen(const std::vector<Sequence>& candidates,
                                 bool include_sum_n1) {
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k].set() != candidates[0].set()) {
      throw MismatchedSets("ctv_screen: candidates permute different sets");
    }
  }

  std::vector<bool> dominated(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i == j || dominated[j]) continue;
      if (reachable_by_transform(candidates[i], candidates[j], include_sum_n1)) {
        dominated[j] = true;  // f(candidates[j]) > f(candidates[i])
      }
    }
  }

  std::vector<Sequence> surviving;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!dominated[k]) surviving.push_back(candidates[k]);
  }
  return surviving;
}

}  // namespace varseq
