#include "varseq/construct.hpp"

#include "varseq/transforms.hpp"

namespace varseq {

OptimalPair construct_optimal(const NumberSet& set) {
  const int n = set.size();
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; k += 2) entries.push_back(set.value_at(k));
  for (int k = (n % 2 == 0) ? n : n - 1; k >= 2; k -= 2) {
    entries.push_back(set.value_at(k));
  }
  Sequence primary(set, std::move(entries));
  Sequence dual_form = dual(primary);
  return {std::move(primary), std::move(dual_form)};
}

InterleaveStatus check_optimal_interleaving(const Sequence& seq) {
  const int n = seq.size();
  if (n == 1) return InterleaveStatus::Holds;
  if (seq.at(1) != seq.set().value_at(1) || seq.at(n) != seq.set().value_at(2)) {
    return InterleaveStatus::NotApplicable;
  }
  const int u = (n + 1) / 2;
  const int u_floor = n / 2;
  if (n % 2 == 0) {
    for (int k = 2; k <= u; ++k) {
      if (!(seq.at(n + 2 - k) < seq.at(k) && seq.at(k) < seq.at(n + 1 - k))) {
        return InterleaveStatus::Violated;
      }
    }
  } else {
    for (int k = 2; k <= u_floor; ++k) {
      if (!(seq.at(k) < seq.at(n + 1 - k))) return InterleaveStatus::Violated;
    }
    for (int k = 2; k <= u; ++k) {
      if (!(seq.at(n + 2 - k) < seq.at(k))) return InterleaveStatus::Violated;
    }
  }
  return InterleaveStatus::Holds;
}

}  // namespace varseq
