#include "varseq/structure.hpp"

#include <algorithm>

namespace varseq {

namespace {

// Rise-then-fall over [first, last).
bool unimodal(std::span<const double> e) {
  std::size_t k = 0;
  while (k + 1 < e.size() && e[k] <= e[k + 1]) ++k;
  while (k + 1 < e.size() && e[k] >= e[k + 1]) ++k;
  return k + 1 == e.size();
}

// Compares mu_ij(S) against the grand mean without dividing:
// sign of n * W_ij - (j-i) * sum(s_k). Exact for integer inputs.
int window_mean_vs_mean(const PartialSumStats& stats, int i, int j) {
  const int n = static_cast<int>(stats.sums.size());
  long double window = 0.0L;
  long double total = 0.0L;
  for (int k = 1; k <= n; ++k) {
    total += stats.sums[static_cast<std::size_t>(k) - 1];
    if (k >= i && k < j) window += stats.sums[static_cast<std::size_t>(k) - 1];
  }
  const long double lhs = static_cast<long double>(n) * window;
  const long double rhs = static_cast<long double>(j - i) * total;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace

bool is_wedge_shaped(const Sequence& seq) { return unimodal(seq.entries()); }

bool is_v_shaped(const Sequence& seq) {
  const auto e = seq.entries();
  std::size_t k = 0;
  while (k + 1 < e.size() && e[k] >= e[k + 1]) ++k;
  while (k + 1 < e.size() && e[k] <= e[k + 1]) ++k;
  return k + 1 == e.size();
}

std::vector<Violation> violated_necessary_conditions(const Sequence& seq) {
  const int n = seq.size();
  const auto entries = seq.entries();
  const double min_value = seq.set().values().front();
  const double max_value = seq.set().values().back();

  std::vector<Violation> out;

  // The smallest value must open the sequence; otherwise moving it to the
  // front is always favorable.
  if (entries[0] > min_value) {
    int j = 0;
    for (int k = 2; k <= n; ++k) {
      if (seq.at(k) == min_value) {
        j = k;
        break;
      }
    }
    out.push_back({ViolationKind::FirstNotMin, Interchange{1, j}});
  }

  // The largest value must not close the sequence when n > 3; swapping the
  // last two elements improves f whenever they actually differ.
  if (n > 3 && entries[static_cast<std::size_t>(n) - 1] == max_value &&
      is_favorable(seq, n - 1, n)) {
    out.push_back({ViolationKind::LastIsMax, Interchange{n - 1, n}});
  }

  // Window means must sit below the grand mean left of the peak and above it
  // to the right. Only meaningful when the peak is interior.
  const auto peak_it = std::find(entries.begin(), entries.end(), max_value);
  const int peak = static_cast<int>(peak_it - entries.begin()) + 1;
  if (peak > 1 && peak < n) {
    const PartialSumStats stats = partial_sums(seq);
    std::optional<Interchange> witness;
    for (int i = 1; i < peak && !witness; ++i) {
      for (int j = i + 1; j <= peak; ++j) {
        if (window_mean_vs_mean(stats, i, j) >= 0 && is_favorable(seq, i, peak)) {
          witness = Interchange{i, peak};
          break;
        }
      }
    }
    for (int i = peak; i < n && !witness; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (window_mean_vs_mean(stats, i, j) <= 0 && is_favorable(seq, peak, j)) {
          witness = Interchange{peak, j};
          break;
        }
      }
    }
    if (witness) {
      out.push_back({ViolationKind::PartialMeanOrder, witness});
    }
  }

  if (!is_wedge_shaped(seq)) {
    out.push_back({ViolationKind::NotWedgeShaped, std::nullopt});
  }
  return out;
}

}  // namespace varseq
