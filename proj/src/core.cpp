#include "varseq/core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace varseq {

namespace {

// n * total must stay below this so that both n*sum(s_k^2) and (sum s_k)^2
// fit ExactInt: (3e9)^2 = 9e18 < 2^63 - 1.
constexpr double kExactScaleLimit = 3.0e9;

bool exact_path_eligible(const std::vector<double>& values) {
  long double total = 0.0L;
  for (double v : values) {
    if (v != std::floor(v)) return false;
    total += v;
  }
  return total * static_cast<long double>(values.size()) <= kExactScaleLimit;
}

}  // namespace

NumberSet::NumberSet(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("NumberSet: at least one value is required");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument(
          fmt::format("NumberSet: values must be positive and finite, got {}", v));
    }
  }
  std::sort(values.begin(), values.end());
  distinct_ = std::adjacent_find(values.begin(), values.end()) == values.end();
  integral_ = exact_path_eligible(values);
  values_ = std::move(values);
}

double NumberSet::value_at(int k) const {
  if (k < 1 || k > size()) {
    throw IndexOutOfRange(fmt::format("NumberSet: index {} outside 1..{}", k, size()));
  }
  return values_[static_cast<std::size_t>(k) - 1];
}

Sequence::Sequence(NumberSet set, std::vector<double> entries)
    : set_(std::move(set)), entries_(std::move(entries)) {
  std::vector<double> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (!std::ranges::equal(sorted, set_.values())) {
    throw MismatchedSets("Sequence: entries are not a permutation of the set");
  }
}

Sequence Sequence::ascending(NumberSet set) {
  std::vector<double> entries(set.values().begin(), set.values().end());
  return Sequence(std::move(set), std::move(entries));
}

Sequence Sequence::from_ranks(NumberSet set, std::span<const int> ranks) {
  const int n = set.size();
  if (static_cast<int>(ranks.size()) != n) {
    throw MismatchedSets(
        fmt::format("Sequence: order spec has {} entries, set has {}", ranks.size(), n));
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int r : ranks) {
    if (r < 1 || r > n) {
      throw IndexOutOfRange(fmt::format("Sequence: rank {} outside 1..{}", r, n));
    }
    if (used[static_cast<std::size_t>(r) - 1]) {
      throw MismatchedSets(fmt::format("Sequence: rank {} appears twice", r));
    }
    used[static_cast<std::size_t>(r) - 1] = true;
    entries.push_back(set.values()[static_cast<std::size_t>(r) - 1]);
  }
  return Sequence(std::move(set), std::move(entries));
}

double Sequence::at(int k) const {
  if (k < 1 || k > size()) {
    throw IndexOutOfRange(fmt::format("Sequence: position {} outside 1..{}", k, size()));
  }
  return entries_[static_cast<std::size_t>(k) - 1];
}

std::vector<int> Sequence::ranks() const {
  const auto values = set_.values();
  std::vector<bool> used(values.size(), false);
  std::vector<int> out;
  out.reserve(entries_.size());
  for (double e : entries_) {
    auto it = std::lower_bound(values.begin(), values.end(), e);
    auto idx = static_cast<std::size_t>(it - values.begin());
    while (used[idx]) ++idx;  // skip ties already assigned
    used[idx] = true;
    out.push_back(static_cast<int>(idx) + 1);
  }
  return out;
}

std::vector<ExactInt> Sequence::exact_entries() const {
  if (!set_.integral()) {
    throw std::logic_error("Sequence: exact_entries requires an integral set");
  }
  std::vector<ExactInt> out;
  out.reserve(entries_.size());
  for (double e : entries_) out.push_back(static_cast<ExactInt>(e));
  return out;
}

ExactInt exact_variance_numerator(std::span<const ExactInt> entries) {
  const auto n = static_cast<__int128>(entries.size());
  __int128 s = 0;       // running partial sum
  __int128 total = 0;   // sum of s_k
  __int128 squares = 0; // sum of s_k^2
  for (ExactInt c : entries) {
    s += c;
    total += s;
    squares += s * s;
  }
  return static_cast<ExactInt>(n * squares - total * total);
}

std::optional<ExactInt> exact_variance_numerator(const Sequence& seq) {
  if (!seq.set().integral()) return std::nullopt;
  const auto ints = seq.exact_entries();
  return exact_variance_numerator(std::span<const ExactInt>(ints));
}

PartialSumStats partial_sums(const Sequence& seq) {
  const auto entries = seq.entries();
  const int n = seq.size();

  PartialSumStats stats;
  stats.sums.reserve(static_cast<std::size_t>(n));
  long double acc = 0.0L;
  long double total = 0.0L;
  long double squares = 0.0L;
  for (double c : entries) {
    acc += c;
    stats.sums.push_back(static_cast<double>(acc));
    total += acc;
    squares += acc * acc;
  }
  const long double mean = total / n;
  stats.mean = static_cast<double>(mean);
  stats.variance = static_cast<double>(squares / n - mean * mean);

  if (seq.set().integral()) {
    const auto ints = seq.exact_entries();
    const ExactInt num = exact_variance_numerator(std::span<const ExactInt>(ints));
    stats.exact_numerator = num;
    // Derive the reported value from the exact numerator so that equal
    // sequences print identically.
    stats.variance = static_cast<double>(num) / (static_cast<double>(n) * n);
  }
  return stats;
}

double variance(const Sequence& seq) { return partial_sums(seq).variance; }

double partial_mean(const PartialSumStats& stats, int i, int j) {
  const int n = static_cast<int>(stats.sums.size());
  if (i < 1 || j <= i || j > n + 1) {
    throw IndexOutOfRange(
        fmt::format("partial_mean: want 1 <= i < j <= {}, got i={} j={}", n + 1, i, j));
  }
  long double w = 0.0L;
  for (int k = i; k < j; ++k) w += stats.sums[static_cast<std::size_t>(k) - 1];
  return static_cast<double>(w / (j - i));
}

}  // namespace varseq
