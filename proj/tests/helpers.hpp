#pragma once

// Test-side oracles and generators. The oracles deliberately take different
// algebraic routes than the library so the two can check each other.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "varseq/core.hpp"
#include "varseq/transforms.hpp"

namespace varseq::testing {

// n^2 * f(C) via the definitional route: sum((n*s_k - T)^2) / n with
// T = sum(s_k). The division is exact.
inline ExactInt definitional_numerator(const std::vector<ExactInt>& entries) {
  const auto n = static_cast<__int128>(entries.size());
  std::vector<__int128> sums;
  __int128 acc = 0, total = 0;
  for (ExactInt c : entries) {
    acc += c;
    sums.push_back(acc);
    total += acc;
  }
  __int128 squares = 0;
  for (__int128 s : sums) {
    const __int128 d = n * s - total;
    squares += d * d;
  }
  return static_cast<ExactInt>(squares / n);
}

// f(C) via the definitional two-pass route in floating point.
inline double definitional_variance(const std::vector<double>& entries) {
  std::vector<long double> sums;
  long double acc = 0.0L;
  for (double c : entries) {
    acc += c;
    sums.push_back(acc);
  }
  const long double mean =
      std::accumulate(sums.begin(), sums.end(), 0.0L) / static_cast<long double>(sums.size());
  long double squares = 0.0L;
  for (long double s : sums) squares += (s - mean) * (s - mean);
  return static_cast<double>(squares / static_cast<long double>(sums.size()));
}

// The explicit residual formula for the total gain of a sum-'n+2' transform,
// evaluated on the ORIGINAL entries and the flip set I. Returns the
// n^2-scaled gain.
inline ExactInt sum_n2_residual_numerator(const std::vector<ExactInt>& c1based,
                                          const std::vector<int>& flip_ks) {
  const int n = static_cast<int>(c1based.size()) - 1;  // entries at [1..n]
  const int u = (n + 1) / 2;
  auto in_flips = [&](int k) {
    return std::find(flip_ks.begin(), flip_ks.end(), k) != flip_ks.end();
  };
  __int128 total = 0;
  for (int m : flip_ks) {
    __int128 left = 0, right = 0;
    for (int k = 2; k < m; ++k) {
      if (!in_flips(k)) left += static_cast<__int128>(k - 1) * (c1based[k] - c1based[n + 2 - k]);
    }
    for (int k = m + 1; k <= u; ++k) {
      if (!in_flips(k)) {
        right += static_cast<__int128>(n + 2 - 2 * k) * (c1based[k] - c1based[n + 2 - k]);
      }
    }
    const __int128 gap = c1based[n + 2 - m] - c1based[m];
    total += 2 * gap * (static_cast<__int128>(n + 2 - 2 * m) * left +
                        static_cast<__int128>(m - 1) * right);
  }
  return static_cast<ExactInt>(total);
}

inline std::vector<double> random_distinct_values(std::mt19937_64& rng, int n, int max_value) {
  std::vector<int> pool(static_cast<std::size_t>(max_value));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<double> values;
  for (int k = 0; k < n; ++k) values.push_back(pool[static_cast<std::size_t>(k)]);
  return values;
}

inline std::vector<double> random_values(std::mt19937_64& rng, int n, int max_value) {
  std::uniform_int_distribution<int> dist(1, max_value);
  std::vector<double> values;
  for (int k = 0; k < n; ++k) values.push_back(dist(rng));
  return values;
}

inline Sequence random_arrangement(std::mt19937_64& rng, const NumberSet& set) {
  std::vector<double> entries(set.values().begin(), set.values().end());
  std::shuffle(entries.begin(), entries.end(), rng);
  return Sequence(set, std::move(entries));
}

inline Sequence make_sequence(std::vector<double> entries) {
  return Sequence(NumberSet(entries), entries);
}

// Calls fn for every distinct arrangement of the set's values.
template <typename Fn>
void for_each_arrangement(const NumberSet& set, Fn&& fn) {
  std::vector<double> entries(set.values().begin(), set.values().end());
  do {
    fn(Sequence(set, entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

}  // namespace varseq::testing
