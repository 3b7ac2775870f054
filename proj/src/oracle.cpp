#include "varseq/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

namespace varseq {

namespace {

constexpr double kFloatGroupTolerance = 1e-9;

// Objective value on the n^2 scale, so both paths share one formula and the
// float path avoids a needless division per arrangement.
ExactInt scaled_objective(std::span<const ExactInt> arr) {
  return exact_variance_numerator(arr);
}

double scaled_objective(std::span<const double> arr) {
  long double s = 0.0L, total = 0.0L, squares = 0.0L;
  for (double c : arr) {
    s += c;
    total += s;
    squares += s * s;
  }
  const auto n = static_cast<long double>(arr.size());
  return static_cast<double>(n * squares - total * total);
}

// Three-way comparison in the objective's direction: +1 when `a` is strictly
// better than `b`, 0 for a tie.
int classify(ExactInt a, ExactInt b, bool maximize) {
  if (a == b) return 0;
  return ((a > b) == maximize) ? 1 : -1;
}

int classify(double a, double b, bool maximize) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) <= kFloatGroupTolerance * scale) return 0;
  return ((a > b) == maximize) ? 1 : -1;
}

template <typename T>
struct TaskResult {
  using Value = decltype(scaled_objective(std::span<const T>{}));
  Value best{};
  std::vector<std::vector<T>> optima;
  std::uint64_t explored = 0;
  bool any = false;
};

// Enumerates all distinct arrangements with arr[0..free_from) held fixed.
template <typename T>
TaskResult<T> enumerate_suffix(std::vector<T> arr, std::size_t free_from, bool maximize) {
  TaskResult<T> out;
  std::sort(arr.begin() + static_cast<std::ptrdiff_t>(free_from), arr.end());
  do {
    const auto value = scaled_objective(std::span<const T>(arr));
    ++out.explored;
    const int cmp = out.any ? classify(value, out.best, maximize) : 1;
    if (cmp > 0) {
      out.best = value;
      out.optima.assign(1, arr);
      out.any = true;
    } else if (cmp == 0) {
      out.optima.push_back(arr);
    }
  } while (std::next_permutation(arr.begin() + static_cast<std::ptrdiff_t>(free_from),
                                 arr.end()));
  return out;
}

template <typename T>
OracleResult run(const NumberSet& set, Objective objective, const OracleOptions& options,
                 const std::vector<T>& ascending) {
  const bool maximize = objective == Objective::MaxVariance;
  const std::size_t prefix_len =
      (options.pin_first && maximize && set.size() > 1) ? 1 : 0;

  // One task per distinct choice of the first free element; each task
  // enumerates suffix permutations in lexicographic order, so concatenating
  // task optima in task order keeps the final list lexicographic.
  std::vector<std::vector<T>> starts;
  for (std::size_t pick = prefix_len; pick < ascending.size(); ++pick) {
    if (pick > prefix_len && ascending[pick] == ascending[pick - 1]) continue;
    std::vector<T> arr = ascending;
    std::rotate(arr.begin() + static_cast<std::ptrdiff_t>(prefix_len),
                arr.begin() + static_cast<std::ptrdiff_t>(pick),
                arr.begin() + static_cast<std::ptrdiff_t>(pick) + 1);
    starts.push_back(std::move(arr));
  }

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(starts.size()));
  const bool parallel = threads > 1 && set.size() - static_cast<int>(prefix_len) >= 9;

  std::vector<TaskResult<T>> results(starts.size());
  if (!parallel) {
    for (std::size_t t = 0; t < starts.size(); ++t) {
      results[t] = enumerate_suffix(std::move(starts[t]), prefix_len + 1, maximize);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < starts.size(); t = next.fetch_add(1)) {
          results[t] = enumerate_suffix(std::move(starts[t]), prefix_len + 1, maximize);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic merge in task order.
  OracleResult merged;
  merged.objective = objective;
  typename TaskResult<T>::Value best{};
  std::vector<std::vector<T>> optima;
  bool any = false;
  for (auto& task : results) {
    merged.explored += task.explored;
    if (!task.any) continue;
    const int cmp = any ? classify(task.best, best, maximize) : 1;
    if (cmp > 0) {
      best = task.best;
      optima = std::move(task.optima);
      any = true;
    } else if (cmp == 0) {
      for (auto& arr : task.optima) optima.push_back(std::move(arr));
    }
  }

  const double n2 = static_cast<double>(set.size()) * set.size();
  merged.exact = std::is_same_v<T, ExactInt>;
  if (merged.exact) {
    merged.best_numerator = static_cast<ExactInt>(best);
  }
  merged.best_value = static_cast<double>(best) / n2;
  merged.optima.reserve(optima.size());
  for (const auto& arr : optima) {
    std::vector<double> entries(arr.begin(), arr.end());
    merged.optima.emplace_back(set, std::move(entries));
  }
  return merged;
}

}  // namespace

OracleResult brute_force(const NumberSet& set, Objective objective,
                         const OracleOptions& options) {
  const int limit = std::min(options.limit_n, kOracleHardLimit);
  if (set.size() > limit) {
    throw InstanceTooLarge(fmt::format(
        "brute_force: n={} exceeds the limit of {} (hard cap {})", set.size(), limit,
        kOracleHardLimit));
  }
  if (set.integral()) {
    std::vector<ExactInt> ascending;
    ascending.reserve(set.values().size());
    for (double v : set.values()) ascending.push_back(static_cast<ExactInt>(v));
    return run(set, objective, options, ascending);
  }
  const std::vector<double> ascending(set.values().begin(), set.values().end());
  return run(set, objective, options, ascending);
}

}  // namespace varseq
