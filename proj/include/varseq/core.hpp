#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace varseq {

/// Integer type of the exact arithmetic fast path. For integer inputs every
/// comparison is done on the n^2-scaled variance numerator
///     n^2 * f(C) = n * sum(s_k^2) - (sum(s_k))^2
/// which is an integer by construction, so orderings are free of
/// floating-point artifacts.
using ExactInt = std::int64_t;

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct MismatchedSets : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input multiset of positive numbers, stored in ascending order.
/// Sequences are permutations of one of these.
class NumberSet {
 public:
  /// Sorts ascending and validates. Throws std::invalid_argument when empty
  /// or when any value is non-positive or non-finite.
  explicit NumberSet(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }

  /// k-th smallest value, 1-based.
  double value_at(int k) const;

  /// True when no two values are equal. Uniqueness claims about optima only
  /// hold in this case; with ties the constructed optima are still optimal
  /// but may not be the only ones.
  bool distinct() const { return distinct_; }

  /// True when every value is an integer small enough for the exact
  /// n^2-scaled arithmetic to stay within ExactInt.
  bool integral() const { return integral_; }

  friend bool operator==(const NumberSet&, const NumberSet&) = default;

 private:
  std::vector<double> values_;
  bool distinct_ = true;
  bool integral_ = false;
};

/// One arrangement of a NumberSet. Positions are 1-based in every public
/// interface, matching the usual sequencing notation.
class Sequence {
 public:
  /// Throws MismatchedSets unless entries is a permutation of the set.
  Sequence(NumberSet set, std::vector<double> entries);

  /// The ascending arrangement.
  static Sequence ascending(NumberSet set);

  /// Builds the arrangement whose k-th element is the ranks[k]-th smallest
  /// set value (ranks are 1-based and must form a permutation of 1..n).
  static Sequence from_ranks(NumberSet set, std::span<const int> ranks);

  const NumberSet& set() const { return set_; }
  std::span<const double> entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  /// Element at 1-based position k. Throws IndexOutOfRange.
  double at(int k) const;

  /// 1-based ranks of each entry within the ascending set; ties are assigned
  /// in order of appearance. Inverse of from_ranks.
  std::vector<int> ranks() const;

  /// Entries as exact integers. Only valid when set().integral().
  std::vector<ExactInt> exact_entries() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  NumberSet set_;
  std::vector<double> entries_;
};

/// Partial sums s_k of a sequence together with their mean and variance,
/// i.e. the objective f(C) = (1/n) sum(s_k^2) - mean^2.
struct PartialSumStats {
  std::vector<double> sums;  ///< s_1..s_n, strictly increasing
  double mean = 0.0;         ///< (1/n) sum(s_k)
  double variance = 0.0;     ///< f(C)
  /// n^2 * f(C) when the exact path applies; variance == numerator / n^2.
  std::optional<ExactInt> exact_numerator;
};

PartialSumStats partial_sums(const Sequence& seq);

/// The objective f(C); equal to partial_sums(seq).variance.
double variance(const Sequence& seq);

/// Mean of s_i..s_{j-1}, the (i,j)-partial mean, for 1 <= i < j <= n+1.
/// partial_mean(stats, 1, n+1) equals stats.mean. Throws IndexOutOfRange.
double partial_mean(const PartialSumStats& stats, int i, int j);

/// n^2-scaled variance numerator of an integer arrangement. Inputs must be
/// positive and small enough that the result fits (see NumberSet::integral).
ExactInt exact_variance_numerator(std::span<const ExactInt> entries);

/// exact_variance_numerator lifted to a Sequence; empty unless the
/// sequence's set is integral.
std::optional<ExactInt> exact_variance_numerator(const Sequence& seq);

}  // namespace varseq
