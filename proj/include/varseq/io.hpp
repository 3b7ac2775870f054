#pragma once

#include <iosfwd>
#include <string>

#include "varseq/core.hpp"

namespace varseq {

/// Input file error carrying the 1-based offending line (0 when the problem
/// is not tied to a line, e.g. a missing file).
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line_number)
      : std::runtime_error(message), line(line_number) {}
  int line = 0;
};

/// A parsed instance file: the number set (one value per line) plus an
/// optional `order: i1,i2,...` line of 1-based ranks selecting a specific
/// arrangement. `#` starts a comment; blank lines are ignored.
struct Instance {
  NumberSet set;
  std::optional<std::vector<int>> order;

  /// The selected arrangement, or the ascending one when no order is given.
  Sequence sequence() const;
};

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

/// Parses a single `i1,i2,...` order spec (the `order:` prefix is allowed).
std::vector<int> parse_order_spec(const std::string& spec);

/// Parses a candidates file: one order spec per line, either bare
/// `i1,i2,...` or with the `order:` prefix. Comments and blanks as above.
std::vector<std::vector<int>> parse_order_list(std::istream& in);
std::vector<std::vector<int>> load_order_list(const std::string& path);

}  // namespace varseq
