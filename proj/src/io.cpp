#include "varseq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace varseq {

namespace {

std::string strip(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

bool is_order_line(const std::string& line) { return line.rfind("order:", 0) == 0; }

std::vector<int> parse_ranks(const std::string& body, int line_no) {
  std::vector<int> ranks;
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const std::string t = strip(token);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw ParseError(fmt::format("'{}' is not a valid rank", t), line_no);
    }
    ranks.push_back(value);
  }
  if (ranks.empty()) {
    throw ParseError("empty order spec", line_no);
  }
  return ranks;
}

double parse_value(const std::string& token, int line_no) {
  double v = 0.0;
  try {
    std::size_t consumed = 0;
    v = std::stod(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw ParseError(fmt::format("'{}' is not a number", token), line_no);
  }
  if (!std::isfinite(v) || v <= 0.0) {
    throw ParseError(fmt::format("values must be positive, got '{}'", token), line_no);
  }
  return v;
}

}  // namespace

Sequence Instance::sequence() const {
  if (order) return Sequence::from_ranks(set, *order);
  return Sequence::ascending(set);
}

Instance parse_instance(std::istream& in) {
  std::vector<double> values;
  std::optional<std::vector<int>> order;
  std::optional<int> order_line;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (is_order_line(line)) {
      if (order) {
        throw ParseError(fmt::format("second order spec (first on line {})", *order_line),
                         line_no);
      }
      order = parse_ranks(line.substr(6), line_no);
      order_line = line_no;
      continue;
    }
    values.push_back(parse_value(line, line_no));
  }

  if (values.empty()) {
    throw ParseError("no values found in instance", line_no);
  }

  try {
    NumberSet set(std::move(values));
    if (order) {
      Sequence::from_ranks(set, *order);  // surface bad specs at parse time
    }
    return Instance{std::move(set), std::move(order)};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), order_line.value_or(line_no));
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path), 0);
  return parse_instance(in);
}

std::vector<int> parse_order_spec(const std::string& spec) {
  std::string body = strip(spec);
  if (is_order_line(body)) body = strip(body.substr(6));
  return parse_ranks(body, 0);
}

std::vector<std::vector<int>> parse_order_list(std::istream& in) {
  std::vector<std::vector<int>> specs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (is_order_line(line)) line = strip(line.substr(6));
    specs.push_back(parse_ranks(line, line_no));
  }
  if (specs.empty()) {
    throw ParseError("no order specs found in candidates file", line_no);
  }
  return specs;
}

std::vector<std::vector<int>> load_order_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path), 0);
  return parse_order_list(in);
}

}  // namespace varseq
