#pragma once

#include <json.hpp>

#include "varseq/construct.hpp"
#include "varseq/core.hpp"
#include "varseq/oracle.hpp"
#include "varseq/search.hpp"
#include "varseq/transforms.hpp"

namespace varseq {

/// Machine-readable report builders. Key order is fixed and numbers carry
/// their exact numerator/denominator whenever the integer path was used, so
/// byte-identical inputs produce byte-identical documents.
using Json = nlohmann::ordered_json;

Json sequence_json(const Sequence& seq);
Json stats_json(const PartialSumStats& stats);
Json trace_json(const TransformTrace& trace, int n);
Json optimal_json(const OptimalPair& pair);
Json oracle_json(const OracleResult& result);
Json search_json(const SearchReport& report, const std::string& strategy_name);
Json ctv_screen_json(const std::vector<Sequence>& candidates,
                     const std::vector<Sequence>& surviving);

/// One named check of the `verify` suite.
struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

Json verify_json(const std::vector<PropertyCheck>& checks);

}  // namespace varseq
