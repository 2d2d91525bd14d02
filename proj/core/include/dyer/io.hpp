#pragma once

// JSON formats.
//
// Graph files:
//   {"vertices": [{"name": "x", "order": 2}, {"name": "y", "order": "inf"}],
//    "edges":    [{"ends": ["x", "y"], "label": 3}]}
//
// Rational functions: coefficient arrays, lowest power first, each
// coefficient a decimal string:
//   {"numerator": ["1", "1"], "denominator": ["1", "-1"], "method": "amalgam"}

#include <filesystem>
#include <string>
#include <string_view>

#include "dyer/graph.hpp"
#include "dyer/ratfun.hpp"

namespace dyer {

/// Parses the graph schema without Dyer-graph validation. Throws
/// ValidationError on malformed JSON or schema violations.
RawGraph parse_raw_graph(std::string_view json_text);

/// parse_raw_graph followed by validate.
DyerGraph parse_graph(std::string_view json_text);
/// Throws ValidationError if the file cannot be read or is invalid.
DyerGraph load_graph(const std::filesystem::path& path);

std::string graph_to_json(const DyerGraph& graph);

/// "method" is omitted when empty.
std::string rational_function_to_json(const RationalFunction& f, const std::string& method = "");
/// Throws std::invalid_argument on schema violations or a zero denominator.
RationalFunction rational_function_from_json(std::string_view json_text);

}  // namespace dyer
