#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "okp/bounds.hpp"
#include "okp/constructions.hpp"
#include "okp/geometry.hpp"
#include "okp/search.hpp"

namespace okp {

using json = nlohmann::json;

/// Rounds to `digits` significant decimal digits (the printed form of %.*g).
double round_sig(double value, int digits);

/// Same rounding, rendered as text; NaN prints as "nan".
std::string format_sig(double value, int digits);

/// {"n": int, "edges": [[a,b],...], "coloring": [0|1,...]}; edges sorted with a < b.
json graph_to_json(const ConvexGraph& g);

/// Throws InputError when the document does not describe a valid graph.
ConvexGraph graph_from_json(const json& doc);

/// Throws json::parse_error on malformed text.
ConvexGraph parse_graph(std::string_view text);

json outercopy_to_json(const OuterCopyGraph& g);

json search_result_to_json(const SearchResult& r);

json bound_report_to_json(const BoundReport& report, int digits);

/// Columns: name, kind, value, valid, source.
std::string bound_report_to_csv(const BoundReport& report, int digits);

}  // namespace okp
