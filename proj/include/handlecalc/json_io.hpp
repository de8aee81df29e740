#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "handlecalc/chart.hpp"
#include "handlecalc/rewrite.hpp"
#include "handlecalc/simplifier.hpp"

namespace hcalc {

using json = nlohmann::json;

// Every parser throws ParseError with a JSON pointer to the offending field.

json to_json(const Handle& h);
json to_json(const HandleConfig& cfg);
HandleConfig config_from_json(const json& j, const std::string& ptr = "");

json to_json(const ChartStats& ch);
ChartStats chart_from_json(const json& j, const std::string& ptr = "");

json to_json(const RewriteStep& step);
RewriteStep step_from_json(const json& j, int degree, const std::string& ptr = "");

json to_json(const RewriteTrace& trace);
RewriteTrace trace_from_json(const json& j, const std::string& ptr = "");

json to_json(const NormalFormReport& report);
NormalFormReport report_from_json(const json& j, const std::string& ptr = "");

json to_json(const ChartTotals& t);
json to_json(const BoundsReport& r);
json to_json(const StatsPlan& plan);
json to_json(const std::vector<Violation>& violations);
json to_json(const TraceVerdict& v);

// Top-level input: dispatches on the "kind" field ("config" or "chart").
using Input = std::variant<HandleConfig, ChartStats>;
Input input_from_json(const json& j);

// Parses text, converting syntax errors into ParseError.
json parse_json_text(const std::string& text);

}  // namespace hcalc
