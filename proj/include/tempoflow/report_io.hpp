#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tempoflow/flow_over_time.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/orientation.hpp"
#include "tempoflow/temporal.hpp"

namespace tempoflow {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Json optional_rational_json(const std::optional<Rational>& q);  // null when empty

// {"horizon", "value", "edges": {id: [{"from", "to", "rate"}]}}; edges
// without flow are omitted.
Json witness_json(const FlowOverTime& f, const Rational& value);
// {edge id: "tail>head"} by node name.
Json orientation_json(const UndirectedNetwork& network, const Orientation& sigma);
Json price_report_json(const UndirectedNetwork& network, const PriceReport& report);
Json pattern_json(const EarliestArrivalPattern& p);
Json quickest_json(const QuickestTime& q);

// Two-space separated columns, left aligned, header underlined with dashes.
std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows);

// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace tempoflow
