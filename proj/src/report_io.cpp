#include "tempoflow/report_io.hpp"

#include <algorithm>

namespace tempoflow {

Json rational_json(const Rational& q) { return to_string(q); }

Json optional_rational_json(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

Json witness_json(const FlowOverTime& f, const Rational& value) {
  Json edges = Json::object();
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    if (f.segments(e).empty()) continue;
    Json segs = Json::array();
    for (const auto& s : f.segments(e)) segs.push_back({{"from", s.from}, {"to", s.to}, {"rate", to_string(s.rate)}});
    edges[std::to_string(e)] = std::move(segs);
  }
  return {{"horizon", f.horizon()}, {"value", to_string(value)}, {"edges", std::move(edges)}};
}

Json orientation_json(const UndirectedNetwork& network, const Orientation& sigma) {
  Json j = Json::object();
  for (EdgeId e = 0; e < sigma.size(); ++e) {
    const auto& [tail, head] = sigma.arc(e);
    j[std::to_string(e)] = network.node_name(tail) + ">" + network.node_name(head);
  }
  return j;
}

Json price_report_json(const UndirectedNetwork& network, const PriceReport& r) {
  Json j;
  const bool flow = r.objective == Objective::flow_at_horizon;
  j["objective"] = flow ? "flow" : "time";
  j["horizon"] = r.horizon ? Json(*r.horizon) : Json(nullptr);
  j["undirected"] = to_string(r.undirected);
  j["oriented"] = optional_rational_json(r.oriented);
  j["ratio"] = r.ratio ? Json(to_string(*r.ratio)) : Json("inf");
  j["witness_mask"] = r.witness_mask;
  j["witness"] = orientation_json(network, r.witness);
  if (!flow) {
    j["undirected_integral_horizon"] =
        r.undirected_integral_horizon ? Json(*r.undirected_integral_horizon) : Json(nullptr);
    j["oriented_integral_horizon"] = r.oriented_integral_horizon ? Json(*r.oriented_integral_horizon) : Json(nullptr);
  }
  return j;
}

Json pattern_json(const EarliestArrivalPattern& p) {
  Json values = Json::array();
  for (const auto& v : p.values) values.push_back(to_string(v));
  return {{"max_time", p.max_time()}, {"values", std::move(values)}};
}

Json quickest_json(const QuickestTime& q) {
  return {{"feasible", q.feasible()},
          {"time", q.ceil_infimum ? Json(*q.ceil_infimum) : Json(nullptr)},
          {"integral_horizon", q.integral_horizon ? Json(*q.integral_horizon) : Json(nullptr)}};
}

std::string format_table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      out += cell;
      if (c + 1 < width.size()) out += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& row : rows) out += line(row);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tempoflow
