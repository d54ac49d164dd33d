#include "tempoflow/instance_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include "tempoflow/errors.hpp"

namespace tempoflow {

using nlohmann::ordered_json;

const UndirectedNetwork& Instance::undirected() const {
  if (!is_undirected()) throw PreconditionError("instance is directed; an undirected network is required");
  return std::get<UndirectedNetwork>(network);
}

const DirectedNetwork& Instance::directed() const {
  if (is_undirected()) throw PreconditionError("instance is undirected; a directed network is required");
  return std::get<DirectedNetwork>(network);
}

namespace {

ordered_json balances_json(const std::vector<std::string>& names, const std::vector<Rational>& balances) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < balances.size(); ++v) {
    if (balances[v] != 0) out[names[v]] = to_string(balances[v]);
  }
  return out;
}

template <EdgeKind Kind>
std::string to_json_impl(const NetworkOverTime<Kind>& net, const CommoditySet* commodities,
                         const Metadata& metadata) {
  ordered_json j;
  j["nodes"] = net.node_names();
  ordered_json edges = ordered_json::array();
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    edges.push_back({{"id", e},
                     {"tail", net.node_name(edge.tail)},
                     {"head", net.node_name(edge.head)},
                     {"undirected", Kind == EdgeKind::undirected},
                     {"capacity", to_string(edge.capacity)},
                     {"transit", edge.transit}});
  }
  j["edges"] = std::move(edges);
  j["balances"] = balances_json(net.node_names(), net.balances());
  j["horizon"] = net.horizon() ? ordered_json(*net.horizon()) : ordered_json(nullptr);
  if (commodities != nullptr) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : commodities->commodities) {
      cs.push_back({{"id", c.id}, {"balances", balances_json(net.node_names(), c.balances)}});
    }
    j["commodities"] = std::move(cs);
  }
  if (!metadata.empty()) {
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

std::string as_text(const ordered_json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw PreconditionError(std::string("expected string for ") + what);
}

std::vector<Rational> parse_balances(const ordered_json& obj, const std::map<std::string, NodeId>& ids,
                                     std::size_t n) {
  std::vector<Rational> out(n);
  if (obj.is_null()) return out;
  if (!obj.is_object()) throw PreconditionError("\"balances\" must be an object");
  for (const auto& [name, value] : obj.items()) {
    const auto it = ids.find(name);
    if (it == ids.end()) throw PreconditionError("balance for unknown node '" + name + "'");
    out[it->second] = parse_rational(as_text(value, "balance"));
  }
  return out;
}

}  // namespace

std::string instance_to_json(const UndirectedNetwork& network, const CommoditySet* commodities,
                             const Metadata& metadata) {
  return to_json_impl(network, commodities, metadata);
}

std::string instance_to_json(const DirectedNetwork& network, const CommoditySet* commodities,
                             const Metadata& metadata) {
  return to_json_impl(network, commodities, metadata);
}

Instance parse_instance(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::exception& ex) {
    throw PreconditionError(std::string("malformed instance JSON: ") + ex.what());
  }
  try {
    std::vector<std::string> names = j.at("nodes").get<std::vector<std::string>>();
    std::map<std::string, NodeId> ids;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (!ids.emplace(names[v], static_cast<NodeId>(v)).second) {
        throw PreconditionError("duplicate node '" + names[v] + "'");
      }
    }
    const auto& jedges = j.at("edges");
    std::vector<Edge> edges(jedges.size());
    std::vector<bool> seen(jedges.size(), false);
    std::set<bool> kinds;
    for (const auto& je : jedges) {
      const auto id = je.at("id").get<long long>();
      if (id < 0 || id >= static_cast<long long>(edges.size()) || seen[id]) {
        throw PreconditionError("edge ids must be dense, unique and 0-based");
      }
      seen[id] = true;
      auto lookup = [&](const char* key) {
        const auto name = je.at(key).get<std::string>();
        const auto it = ids.find(name);
        if (it == ids.end()) throw PreconditionError("edge " + std::to_string(id) + " uses unknown node '" + name + "'");
        return it->second;
      };
      Edge& edge = edges[id];
      edge.tail = lookup("tail");
      edge.head = lookup("head");
      edge.capacity = parse_capacity(as_text(je.at("capacity"), "capacity"));
      if (!je.at("transit").is_number_integer()) {
        throw PreconditionError("edge " + std::to_string(id) + ": transit must be an integer");
      }
      edge.transit = je.at("transit").get<Time>();
      kinds.insert(je.value("undirected", true));
    }
    if (kinds.size() > 1) throw PreconditionError("mixed directed and undirected edges are not supported");
    std::vector<Rational> balances = parse_balances(j.value("balances", ordered_json()), ids, names.size());
    std::optional<Time> horizon;
    if (j.contains("horizon") && !j["horizon"].is_null()) horizon = j["horizon"].get<Time>();

    Instance inst{UndirectedNetwork{}, std::nullopt, {}};
    const bool undirected = kinds.empty() || *kinds.begin();
    if (undirected) {
      inst.network = UndirectedNetwork(names, std::move(edges), std::move(balances), horizon);
    } else {
      inst.network = DirectedNetwork(names, std::move(edges), std::move(balances), horizon);
    }
    if (j.contains("commodities")) {
      CommoditySet cs;
      for (const auto& jc : j["commodities"]) {
        cs.commodities.push_back(
            Commodity{jc.at("id").get<int>(), parse_balances(jc.at("balances"), ids, names.size())});
      }
      const auto report = validate(cs, static_cast<NodeId>(names.size()));
      if (!report.empty()) throw PreconditionError("invalid commodities: " + report.front());
      inst.commodities = std::move(cs);
    }
    if (j.contains("metadata") && j["metadata"].is_object()) {
      for (const auto& [k, v] : j["metadata"].items()) {
        inst.metadata.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    std::visit([](const auto& net) { require_valid(net); }, inst.network);
    return inst;
  } catch (const ordered_json::exception& ex) {
    throw PreconditionError(std::string("malformed instance: ") + ex.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
  out << text;
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

}  // namespace tempoflow
