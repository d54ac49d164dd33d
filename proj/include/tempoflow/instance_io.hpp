#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tempoflow/network.hpp"

namespace tempoflow {

// Ordered (key, value) pairs echoed under "metadata".
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Instance {
  std::variant<UndirectedNetwork, DirectedNetwork> network;
  std::optional<CommoditySet> commodities;
  Metadata metadata;

  bool is_undirected() const { return std::holds_alternative<UndirectedNetwork>(network); }
  const UndirectedNetwork& undirected() const;  // throws PreconditionError otherwise
  const DirectedNetwork& directed() const;
};

std::string instance_to_json(const UndirectedNetwork& network, const CommoditySet* commodities = nullptr,
                             const Metadata& metadata = {});
std::string instance_to_json(const DirectedNetwork& network, const CommoditySet* commodities = nullptr,
                             const Metadata& metadata = {});

// Throws PreconditionError on malformed JSON, unknown node names, duplicate
// ids, mixed directedness or invariant violations.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tempoflow
