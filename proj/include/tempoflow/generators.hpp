#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempoflow/network.hpp"

namespace tempoflow {

struct Literal {
  int variable = 1;  // 1-based
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;
};

// Throws PreconditionError on a malformed formula.
void require_valid(const CnfFormula& formula);
// DIMACS subset: comments, one "p cnf k l" header, exactly 3 literals per
// clause terminated by 0.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& formula);
// Bit i-1 of `assignment` is the value of x_i.
bool satisfies(const CnfFormula& formula, std::uint64_t assignment);
// Small DPLL; k <= 20.
std::optional<std::uint64_t> satisfying_assignment(const CnfFormula& formula);

struct PartitionInstance {
  std::vector<std::int64_t> a;
  std::int64_t L = 0;
};

// Builds from the integers; throws if some a_i < 1 or the sum is odd.
PartitionInstance make_partition(std::vector<std::int64_t> a);
PartitionInstance parse_partition(std::string_view text);
bool has_partition(const PartitionInstance& p);

// ---------------------------------------------------------------------------
// Instance families (all throw PreconditionError on bad parameters)

UndirectedNetwork gen_fig1(Time T);
UndirectedNetwork gen_flow_price_lb(Time T, const Rational& delta, Time eps);
UndirectedNetwork gen_single_sink_lb(Time T, const Rational& delta);
UndirectedNetwork gen_single_source_lb(Time T, const Rational& delta);
UndirectedNetwork gen_time_price_single_sink(int k, Time T);
UndirectedNetwork gen_time_price_single_source(int k, Time T);
UndirectedNetwork gen_time_price_tree(int k, Time T);
UndirectedNetwork gen_unit_capacity_tree(int k, Time T);
UndirectedNetwork gen_eaf(const Rational& U, Time T);

}  // namespace tempoflow
