#include <gtest/gtest.h>

#include "support.hpp"
#include "tempoflow/errors.hpp"
#include "tempoflow/generators.hpp"
#include "tempoflow/temporal.hpp"

using namespace tempoflow;

namespace {

Capacity cap_between(const UndirectedNetwork& net, const std::string& a, const std::string& b) {
  const NodeId x = *net.find_node(a);
  const NodeId y = *net.find_node(b);
  for (const auto& e : net.edges()) {
    if ((e.tail == x && e.head == y) || (e.tail == y && e.head == x)) return e.capacity;
  }
  throw std::runtime_error("no edge " + a + "-" + b);
}

Time transit_between(const UndirectedNetwork& net, const std::string& a, const std::string& b) {
  const NodeId x = *net.find_node(a);
  const NodeId y = *net.find_node(b);
  for (const auto& e : net.edges()) {
    if ((e.tail == x && e.head == y) || (e.tail == y && e.head == x)) return e.transit;
  }
  throw std::runtime_error("no edge " + a + "-" + b);
}

}  // namespace

TEST(Dimacs, ParseRoundTrip) {
  const auto f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 -1 2 0\n");
  EXPECT_EQ(f.variables, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0][1], (Literal{2, true}));
  EXPECT_EQ(to_dimacs(parse_dimacs(to_dimacs(f))), to_dimacs(f));
}

TEST(Dimacs, Rejects) {
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), PreconditionError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 0\n"), PreconditionError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), PreconditionError);
  EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), PreconditionError);
}

TEST(Dpll, AgreesWithTruthTable) {
  tftest::Rng rng(43);
  for (int round = 0; round < 200; ++round) {
    CnfFormula f;
    f.variables = tftest::uniform(rng, 1, 5);
    const int l = tftest::uniform(rng, 1, 12);
    for (int j = 0; j < l; ++j) {
      Clause c;
      for (auto& lit : c) lit = {tftest::uniform(rng, 1, f.variables), tftest::uniform(rng, 0, 1) == 1};
      f.clauses.push_back(c);
    }
    bool any = false;
    for (std::uint64_t a = 0; a < (1ULL << f.variables); ++a) any = any || satisfies(f, a);
    const auto got = satisfying_assignment(f);
    EXPECT_EQ(got.has_value(), any);
    if (got) EXPECT_TRUE(satisfies(f, *got));
  }
}

TEST(Partition, Basics) {
  EXPECT_EQ(make_partition({1, 1, 2}).L, 2);
  EXPECT_TRUE(has_partition(make_partition({1, 1, 2})));
  EXPECT_FALSE(has_partition(make_partition({1, 1, 4})));
  EXPECT_THROW(make_partition({1, 2}), PreconditionError);
  EXPECT_THROW(make_partition({0, 2}), PreconditionError);
  EXPECT_EQ(parse_partition("3 1\n2\n").a, (std::vector<std::int64_t>{3, 1, 2}));
  EXPECT_THROW(parse_partition("1 x"), PreconditionError);
}

TEST(Families, Fig1) {
  const auto net = gen_fig1(4);
  EXPECT_EQ(net.node_count(), 5);
  EXPECT_EQ(net.edge_count(), 5);
  EXPECT_EQ(cap_between(net, "s2", "j"), Capacity(Rational(1, 4)));
  EXPECT_EQ(cap_between(net, "t", "i"), Capacity(Rational(1, 4)));
  EXPECT_EQ(transit_between(net, "j", "t"), 3);
  EXPECT_EQ(net.horizon(), 4);
  EXPECT_EQ(max_flow_over_time_value(net, 4), 2);
  EXPECT_THROW(gen_fig1(1), PreconditionError);
}

TEST(Families, FlowPriceLowerBound) {
  const auto net = gen_flow_price_lb(8, Rational(1, 4), 1);
  EXPECT_EQ(transit_between(net, "v2", "v4"), 6);
  EXPECT_EQ(transit_between(net, "s1", "v3"), 8);
  EXPECT_EQ(transit_between(net, "v3", "t2"), 2);
  EXPECT_EQ(net.horizon(), 9);
  EXPECT_EQ(net.total_supply(), 3);
  EXPECT_EQ(max_flow_over_time_value(net, 9), 3);
  EXPECT_THROW(gen_flow_price_lb(8, Rational(1, 3), 1), PreconditionError);
  EXPECT_THROW(gen_flow_price_lb(8, Rational(1, 4), 3), PreconditionError);
}

TEST(Families, SingleTerminalLowerBounds) {
  const auto sink = gen_single_sink_lb(8, Rational(1, 4));
  EXPECT_EQ(sink.sinks().size(), 1u);
  EXPECT_EQ(max_flow_over_time_value(sink, *sink.horizon()), 2);
  EXPECT_TRUE(validate(gen_single_source_lb(2, Rational(1, 2))).empty());
  EXPECT_EQ(gen_single_source_lb(8, Rational(1, 4)).sources().size(), 1u);
}

TEST(Families, TimePrice) {
  const auto net = gen_time_price_single_sink(2, 2);
  EXPECT_EQ(net.node_count(), 9);
  EXPECT_EQ(net.balance(*net.find_node("s0")), 1);
  EXPECT_EQ(net.balance(*net.find_node("s1")), 18);
  EXPECT_EQ(net.balance(*net.find_node("t")), -19);
  EXPECT_EQ(cap_between(net, "w1", "t1"), Capacity(1));
  EXPECT_EQ(cap_between(net, "v2", "t2"), Capacity(18));
  EXPECT_EQ(transit_between(net, "v1", "v2"), 2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(gen_time_price_single_sink(k, 2).node_count(), 4 * k + 1);
    EXPECT_EQ(gen_time_price_single_source(k, 2).node_count(), 4 * k + 1);
    EXPECT_EQ(gen_time_price_tree(k, 2).node_count(), 4 * k);  // no super sink
    EXPECT_EQ(gen_time_price_single_source(k, 2).sources().size(), 1u);
    EXPECT_EQ(gen_time_price_single_sink(k, 2).sinks().size(), 1u);
  }
  EXPECT_THROW(gen_time_price_single_sink(0, 2), PreconditionError);
}

TEST(Families, UnitCapacityTree) {
  const auto net = gen_unit_capacity_tree(2, 2);
  for (const auto& e : net.edges()) EXPECT_EQ(e.capacity, Capacity(1));
  EXPECT_EQ(net.sources().size(), 2u);
  EXPECT_EQ(net.sinks().size(), 2u);
  EXPECT_EQ(net.edge_count(), net.node_count() - 1);
}

TEST(Families, Eaf) {
  const auto net = gen_eaf(36, 4);
  EXPECT_EQ(net.node_count(), 4);
  EXPECT_EQ(net.edge_count(), 5);
  EXPECT_EQ(cap_between(net, "s", "v2"), Capacity(36));
  EXPECT_EQ(transit_between(net, "v1", "t"), 2);
  EXPECT_THROW(gen_eaf(36, 3), PreconditionError);
  EXPECT_THROW(gen_eaf(0, 4), PreconditionError);
}
