#include "gainchrom/gainchrom.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gainchrom;

namespace {

std::vector<GainEdge> edges_of(const IntegralGainGraph& g) { return g.edges(); }

EdgeSubset all_edges(const IntegralGainGraph& g) {
  EdgeSubset s(g.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

// gain graphs

TEST(GainGraph, CanonicalStorage) {
  const IntegralGainGraph g(3, {{2, 1, 4}, {3, 3, -2}, {1, 3, -1}});
  EXPECT_EQ(g.edge(0), (GainEdge{1, 2, -4}));
  EXPECT_EQ(g.edge(1), (GainEdge{3, 3, 2}));
  EXPECT_EQ(g.edge(2), (GainEdge{1, 3, -1}));
  EXPECT_THROW(IntegralGainGraph(2, {{1, 3, 0}}), std::invalid_argument);
}

TEST(GainGraph, ModularStorage) {
  const ModularGainGraph g(2, 5, {{2, 1, 1}, {1, 1, 7}});
  EXPECT_EQ(g.edges()[0], (GainEdge{1, 2, 4}));
  EXPECT_EQ(g.edges()[1], (GainEdge{1, 1, 2}));
}

TEST(GainGraph, Switching) {
  const IntegralGainGraph e(2, {{1, 2, 3}});
  EXPECT_EQ(switched(e, {{0, 0}}), e);
  EXPECT_EQ(edges_of(switched(IntegralGainGraph(2, {{1, 2, 0}}), {{0, 5}})), (std::vector<GainEdge>{{1, 2, 5}}));
  EXPECT_EQ(edges_of(switched(IntegralGainGraph(1, {{1, 1, 3}}), {{9}})), (std::vector<GainEdge>{{1, 1, 3}}));
}

TEST(GainGraph, DeleteEdges) {
  const auto c2 = catalan(2);
  EXPECT_EQ(delete_edges(c2, all_edges(c2)), IntegralGainGraph(2));
  EXPECT_EQ(delete_edges(c2, {}), c2);
  EXPECT_EQ(simplify(delete_neutral_edges(c2)).edges().size(), hollow_catalan(2).size());
  EXPECT_EQ(delete_neutral_edges(c2), hollow_catalan(2));
}

TEST(GainGraph, Balance) {
  const auto path = IntegralGainGraph(3, {{1, 2, 5}, {2, 3, -7}});
  EXPECT_TRUE(is_balanced(path));
  const IntegralGainGraph digon(2, {{1, 2, 0}, {1, 2, 1}});
  EXPECT_FALSE(is_balanced(digon));
  EXPECT_TRUE(is_balanced(IntegralGainGraph(1, {{1, 1, 0}})));
  EXPECT_FALSE(is_balanced(IntegralGainGraph(1, {{1, 1, 1}})));
  EXPECT_TRUE(is_balanced(IntegralGainGraph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 2}})));
  EXPECT_FALSE(is_balanced(IntegralGainGraph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}})));
}

TEST(GainGraph, ComponentStats) {
  const IntegralGainGraph digon(2, {{1, 2, 0}, {1, 2, 1}});
  EXPECT_EQ(components_stats(IntegralGainGraph(4), {}).components, 4);
  EXPECT_EQ(components_stats(IntegralGainGraph(4), {}).balanced, 4);
  const auto s = components_stats(digon, {0, 1});
  EXPECT_EQ(s.components, 1);
  EXPECT_EQ(s.balanced, 0);
  const auto t = components_stats(IntegralGainGraph(3, {{1, 2, 0}}), {0});
  EXPECT_EQ(t.components, 2);
  EXPECT_EQ(t.balanced, 2);
}

TEST(GainGraph, ContractNeutralSet) {
  const auto c = contract_neutral_set(catalan(2), {0});
  EXPECT_EQ(c.order(), 1);
  EXPECT_EQ(c.edges(), (std::vector<GainEdge>{{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(c.labels(), (std::vector<std::vector<Vertex>>{{1, 2}}));
  EXPECT_EQ(contract_neutral_set(catalan(2), {}), catalan(2));
  const IntegralGainGraph k3(3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 0}});
  const auto one = contract_neutral_set(k3, {0, 1});
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.edges(), (std::vector<GainEdge>{{1, 1, 0}}));
  EXPECT_THROW(contract_neutral_set(catalan(2), {1}), NonNeutralEdgeInSet);
}

TEST(GainGraph, ContractBalancedSet) {
  // path 1->2 of gain 3 contracted, with (2,3,g) hanging off vertex 2
  for (Gain g : {-2, 0, 5}) {
    const IntegralGainGraph h(3, {{1, 2, 3}, {2, 3, g}});
    const auto eta = top_switching_function(h, {0});
    EXPECT_EQ(eta.values, (std::vector<Gain>{3, 0, 0}));
    const auto c = contract_balanced_set(h, {0});
    EXPECT_EQ(c.order(), 2);
    EXPECT_EQ(c.edges(), (std::vector<GainEdge>{{1, 2, g}}));
  }
  EXPECT_EQ(contract_balanced_set(catalan(3), {0}), contract_neutral_set(catalan(3), {0}));
  EXPECT_THROW(contract_balanced_set(catalan(2), {0, 1}), UnbalancedSet);
}

TEST(GainGraph, ContractBalancedSetIgnoresBase) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Gain> gain(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntegralGainGraph g(4, {{1, 2, gain(rng)}, {2, 3, gain(rng)}, {3, 4, gain(rng)}, {1, 4, gain(rng)},
                                  {2, 4, gain(rng)}});
    const EdgeSubset tree{0, 1, 2};
    const auto ref = contract_balanced_set(g, tree);
    for (Vertex base = 1; base <= 4; ++base) EXPECT_EQ(contract_balanced_set(g, tree, {base}), ref);
    for (long long q = 1; q <= 6; ++q) EXPECT_EQ(chi_modular(ref, q), oracle::modular_count(ref, q));
  }
}

TEST(GainGraph, ContractPartition) {
  const auto all = SetPartition::singletons(3);
  EXPECT_EQ(contract_partition(shi(3), all), shi(3));
  const auto whole = parse_partition("1 2");
  EXPECT_EQ(contract_partition(linial(2), whole).edges(), (std::vector<GainEdge>{{1, 1, 1}}));
  const auto hc = contract_partition(hollow_catalan(2), whole);
  EXPECT_EQ(hc.edges(), (std::vector<GainEdge>{{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(simplify(hc).edges(), (std::vector<GainEdge>{{1, 1, 1}}));
}

TEST(GainGraph, Simplify) {
  EXPECT_EQ(simplify(IntegralGainGraph(2, {{1, 2, 1}, {1, 2, 1}})).size(), 1u);
  EXPECT_EQ(simplify(IntegralGainGraph(2, {{1, 2, 1}, {1, 2, -1}})).size(), 2u);
  EXPECT_EQ(simplify(IntegralGainGraph(1, {{1, 1, 3}, {1, 1, -3}})).size(), 1u);
}

TEST(GainGraph, AddNeutralComplete) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(simplify(add_neutral_complete(linial(n))).size(), shi(n).size());
    EXPECT_EQ(chi_integral(add_neutral_complete(linial(n)), n + 2), chi_integral(shi(n), n + 2));
    EXPECT_EQ(add_neutral_complete(hollow_catalan(n)).size(), catalan(n).size());
    EXPECT_EQ(zero_free_chromatic_poly(add_neutral_complete(hollow_catalan(n))), zero_free_chromatic_poly(catalan(n)));
  }
  EXPECT_EQ(add_neutral_complete(IntegralGainGraph(2)).edges(), (std::vector<GainEdge>{{1, 2, 0}}));
}

TEST(GainGraph, MaxCircleGain) {
  EXPECT_FALSE(max_circle_gain(IntegralGainGraph(3, {{1, 2, 4}, {2, 3, 1}})).has_value());
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(max_circle_gain(catalan(n)), n);
    EXPECT_EQ(max_circle_gain(shi(n)), n - 1);
  }
  EXPECT_EQ(max_circle_gain(linial(3)), 1);
  EXPECT_EQ(max_circle_gain(linial(4)), 2);
  EXPECT_EQ(max_circle_gain(IntegralGainGraph(1, {{1, 1, 4}})), 4);
}

TEST(GainGraph, InducedAndUnion) {
  const auto c3 = catalan(3);
  EXPECT_EQ(induced_subgraph(c3, {1, 3}).size(), 3u);
  const auto u = disjoint_union(shi(2), linial(2));
  EXPECT_EQ(u.order(), 4);
  EXPECT_EQ(u.edges().back(), (GainEdge{3, 4, 1}));
}

// set partitions and combinatorics

TEST(Partitions, Enumeration) {
  EXPECT_EQ(set_partitions(0).size(), 1u);
  EXPECT_EQ(set_partitions(3).size(), 5u);
  EXPECT_EQ(set_partitions(5).size(), 52u);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(Int(set_partitions(n).size()), bell(n));
  for (const auto& pi : set_partitions(4))
    for (int i = 1; i < pi.size(); ++i) EXPECT_LT(pi.block(i - 1).front(), pi.block(i).front());
}

TEST(Partitions, ParseAndPrint) {
  const auto pi = parse_partition("4 6|2 5|3 1");
  EXPECT_EQ(to_string(pi), "1 3|2 5|4 6");
  EXPECT_EQ(pi.block_of(5), 1);
  EXPECT_THROW(parse_partition("1 2|2 3"), std::invalid_argument);
}

TEST(Combinatorics, SpecialNumbers) {
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(cycle_count(3, 1), 2);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(stirling1_signed(n, n), 1);
  EXPECT_EQ(stirling1_signed(4, 2), 11);
  EXPECT_EQ(stirling1_signed(4, 3), -6);
}

TEST(Combinatorics, PartitionMobius) {
  EXPECT_EQ(mobius_partition(SetPartition::singletons(4)), 1);
  EXPECT_EQ(mobius_partition(parse_partition("1 2 3")), 2);
  for (int n = 1; n <= 7; ++n) {
    std::vector<Int> by_size(static_cast<std::size_t>(n) + 1, 0);
    for_each_set_partition(n, [&](const SetPartition& pi) { by_size[pi.size()] += mobius_partition(pi); });
    for (int j = 1; j <= n; ++j) EXPECT_EQ(by_size[j], stirling1_signed(n, j)) << n << " " << j;
  }
}

TEST(Combinatorics, Flats) {
  const Multigraph empty{3, {}};
  EXPECT_EQ(closed_sets(empty), (std::vector<EdgeSubset>{{}}));
  EXPECT_EQ(mobius_flats(empty, {}, {}), 1);
  const Multigraph k3 = SimpleGraph::complete(3).as_multigraph();
  const auto flats = closed_sets(k3);
  EXPECT_EQ(flats.size(), 5u);
  EXPECT_EQ(mobius_flats(k3, {}, {0, 1, 2}), 2);
  EXPECT_EQ(mobius_by_closure_sum(k3, {0, 1, 2}), 2);
  const Multigraph looped{2, {{1, 2}, {2, 2}}};
  for (const auto& f : closed_sets(looped)) EXPECT_EQ(mobius_flats(looped, {}, f), 0);
}

TEST(Combinatorics, ClosureProperties) {
  const Multigraph g{4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {1, 2}, {4, 4}}};
  const auto flats = closed_sets(g);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    EdgeSubset s;
    for (std::size_t i = 0; i < 6; ++i)
      if (mask >> i & 1U) s.push_back(i);
    const auto c = closure(g, s);
    EXPECT_TRUE(std::includes(c.begin(), c.end(), s.begin(), s.end()));
    EXPECT_EQ(closure(g, c), c);
    EXPECT_EQ(is_closed(g, s), std::find(flats.begin(), flats.end(), s) != flats.end());
  }
}

TEST(Combinatorics, MobiusRecursionMatchesClosureSum) {
  const Multigraph g{4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {1, 2}, {2, 4}}};
  for (const auto& f : closed_sets(g)) EXPECT_EQ(mobius_flats(g, {}, f), mobius_by_closure_sum(g, f));
}

TEST(Combinatorics, StablePartitions) {
  EXPECT_EQ(stable_partitions(SimpleGraph(4)).size(), 15u);
  EXPECT_EQ(stable_partitions(SimpleGraph::complete(4)).size(), 1u);
  const auto p3 = stable_partitions(SimpleGraph(3, {{1, 2}, {2, 3}}));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(to_string(p3[0]), "1 3|2");
  EXPECT_EQ(to_string(p3[1]), "1|2|3");
  EXPECT_TRUE(stable_partitions(Multigraph{2, {{1, 1}}}).empty());
}

TEST(Combinatorics, DescendingPathPartitions) {
  for (int k = 1; k <= 6; ++k) {
    const auto full = descending_path_partitions(SimpleGraph::complete(k));
    Int total = 0;
    for (int r = 0; r <= k; ++r) {
      EXPECT_EQ(full[r], stirling2(k, r));
      total += full[r];
    }
    EXPECT_EQ(total, bell(k));
    const auto none = descending_path_partitions(SimpleGraph(k));
    for (int r = 0; r <= k; ++r) EXPECT_EQ(none[r], r == k ? 1 : 0);
  }
  const auto one = descending_path_partitions(SimpleGraph(3, {{1, 2}}));
  EXPECT_EQ(one, (std::vector<Int>{0, 0, 1, 1}));
  // the path 3-1-2 has no descending ordering
  const auto bent = descending_path_partitions(SimpleGraph(3, {{1, 3}, {1, 2}}));
  EXPECT_EQ(bent[1], 0);
}

TEST(Combinatorics, OverlapGraphAndLowerDegrees) {
  const auto og = overlap_graph(parse_partition("1 3|2 5|4 6"));
  EXPECT_TRUE(og.graph.has_edge(1, 2));
  EXPECT_TRUE(og.graph.has_edge(2, 3));
  EXPECT_FALSE(og.graph.has_edge(1, 3));
  EXPECT_TRUE(overlap_graph(SetPartition::singletons(4)).graph.edges().empty());
  EXPECT_TRUE(overlap_graph(parse_partition("1 4|2 3")).graph.has_edge(1, 2));
  EXPECT_EQ(lower_degrees(parse_partition("1 3|2 5|4 6")), (DegreeSequence{0, 1, 1}));
  EXPECT_EQ(lower_degrees(SetPartition::singletons(3)), (DegreeSequence{0, 0, 0}));
  EXPECT_EQ(lower_degrees(parse_partition("1 4|2 3")), (DegreeSequence{0, 1}));
}

TEST(Combinatorics, Ascents) {
  EXPECT_EQ(ascents({0, 1, 1}), (std::vector<int>{1}));
  EXPECT_TRUE(ascents({0, 0, 0}).empty());
  EXPECT_EQ(ascents({0, 1, 2, 0}), (std::vector<int>{1, 2}));
}

TEST(Combinatorics, LowerDegreeConditions) {
  EXPECT_TRUE(is_vertex_order_lds({0, 1, 1}, 6));
  EXPECT_FALSE(is_vertex_order_lds({0, 2}, 10));
  EXPECT_FALSE(is_vertex_order_lds({0, 1}, 2));
  EXPECT_TRUE(is_increasing_lds({0, 1, 1}, 4));
  EXPECT_FALSE(is_increasing_lds({0, 1, 2}, 4));
  EXPECT_TRUE(is_increasing_lds({0, 0, 0, 0}, 4));
}

TEST(Combinatorics, RealizeLds) {
  EXPECT_EQ(to_string(realize_lds({0, 1, 1})), "1 4|2|3");
  EXPECT_EQ(to_string(realize_lds({0})), "1");
  EXPECT_EQ(to_string(realize_lds({0, 0})), "1|2");
  EXPECT_THROW(realize_lds({0, 2}), InvalidSequence);
  EXPECT_THROW(realize_lds({1}), InvalidSequence);
  const auto padded = realize_lds({0, 1, 1}, 6);
  EXPECT_EQ(padded.ground_size(), 6);
  EXPECT_EQ(lower_degrees(padded), (DegreeSequence{0, 1, 1}));
}
