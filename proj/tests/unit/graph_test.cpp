#include <gtest/gtest.h>

#include <set>

#include "hamkit/families.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/oracle.hpp"
#include "test_support.hpp"

using namespace hamkit;

TEST(FromEdgeList, Triangle) {
  auto g = graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.is_complete());
}

TEST(FromEdgeList, EdgelessAndEmpty) {
  auto g = graph::from_edge_list(2, {});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 0u);
  graph zero(0);
  EXPECT_EQ(zero.order(), 0);
  EXPECT_TRUE(components(zero).empty());
}

TEST(FromEdgeList, DuplicatesCollapse) {
  auto g = graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edges(), (std::vector<edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.degree(3), 0);
}

TEST(FromEdgeList, Errors) {
  EXPECT_THROW(graph::from_edge_list(3, {{0, 3}}), index_out_of_range);
  EXPECT_THROW(graph::from_edge_list(3, {{-1, 0}}), index_out_of_range);
  EXPECT_THROW(graph::from_edge_list(3, {{1, 1}}), self_loop);
}

TEST(FromEdgeList, SymmetricIrreflexiveFuzz) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 70);
    std::vector<edge> es;
    for (int i = 0, m = static_cast<int>(rng() % (2 * n + 1)); i < m; ++i) {
      vertex u = rng() % n, v = rng() % n;
      if (u != v) es.emplace_back(u, v);
    }
    auto g = graph::from_edge_list(n, es);
    std::set<edge> want;
    for (auto [u, v] : es) want.emplace(std::min(u, v), std::max(u, v));
    EXPECT_EQ(g.size(), want.size());
    for (vertex u = 0; u < n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      EXPECT_TRUE(std::is_sorted(g.neighbors(u).begin(), g.neighbors(u).end()));
      for (vertex v = 0; v < n; ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        EXPECT_EQ(g.adjacent(u, v),
                  want.count({std::min(u, v), std::max(u, v)}) == 1);
      }
    }
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_TRUE(induced_subgraph(classic::complete(4), {0, 1, 2}).g.is_complete());
  auto two = induced_subgraph(classic::cycle(5), {0, 2});
  EXPECT_EQ(two.g.order(), 2);
  EXPECT_EQ(two.g.size(), 0u);
  EXPECT_EQ(two.new_to_old, (std::vector<vertex>{0, 2}));
  EXPECT_EQ(two.old_to_new[1], -1);

  auto outer = induced_subgraph(classic::petersen(), {0, 1, 2, 3, 4});
  EXPECT_EQ(outer.g, classic::cycle(5));
}

TEST(InducedSubgraph, RejectsOutOfRange) {
  EXPECT_THROW(induced_subgraph(classic::cycle(4), {0, 7}), index_out_of_range);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(classic::complete(3)).size(), 1u);
  EXPECT_EQ(components(classic::empty(3)),
            (std::vector<std::vector<vertex>>{{0}, {1}, {2}}));

  auto g1 = generate_g1({4, 4, 5, 11});
  std::vector<bool> removed(11, false);
  for (vertex v : g1_cut(g1)) removed[v] = true;
  EXPECT_EQ(components(g1.g, removed).size(), 6u);
}

TEST(Components, PartitionProperty) {
  for (const auto& g : ref::corpus(200, 1, 30, 17)) {
    const auto blocks = components(g);
    std::vector<int> owner(g.order(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (vertex v : blocks[b]) {
        ASSERT_EQ(owner[v], -1) << "vertex in two blocks";
        owner[v] = static_cast<int>(b);
      }
    for (vertex v = 0; v < g.order(); ++v) EXPECT_GE(owner[v], 0);
    for (auto [u, v] : g.edges()) EXPECT_EQ(owner[u], owner[v]);
    EXPECT_EQ(is_connected(g), blocks.size() <= 1);
  }
}

TEST(VertexSet, SortedUniqueAndMasks) {
  vertex_set s{5, 1, 5, 3};
  EXPECT_EQ(s.members(), (std::vector<vertex>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  s.insert(2);
  s.insert(2);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(vertex_set::from_mask(s.mask()), s);
}
