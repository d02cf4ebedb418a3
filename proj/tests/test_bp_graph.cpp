#include <gtest/gtest.h>

#include <set>

#include "bpham/bp_graph.hpp"
#include "bpham/errors.hpp"
#include "helpers.hpp"

namespace bpham {
namespace {

using test::V;

TEST(BpGraph, NeighborsOfIdentity) {
  const auto nb = neighbors(V("1,2,3"));
  const std::set<SignedPermutation> got(nb.begin(), nb.end());
  EXPECT_EQ(got, (std::set<SignedPermutation>{V("-1,2,3"), V("-2,-1,3"), V("-3,-2,-1")}));
}

TEST(BpGraph, Regular) {
  for (const auto& u : all_vertices(4)) {
    const auto nb = neighbors(u);
    EXPECT_EQ(nb.size(), 4u);
    EXPECT_EQ(std::set<SignedPermutation>(nb.begin(), nb.end()).size(), 4u);
    EXPECT_EQ(std::count(nb.begin(), nb.end(), u), 0);
  }
}

TEST(BpGraph, SubgraphIndex) {
  EXPECT_EQ(last_symbol(V("-1,3,-2")), -2);
  EXPECT_EQ(last_symbol(SignedPermutation::identity(6)), 6);
  for (const auto& u : all_vertices(4)) {
    for (int k = 1; k < 4; ++k) EXPECT_EQ(last_symbol(prefix_reversal(u, k)), last_symbol(u));
  }
}

TEST(BpGraph, OutNeighbor) {
  EXPECT_EQ(out_neighbor(V("-1,3,-2")), V("2,-3,1"));
  for (const auto& u : all_vertices(4)) {
    EXPECT_EQ(out_neighbor(out_neighbor(u)), u);
    EXPECT_EQ(last_symbol(out_neighbor(u)), -u.first());
  }
}

TEST(BpGraph, SubgraphIndicesCanonicalOrder) {
  EXPECT_EQ(subgraph_indices(3), (std::vector<int>{1, -1, 2, -2, 3, -3}));
  EXPECT_TRUE(is_subgraph_index(3, -3));
  EXPECT_FALSE(is_subgraph_index(3, 4));
  EXPECT_FALSE(is_subgraph_index(3, 0));
}

TEST(BpGraph, Counts) {
  EXPECT_EQ(vertex_count(1), 2u);
  EXPECT_EQ(edge_count(1), 1u);
  EXPECT_EQ(vertex_count(3), 48u);
  EXPECT_EQ(edge_count(3), 72u);
  EXPECT_EQ(vertex_count(4), 384u);
  EXPECT_EQ(edge_count(4), 768u);
  EXPECT_EQ(cross_edge_count(4, 1, 2), 8u);
  EXPECT_EQ(cross_edge_count(4, 1, -1), 0u);
}

TEST(BpGraph, EnumerationIsComplete) {
  const auto vs = all_vertices(4);
  EXPECT_EQ(vs.size(), 384u);
  EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
  EXPECT_EQ(std::set<SignedPermutation>(vs.begin(), vs.end()).size(), 384u);
}

TEST(BpGraph, CrossEdgesBp3) {
  const auto e = cross_edges(3, 1, 3);
  ASSERT_EQ(e.size(), 2u);
  const std::set<Edge> got(e.begin(), e.end());
  const std::set<Edge> want{make_edge(V("-3,2,1"), V("-1,-2,3")),
                            make_edge(V("-3,-2,1"), V("-1,2,3"))};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(cross_edges(3, 1, -1).empty());
  EXPECT_EQ(cross_edges(4, 1, 2).size(), 8u);
  EXPECT_THROW(cross_edges(3, 2, 2), DomainError);
}

TEST(BpGraph, CrossEdgeSourcesMatchCounts) {
  for (int i : subgraph_indices(4)) {
    for (int j : subgraph_indices(4)) {
      if (i == j) continue;
      const auto src = cross_edge_sources(4, i, j);
      EXPECT_EQ(src.size(), cross_edge_count(4, i, j));
      for (const auto& u : src) {
        EXPECT_EQ(u.last(), i);
        EXPECT_EQ(out_neighbor(u).last(), j);
      }
    }
  }
}

TEST(BpGraph, EdgeDimension) {
  EXPECT_EQ(edge_dimension(V("1,2,3"), V("-2,-1,3")), 2);
  EXPECT_EQ(edge_dimension(V("1,2,3"), V("1,3,2")), 0);
  EXPECT_TRUE(adjacent(V("1,2,3"), V("-3,-2,-1")));
  EXPECT_THROW(make_edge(V("1,2,3"), V("1,3,2")), DomainError);
  EXPECT_EQ(make_edge(V("-1,2,3"), V("1,2,3")), make_edge(V("1,2,3"), V("-1,2,3")));
}

TEST(BpGraph, Distance) {
  const auto u = V("1,2,3");
  EXPECT_EQ(distance(u, u), 0);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(distance(u, prefix_reversal(u, k)), 1);
  EXPECT_EQ(distance(u, V("3,2,1")), 5);
  int diameter = 0;
  for (const auto& v : all_vertices(3)) diameter = std::max(diameter, distance(u, v));
  EXPECT_EQ(diameter, 6);
  EXPECT_THROW(distance(SignedPermutation::identity(7), SignedPermutation::identity(7)),
               CapabilityError);
}

TEST(BpGraph, EmbedLiftRoundTrip) {
  EXPECT_EQ(subgraph_embed(3, V("1,2,3")), V("1,2"));
  EXPECT_THROW(subgraph_embed(2, V("1,2,3")), DomainError);
  for (const auto& u : all_vertices(4)) EXPECT_EQ(subgraph_lift(u.last(), subgraph_embed(u)), u);
}

TEST(BpGraph, EmbedPreservesAdjacency) {
  std::vector<SignedPermutation> part;
  for (const auto& u : all_vertices(3)) {
    if (u.last() == 1) part.push_back(u);
  }
  ASSERT_EQ(part.size(), 8u);
  for (const auto& a : part) {
    for (const auto& b : part) {
      EXPECT_EQ(adjacent(a, b), adjacent(subgraph_embed(a), subgraph_embed(b)));
    }
  }
}

// Same-subgraph pairs at distance 1..2 and cross pairs at distance <= 2 have
// different out-subgraphs; at distance 3 cross pairs can share one.
TEST(BpGraph, OutSubgraphsSeparateNearbyVertices) {
  for (int n : {3, 4}) {
    int checked = 0;
    int shared_at_three = 0;
    for (const auto& u : all_vertices(n)) {
      std::vector<SignedPermutation> frontier{u};
      std::set<SignedPermutation> seen{u};
      for (int d = 1; d <= 3; ++d) {
        std::vector<SignedPermutation> next;
        for (const auto& x : frontier) {
          for (const auto& y : neighbors(x)) {
            if (seen.insert(y).second) next.push_back(y);
          }
        }
        for (const auto& v : next) {
          const bool same = v.last() == u.last();
          const bool shared = out_neighbor(u).last() == out_neighbor(v).last();
          if (d == 3) {
            if (!same && shared) ++shared_at_three;
            continue;
          }
          EXPECT_FALSE(shared);
          ++checked;
        }
        frontier = std::move(next);
      }
    }
    EXPECT_GT(checked, 0);
    EXPECT_EQ(shared_at_three, n == 3 ? 96 : 1152);
  }
}

TEST(BpGraph, CrossPairAtDistanceThreeSharingOutSubgraph) {
  const auto u = V("1,2,3");
  const auto v = V("1,2,-3");
  EXPECT_EQ(distance(u, v), 3);
  EXPECT_EQ(out_neighbor(u).last(), -1);
  EXPECT_EQ(out_neighbor(v).last(), -1);
}

}  // namespace
}  // namespace bpham
