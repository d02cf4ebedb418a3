#include <gtest/gtest.h>

#include <random>

#include "bpham/constructor.hpp"
#include "bpham/errors.hpp"
#include "bpham/oracle.hpp"
#include "helpers.hpp"

namespace bpham {
namespace {

using test::faults;
using test::P;
using test::V;

std::vector<int> all_of(int n) { return subgraph_indices(n); }

TEST(Ordering, Examples) {
  const std::vector<int> set{1, -1, 2, -2, 3};
  EXPECT_EQ(order_subgraphs(set, 1, 3).indices, (std::vector<int>{1, 2, -1, -2, 3}));
  EXPECT_EQ(order_subgraphs(std::vector<int>{1, 2}, 1, 2).indices, (std::vector<int>{1, 2}));
  EXPECT_THROW(order_subgraphs(std::vector<int>{1, -1}, 1, -1), NoOrdering);
  EXPECT_THROW(order_subgraphs(std::vector<int>{1, 1, 2}, 1, 2), UsageError);
  EXPECT_THROW(order_subgraphs(std::vector<int>{1, 2, 3}, 1, 4), UsageError);
  EXPECT_THROW(order_subgraphs(std::vector<int>{1, 2, 3}, 2, 2), UsageError);
}

TEST(Ordering, ValidityCheck) {
  const std::vector<int> set{1, -1, 2, -2, 3};
  EXPECT_TRUE(is_valid_ordering({{1, 2, -1, -2, 3}}, set, 1, 3));
  EXPECT_FALSE(is_valid_ordering({{1, -1, 2, -2, 3}}, set, 1, 3));
  EXPECT_FALSE(is_valid_ordering({{1, 2, -1, 3, -2}}, set, 1, 3));
  EXPECT_FALSE(is_valid_ordering({{1, 2, -2, 3}}, set, 1, 3));
}

TEST(Fixtures, StoredCyclesVerify) {
  const auto& fx = bp3_fixtures();
  for (int k = 1; k <= 3; ++k) {
    const auto id = SignedPermutation::identity(3);
    const FaultSet f{3, {{id, generator(3, k)}}, {}};
    const auto& c = fx[static_cast<std::size_t>(k - 1)];
    EXPECT_EQ(c.size(), 46u);
    EXPECT_TRUE(verify_cycle(3, f, c).ok) << k;
  }
  EXPECT_EQ(fx[0][0], V("-2,-1,3"));
  EXPECT_EQ(fx[0][1], V("2,-1,3"));
  EXPECT_EQ(fx[0][2], V("-3,1,-2"));
  EXPECT_EQ(fx[2][0], V("-2,-1,3"));
  EXPECT_EQ(fx[2][1], V("2,-1,3"));
  EXPECT_EQ(fx[2][2], V("1,-2,3"));
}

TEST(BaseCases, TranslatedPairUsesFixture) {
  const auto a = V("3,-1,2");
  const auto b = prefix_reversal(a, 2);
  ASSERT_EQ(b, V("1,-3,2"));
  const FaultSet f{3, {{a, b}}, {}};
  const auto c = base_cycle_bp3(f);
  std::vector<SignedPermutation> want;
  for (const auto& x : bp3_fixtures()[1]) want.push_back(left_translate(b, x));
  EXPECT_EQ(c.vertices, want);
  EXPECT_TRUE(c.trace.has_label("BP3/fixture"));
}

TEST(BaseCases, EverySingleFault) {
  int ok = 0;
  for (const auto& a : all_vertices(3)) {
    for (int k = 1; k <= 3; ++k) {
      const auto b = prefix_reversal(a, k);
      if (b < a) continue;
      const FaultSet pf{3, {{a, b}}, {}};
      const FaultSet ef{3, {}, {{a, b}}};
      ok += verify_cycle(3, pf, base_cycle_bp3(pf).vertices).ok;
      ok += verify_cycle(3, ef, base_cycle_bp3(ef).vertices).ok;
    }
  }
  EXPECT_EQ(ok, 144);
  EXPECT_THROW(base_cycle_bp3(test::example_bp3()), UsageError);
}

TEST(BaseCases, AllPathsOfBp3) {
  const auto none = FaultSet{3, {}, {}};
  const auto vs = all_vertices(3);
  int ok = 0;
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      if (u == v) continue;
      ok += verify_path(3, none, u, v, base_path_bp3(u, v).vertices).ok;
    }
  }
  EXPECT_EQ(ok, 48 * 47);
  EXPECT_THROW(base_path_bp3(vs[0], vs[0]), UsageError);
}

TEST(Chain, FaultFreeBp4ClosesIntoCycle) {
  const auto u = V("1,2,3,4");
  const auto v = out_neighbor(u);
  const auto p = chain_path(all_of(4), u, v, FaultSet{4, {}, {}});
  EXPECT_TRUE(verify_cycle(4, FaultSet{4, {}, {}}, p.vertices).ok);
  EXPECT_TRUE(p.trace.has_label("L17"));
}

TEST(Chain, SubsetOfSubgraphs) {
  const std::vector<int> set{1, 2, -1, 3, -3};
  const auto u = V("2,3,4,1");
  const auto v = V("1,2,4,-3");
  const auto p = chain_path(set, u, v, FaultSet{4, {}, {}});
  EXPECT_EQ(p.vertices.size(), 5u * 48u);
  EXPECT_EQ(p.vertices.front(), u);
  EXPECT_EQ(p.vertices.back(), v);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    EXPECT_TRUE(adjacent(p.vertices[i], p.vertices[i + 1]));
  }
  EXPECT_THROW(chain_path(std::vector<int>{1, 2, 3}, u, v, FaultSet{4, {}, {}}), UsageError);
}

TEST(Loop, SameSubgraphEnds) {
  const auto u = V("1,2,3,4");
  const auto v = V("-2,-1,3,4");
  const auto p = loop_path(all_of(4), u, v, FaultSet{4, {}, {}});
  EXPECT_TRUE(verify_path(4, FaultSet{4, {}, {}}, u, v, p.vertices).ok);
  EXPECT_TRUE(p.trace.has_label("L20"));
}

TEST(Cycle, FaultFree) {
  for (int n = 3; n <= 5; ++n) {
    const auto c = hamiltonian_cycle(n, FaultSet{n, {}, {}});
    EXPECT_EQ(c.vertices.size(), vertex_count(n));
    EXPECT_TRUE(verify_cycle(n, FaultSet{n, {}, {}}, c.vertices).ok);
    EXPECT_EQ(c.fallback_invocations, 0);
  }
}

TEST(Cycle, PairAndEdgeInBp4) {
  const auto g = faults(4, {P("2,3,4,1", "-2,3,4,1")}, {P("1,2,3,4", "-1,2,3,4")});
  const auto c = hamiltonian_cycle(4, g);
  EXPECT_EQ(c.vertices.size(), 382u);
  EXPECT_TRUE(verify_cycle(4, g, c.vertices).ok);
}

TEST(Cycle, MixedBp5) {
  const auto f = faults(5, {P("2,3,4,5,1", "-2,3,4,5,1"), P("1,2,3,4,5", "-5,-4,-3,-2,-1")},
                        {P("3,1,2,5,4", "-1,-3,2,5,4")});
  const auto c = hamiltonian_cycle(5, f);
  EXPECT_EQ(c.vertices.size(), 3840u - 4u);
  EXPECT_TRUE(verify_cycle(5, f, c.vertices).ok);
}

TEST(Cycle, RejectsBadInput) {
  EXPECT_THROW(hamiltonian_cycle(4, faults(4, {}, {P("1,2,3,4", "-1,2,3,4"),
                                                   P("1,2,3,4", "-2,-1,3,4"),
                                                   P("1,2,3,4", "-3,-2,-1,4")})),
               UsageError);
  EXPECT_THROW(hamiltonian_cycle(2, FaultSet{2, {}, {}}), UsageError);
  EXPECT_THROW(hamiltonian_cycle(4, faults(4, {P("1,2,3,4", "1,2,4,3")})), UsageError);
}

TEST(Path, OnePairInBp4) {
  const auto f = faults(4, {P("2,3,4,1", "-2,3,4,1")});
  const auto u = V("1,2,3,4");
  const auto v = V("4,-3,2,-1");
  const auto p = hamiltonian_path(4, u, v, f);
  EXPECT_EQ(p.vertices.size(), 382u);
  EXPECT_TRUE(verify_path(4, f, u, v, p.vertices).ok);
}

TEST(Path, RejectsBadEndpoints) {
  const auto f = faults(4, {P("2,3,4,1", "-2,3,4,1")});
  EXPECT_THROW(hamiltonian_path(4, V("1,2,3,4"), V("1,2,3,4"), f), UsageError);
  EXPECT_THROW(hamiltonian_path(4, V("2,3,4,1"), V("1,2,3,4"), f), UsageError);
  EXPECT_THROW(hamiltonian_path(4, V("1,2,3"), V("1,2,3,4"), f), UsageError);
}

TEST(Path, RandomBp5) {
  std::mt19937_64 rng(7);
  const auto vs = all_vertices(5);
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  const auto f = faults(5, {P("2,3,4,5,1", "-2,3,4,5,1")}, {P("1,2,3,4,5", "-1,2,3,4,5")});
  for (int t = 0; t < 5; ++t) {
    const auto u = vs[pick(rng)];
    auto v = vs[pick(rng)];
    if (u == v || fault_vertices(f).matched.count(u) || fault_vertices(f).matched.count(v)) continue;
    const auto p = hamiltonian_path(5, u, v, f);
    EXPECT_TRUE(verify_path(5, f, u, v, p.vertices).ok);
  }
}

TEST(Determinism, SameInputSameOutput) {
  const auto f = faults(5, {P("2,3,4,5,1", "-2,3,4,5,1")}, {P("1,2,3,4,5", "-1,2,3,4,5")});
  const auto a = hamiltonian_cycle(5, f);
  const auto b = hamiltonian_cycle(5, f);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.trace, b.trace);
}

}  // namespace
}  // namespace bpham
