#include <gtest/gtest.h>

#include "bpham/fault_model.hpp"
#include "helpers.hpp"

namespace bpham {
namespace {

using test::faults;
using test::P;
using test::V;

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

TEST(FaultModel, ExampleIsValid) {
  const auto r = validate(test::example_bp3(), 5);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.size, 5);
  EXPECT_EQ(test::example_bp3().size(), 5);
}

TEST(FaultModel, EmptyIsValid) {
  const auto r = validate(FaultSet{4, {}, {}}, 0);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.size, 0);
}

TEST(FaultModel, PairsMustFormAMatching) {
  const auto f = faults(3, {P("1,2,3", "-1,2,3"), P("1,2,3", "-2,-1,3")});
  const auto r = validate(f, 5);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_kind(r, "not a matching"));
  EXPECT_TRUE(r.within_bound);
}

TEST(FaultModel, StructuralViolations) {
  EXPECT_TRUE(has_kind(validate(faults(3, {P("1,2,3", "1,3,2")}), 5), "not an edge"));
  EXPECT_TRUE(has_kind(validate(faults(3, {}, {P("1,2,3", "-1,2,3"), P("-1,2,3", "1,2,3")}), 5),
                       "duplicate edge"));
  EXPECT_TRUE(has_kind(validate(faults(3, {P("1,2,3", "-1,2,3")}, {P("-1,2,3", "1,2,3")}), 5),
                       "edge equals matching edge"));
  EXPECT_TRUE(has_kind(validate(faults(3, {P("1,2,3", "-1,2,3")}, {P("1,2,3", "-2,-1,3")}), 5),
                       "edge touches matched vertex"));
  EXPECT_TRUE(has_kind(validate(faults(3, {P("1,2,3,4", "-1,2,3,4")}), 5), "invalid vertex"));
}

TEST(FaultModel, BudgetIsSeparateFromStructure) {
  const auto r = validate(test::example_bp3(), 4);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.within_bound);
  EXPECT_TRUE(r.structurally_valid());
  EXPECT_TRUE(has_kind(r, "budget exceeded"));
}

TEST(FaultModel, FaultVerticesOfExample) {
  const auto fv = fault_vertices(test::example_bp3());
  EXPECT_EQ(fv.matched, (std::set<SignedPermutation>{V("1,2,3"), V("-1,2,3"), V("1,-2,3"),
                                                      V("-3,2,-1")}));
  EXPECT_EQ(fv.all.size(), 10u);
  for (const auto& s : {"-2,1,3", "2,1,3", "-1,-2,3", "-3,2,1", "-1,2,-3", "-2,1,-3"}) {
    EXPECT_TRUE(fv.all.count(V(s))) << s;
  }
}

TEST(FaultModel, EdgeOnlySetHasNoDeletedVertices) {
  const auto fv = fault_vertices(faults(3, {}, {P("1,2,3", "-1,2,3")}));
  EXPECT_TRUE(fv.matched.empty());
  EXPECT_EQ(fv.all.size(), 2u);
}

TEST(FaultModel, RestrictionOfExample) {
  const auto f = test::example_bp3();
  const auto r3 = restrict_to(f, 3);
  ASSERT_EQ(r3.matching_pairs.size(), 1u);
  EXPECT_EQ(std::set<SignedPermutation>({r3.matching_pairs[0].first, r3.matching_pairs[0].second}),
            std::set<SignedPermutation>({V("1,2,3"), V("-1,2,3")}));
  ASSERT_EQ(r3.faulty_edges.size(), 1u);
  EXPECT_EQ(std::set<SignedPermutation>({r3.faulty_edges[0].first, r3.faulty_edges[0].second}),
            std::set<SignedPermutation>({V("-2,1,3"), V("2,1,3")}));
  const auto rm3 = restrict_to(f, -3);
  EXPECT_TRUE(rm3.matching_pairs.empty());
  EXPECT_EQ(rm3.faulty_edges.size(), 1u);
  const auto st = straddling(f);
  EXPECT_EQ(st.matching_pairs.size(), 1u);
  EXPECT_EQ(st.faulty_edges.size(), 1u);
  int total = st.size();
  for (int i : subgraph_indices(3)) total += restrict_to(f, i).size();
  EXPECT_EQ(total, f.size());
}

TEST(FaultModel, RestrictionOfEmpty) {
  for (int i : subgraph_indices(4)) EXPECT_EQ(restrict_to(FaultSet{4, {}, {}}, i).size(), 0);
}

TEST(FaultModel, NDimensionalEdgeBelongsToNoSubgraph) {
  const auto f = faults(4, {}, {P("1,2,3,4", "-4,-3,-2,-1")});
  for (int i : subgraph_indices(4)) EXPECT_EQ(restrict_to(f, i).size(), 0);
  EXPECT_EQ(straddling(f).size(), 1);
}

TEST(FaultModel, CanonicalizeIsOrderInsensitive) {
  const auto a = faults(3, {P("-1,2,3", "1,2,3")}, {P("2,1,3", "-2,1,3"), P("-3,2,1", "-1,-2,3")});
  const auto b = faults(3, {P("1,2,3", "-1,2,3")}, {P("-1,-2,3", "-3,2,1"), P("-2,1,3", "2,1,3")});
  EXPECT_EQ(canonicalize(a), canonicalize(b));
}

}  // namespace
}  // namespace bpham
