#include <gtest/gtest.h>

#include "bpham/trace.hpp"

namespace bpham {
namespace {

CaseTrace sample() {
  CaseTrace t;
  t.add("L18/2.1", 0, "H=1");
  t.add("L17", 1);
  t.add("BP3/path", 2);
  t.add("BP3/path", 2);
  t.add("BP3/fixture", 1, "k=2");
  return t;
}

TEST(Trace, HistogramCountsLabels) {
  const auto h = sample().histogram();
  EXPECT_EQ(h.at("BP3/path"), 2);
  EXPECT_EQ(h.at("L17"), 1);
  EXPECT_EQ(h.size(), 4u);
}

TEST(Trace, HasLabel) {
  EXPECT_TRUE(sample().has_label("L18/2.1"));
  EXPECT_FALSE(sample().has_label("L18/2.2"));
}

TEST(Trace, LeavesHaveNoChildren) {
  const auto leaves = sample().leaves();
  ASSERT_EQ(leaves.size(), 3u);
  EXPECT_EQ(leaves[0].label, "BP3/path");
  EXPECT_EQ(leaves[2].label, "BP3/fixture");
}

TEST(Trace, RollbackDiscardsLaterRecords) {
  auto t = sample();
  const auto mark = t.checkpoint();
  t.add("L20", 1);
  t.rollback(mark);
  EXPECT_EQ(t, sample());
  EXPECT_EQ(t.size(), 5u);
}

}  // namespace
}  // namespace bpham
