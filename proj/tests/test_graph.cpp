#include <gtest/gtest.h>

#include "dyer/graph.hpp"
#include "support.hpp"

namespace dyer {
namespace {

using test::kInf;
using test::make_graph;

std::vector<std::string> issues_of(const RawGraph& raw) {
  try {
    validate(raw);
  } catch (const ValidationError& e) {
    return e.issues();
  }
  return {};
}

TEST(Order, Basics) {
  EXPECT_TRUE(Order::infinite().is_infinite());
  EXPECT_EQ(Order::finite(5).value(), 5u);
  EXPECT_TRUE(Order::finite(2).is_two());
  EXPECT_TRUE(Order::finite(3).is_periodic());
  EXPECT_FALSE(Order::infinite().is_periodic());
  EXPECT_EQ(Order::infinite().to_string(), "inf");
  EXPECT_THROW(Order::infinite().value(), std::logic_error);
  EXPECT_THROW(Order::finite(1), std::invalid_argument);
}

TEST(Validate, AcceptsWellFormedGraph) {
  const DyerGraph g = make_graph({{"s", 2}, {"t", 2}, {"x", kInf}, {"y", 3}},
                                 {{"s", "t", 3}, {"t", "x", 2}, {"x", "y", 2}});
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.label(0, 1), 3u);
  EXPECT_EQ(g.label(1, 0), 3u);
  EXPECT_EQ(g.label(0, 2), 0u);
  EXPECT_EQ(g.order_two_mask(), 0b0011u);
  EXPECT_EQ(g.infinite_mask(), 0b0100u);
  EXPECT_EQ(g.periodic_mask(), 0b1000u);
  EXPECT_EQ(g.index_of("x"), 2u);
  EXPECT_FALSE(g.index_of("nope"));
}

TEST(Validate, ReportsEveryViolation) {
  RawGraph raw;
  raw.vertices = {{"a", 2}, {"b", 3}, {"a", 2}, {"", 4}, {"c", 1}};
  raw.edges = {{"a", "b", 3}, {"a", "zz", 2}, {"b", "b", 2}, {"a", "c", 1}, {"b", "a", 2}};
  const auto issues = issues_of(raw);
  EXPECT_GE(issues.size(), 7u);
  auto mentions = [&](const std::string& needle) {
    for (const auto& i : issues) {
      if (i.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  EXPECT_TRUE(mentions("duplicate"));
  EXPECT_TRUE(mentions("zz"));
  EXPECT_TRUE(mentions("empty"));
}

TEST(Validate, BraidLabelNeedsInvolutions) {
  RawGraph raw;
  raw.vertices = {{"x", 2}, {"y", 3}};
  raw.edges = {{"x", "y", 3}};
  EXPECT_EQ(issues_of(raw).size(), 1u);
  raw.edges = {{"x", "y", 2}};
  EXPECT_TRUE(issues_of(raw).empty());
  raw.vertices = {{"x", 2}, {"y", std::nullopt}};
  raw.edges = {{"x", "y", 4}};
  EXPECT_EQ(issues_of(raw).size(), 1u);
}

TEST(Validate, TooManyVertices) {
  RawGraph raw;
  for (int i = 0; i < 65; ++i) raw.vertices.push_back({"v" + std::to_string(i), 2});
  EXPECT_THROW(validate(raw), ValidationError);
}

TEST(Subsets, ForeignAndOutOfRange) {
  const DyerGraph g = make_graph({{"a", 2}, {"b", 2}});
  const DyerGraph h = make_graph({{"a", 2}, {"b", 2}});
  EXPECT_NE(g.id(), h.id());
  EXPECT_THROW(g.check_owns(h.all()), ForeignSubset);
  EXPECT_THROW(g.all() | h.all(), ForeignSubset);
  EXPECT_THROW(g.subset(0b100), std::out_of_range);
  EXPECT_THROW(g.subset(std::vector<std::string>{"q"}), std::out_of_range);
  const VertexSubset a = g.subset(std::vector<std::string>{"a"});
  EXPECT_EQ(a.bits(), 1u);
  EXPECT_TRUE(a.is_subset_of(g.all()));
  EXPECT_EQ((g.all() - a).bits(), 2u);
  EXPECT_EQ((g.all() & a), a);
  EXPECT_TRUE(g.none().empty());
}

TEST(Induced, KeepsLabelsAndOrder) {
  const DyerGraph g = make_graph({{"s", 2}, {"t", 2}, {"x", 5}, {"u", 2}},
                                 {{"s", "t", 4}, {"t", "u", 3}, {"x", "s", 2}});
  const DyerGraph h = induced(g, g.subset(std::vector<std::string>{"u", "t", "x"}));
  EXPECT_EQ(h.names(), (std::vector<std::string>{"t", "x", "u"}));
  EXPECT_EQ(h.label(0, 2), 3u);
  EXPECT_FALSE(h.adjacent(0, 1));
  EXPECT_EQ(h.order(1), Order::finite(5));
}

TEST(LinkStar, Basics) {
  const DyerGraph g = make_graph({{"a", 2}, {"b", 2}, {"c", 2}}, {{"a", "b", 2}, {"b", "c", 3}});
  const auto [lk, st] = link_star(g, "b");
  EXPECT_EQ(lk.bits(), 0b101u);
  EXPECT_EQ(st.bits(), 0b111u);
  const auto [lk_a, st_a] = link_star(g, 0);
  EXPECT_EQ(lk_a.bits(), 0b010u);
  EXPECT_EQ(st_a.bits(), 0b011u);
  EXPECT_THROW(link_star(g, "zz"), std::out_of_range);
}

TEST(Classify, Spherical) {
  // S3 x Z5: complete and finite.
  const DyerGraph g = make_graph({{"s", 2}, {"t", 2}, {"x", 5}}, {{"s", "t", 3}, {"s", "x", 2}, {"t", "x", 2}});
  const StructureReport r = classify(g);
  EXPECT_TRUE(r.is_complete);
  EXPECT_TRUE(r.is_spherical);
  EXPECT_TRUE(r.is_finite_group);
  EXPECT_EQ(r.order_two_count, 2u);
  EXPECT_EQ(r.periodic_count, 1u);
  ASSERT_TRUE(r.coxeter_types);
  EXPECT_EQ(r.coxeter_types->at(0), CoxeterType::a(2));
}

TEST(Classify, CompleteButAffine) {
  const DyerGraph g = make_graph({{"a", 2}, {"b", 2}, {"c", 2}}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}});
  const StructureReport r = classify(g);
  EXPECT_TRUE(r.is_complete);
  EXPECT_FALSE(r.is_spherical);
  EXPECT_FALSE(r.coxeter_types);
}

TEST(Classify, SphericalInfinite) {
  const DyerGraph g = make_graph({{"s", 2}, {"x", kInf}}, {{"s", "x", 2}});
  const StructureReport r = classify(g);
  EXPECT_TRUE(r.is_spherical);
  EXPECT_FALSE(r.is_finite_group);
  EXPECT_EQ(r.infinite_count, 1u);
}

TEST(Classify, NonAdjacentInvolutionsAreInfiniteDihedral) {
  const DyerGraph g = make_graph({{"s", 2}, {"t", 2}});
  const StructureReport r = classify(g);
  EXPECT_FALSE(r.is_complete);
  EXPECT_FALSE(r.is_spherical);
  ASSERT_EQ(r.coxeter_components.size(), 1u);
  EXPECT_EQ(r.coxeter_components[0].size(), 2u);
}

TEST(Classify, SubsetUsesHostIndices) {
  const DyerGraph g = make_graph({{"x", kInf}, {"s", 2}, {"t", 2}}, {{"s", "t", 5}});
  const StructureReport r = classify(g, g.subset(0b110));
  EXPECT_TRUE(r.is_spherical);
  ASSERT_EQ(r.coxeter_components.size(), 1u);
  EXPECT_EQ(r.coxeter_components[0], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.coxeter_types->at(0), CoxeterType::i2(5));
}

}  // namespace
}  // namespace dyer
