#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dyer/coxeter.hpp"
#include "support.hpp"

namespace dyer {
namespace {

using test::coxeter_graph;
using test::coxeter_path;

CoxeterType type_of(const DyerGraph& g) {
  const auto types = classify_finite(to_diagram(g));
  EXPECT_TRUE(types);
  EXPECT_EQ(types->size(), 1u);
  return types->front();
}

// Orders of the irreducible finite Coxeter groups, from the standard tables.
Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(CoxeterType, OrdersAgreeWithClosedForms) {
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(CoxeterType::a(n).order(), factorial(n + 1));
  for (unsigned n = 3; n <= 8; ++n) {
    EXPECT_EQ(CoxeterType::b(n).order(), factorial(n) * (Integer(1) << n));
  }
  for (unsigned n = 4; n <= 8; ++n) {
    EXPECT_EQ(CoxeterType::d(n).order(), factorial(n) * (Integer(1) << (n - 1)));
  }
  EXPECT_EQ(CoxeterType::e(6).order(), 51840);
  EXPECT_EQ(CoxeterType::e(7).order(), 2903040);
  EXPECT_EQ(CoxeterType::e(8).order(), 696729600);
  EXPECT_EQ(CoxeterType::f4().order(), 1152);
  EXPECT_EQ(CoxeterType::h(3).order(), 120);
  EXPECT_EQ(CoxeterType::h(4).order(), 14400);
  for (unsigned m = 3; m <= 12; ++m) EXPECT_EQ(CoxeterType::i2(m).order(), 2 * m);
}

TEST(CoxeterType, LongestLengthIsReflectionCount) {
  EXPECT_EQ(CoxeterType::a(4).longest_length(), 10u);
  EXPECT_EQ(CoxeterType::b(3).longest_length(), 9u);
  EXPECT_EQ(CoxeterType::d(4).longest_length(), 12u);
  EXPECT_EQ(CoxeterType::e(6).longest_length(), 36u);
  EXPECT_EQ(CoxeterType::e(7).longest_length(), 63u);
  EXPECT_EQ(CoxeterType::e(8).longest_length(), 120u);
  EXPECT_EQ(CoxeterType::f4().longest_length(), 24u);
  EXPECT_EQ(CoxeterType::h(3).longest_length(), 15u);
  EXPECT_EQ(CoxeterType::h(4).longest_length(), 60u);
  EXPECT_EQ(CoxeterType::i2(7).longest_length(), 7u);
}

TEST(CoxeterType, ExponentDuality) {
  // m_i + m_{k+1-i} = h, the Coxeter number.
  const std::vector<CoxeterType> types{CoxeterType::a(5), CoxeterType::b(4), CoxeterType::d(5), CoxeterType::e(6),
                                       CoxeterType::e(7), CoxeterType::e(8), CoxeterType::f4(), CoxeterType::h(3),
                                       CoxeterType::h(4), CoxeterType::i2(9)};
  for (const auto& t : types) {
    const auto e = t.exponents();
    ASSERT_EQ(e.size(), t.rank()) << t.name();
    EXPECT_EQ(e.front(), 1u) << t.name();
    for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e[i] + e[e.size() - 1 - i], e.back() + 1) << t.name();
    EXPECT_TRUE(t.growth().is_palindromic()) << t.name();
    EXPECT_EQ(t.growth().degree(), static_cast<long>(t.longest_length()));
    EXPECT_EQ(Integer(t.growth().evaluate(1)), t.order());
  }
}

TEST(CoxeterType, RankTwoCoincidences) {
  EXPECT_EQ(CoxeterType::b(2), CoxeterType::i2(4));
  EXPECT_EQ(CoxeterType::i2(3), CoxeterType::a(2));
  EXPECT_EQ(CoxeterType::i2(5).name(), "I2(5)");
  EXPECT_EQ(CoxeterType::d(4).name(), "D4");
  EXPECT_THROW(CoxeterType::d(3), std::invalid_argument);
  EXPECT_THROW(CoxeterType::e(9), std::invalid_argument);
  EXPECT_THROW(CoxeterType::h(2), std::invalid_argument);
}

TEST(Classification, RecognizesEveryFamily) {
  EXPECT_EQ(type_of(coxeter_path({})), CoxeterType::a(1));
  EXPECT_EQ(type_of(coxeter_path({3})), CoxeterType::a(2));
  EXPECT_EQ(type_of(coxeter_path({4})), CoxeterType::i2(4));
  EXPECT_EQ(type_of(coxeter_path({6})), CoxeterType::i2(6));
  EXPECT_EQ(type_of(coxeter_path({3, 3, 3})), CoxeterType::a(4));
  EXPECT_EQ(type_of(coxeter_path({4, 3, 3})), CoxeterType::b(4));
  EXPECT_EQ(type_of(coxeter_path({3, 3, 4})), CoxeterType::b(4));
  EXPECT_EQ(type_of(coxeter_path({3, 4, 3})), CoxeterType::f4());
  EXPECT_EQ(type_of(coxeter_path({5, 3})), CoxeterType::h(3));
  EXPECT_EQ(type_of(coxeter_path({3, 3, 5})), CoxeterType::h(4));
  // D4: centre s1.
  EXPECT_EQ(type_of(coxeter_graph(4, {3, 2, 2, 3, 3, 2})), CoxeterType::d(4));
  // D5: leaves s0, s1 on centre s2, arm s3 - s4.
  EXPECT_EQ(type_of(coxeter_graph(5, {2, 3, 2, 2, 3, 2, 2, 3, 2, 3})), CoxeterType::d(5));
}

// E_n: branch at s2, arms s0-s1-s2, s2-s3 (short), s2-s4-...; total n vertices.
DyerGraph e_graph(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> bonds{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
  for (unsigned v = 5; v < n; ++v) bonds.emplace_back(v - 1, v);
  std::vector<long long> upper;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      upper.push_back(std::count(bonds.begin(), bonds.end(), std::make_pair(i, j)) ? 3 : 2);
    }
  }
  return coxeter_graph(n, upper);
}

TEST(Classification, ExceptionalE) {
  for (unsigned n = 6; n <= 8; ++n) EXPECT_EQ(type_of(e_graph(n)), CoxeterType::e(n));
}

TEST(Classification, RejectsInfinite) {
  // Triangle with labels 3,3,3 (affine A2), path 4-4 (affine C2), path 3-6 (affine G2),
  // a non-edge (infinite dihedral), D4 with an extra leaf making affine D4.
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_graph(3, {3, 3, 3}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_path({4, 4}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_path({3, 6}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_path({5, 5}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_path({3, 3, 3, 5}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_graph(2, {0}))));
  EXPECT_FALSE(classify_finite(to_diagram(coxeter_graph(5, {2, 2, 2, 3, 2, 2, 3, 2, 3, 3}))));
  EXPECT_FALSE(classify_finite(to_diagram(e_graph(9))));
  EXPECT_THROW(solomon_growth(to_diagram(coxeter_graph(3, {3, 3, 3}))), InfiniteCoxeterGroup);
  EXPECT_THROW(group_order(to_diagram(coxeter_path({3, 6}))), InfiniteCoxeterGroup);
}

TEST(Classification, ReducibleProducts) {
  // A1 x A1 x I2(5)
  const DyerGraph g = coxeter_graph(4, {2, 2, 2, 2, 2, 5});
  const auto types = classify_finite(to_diagram(g));
  ASSERT_TRUE(types);
  ASSERT_EQ(types->size(), 3u);
  EXPECT_EQ(group_order(to_diagram(g)), 2 * 2 * 10);
  EXPECT_EQ(longest_length(to_diagram(g)), 1u + 1 + 5);
  EXPECT_EQ(solomon_growth(to_diagram(g)), Polynomial({1, 1}) * Polynomial({1, 1}) * Polynomial({1, 2, 2, 2, 2, 1}));
}

TEST(Classification, LayoutsFollowConvention) {
  // B3 with the 4-edge at the far end: layout starts at that end.
  const auto comps = decompose_finite(to_diagram(coxeter_path({3, 4})));
  ASSERT_TRUE(comps);
  EXPECT_EQ(comps->at(0).type, CoxeterType::b(3));
  EXPECT_EQ(comps->at(0).layout, (std::vector<std::size_t>{2, 1, 0}));
  const auto d = decompose_finite(to_diagram(coxeter_graph(4, {3, 2, 2, 3, 3, 2})));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->at(0).layout[2], 1u);
}

TEST(ClassificationProperty, RelabellingInvariant) {
  // Random permutations of the vertex declaration order do not change the type multiset.
  std::mt19937_64 rng(7);
  const std::vector<DyerGraph> samples{coxeter_path({3, 4, 3}), coxeter_path({3, 3, 5}), e_graph(7),
                                       coxeter_graph(5, {2, 3, 2, 2, 3, 2, 2, 3, 2, 3}), coxeter_path({4, 3, 3, 3})};
  for (const auto& g : samples) {
    const auto reference = classify_finite(to_diagram(g));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> perm(g.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      RawGraph raw;
      for (std::size_t i : perm) raw.vertices.push_back({g.name(i), 2});
      for (const auto& e : g.edges()) raw.edges.push_back({g.name(e.first), g.name(e.second), e.label});
      const auto permuted = classify_finite(to_diagram(validate(raw)));
      ASSERT_TRUE(permuted);
      EXPECT_EQ(*permuted, *reference);
    }
  }
}

}  // namespace
}  // namespace dyer
