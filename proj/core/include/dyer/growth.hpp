#pragma once

// Growth series of Dyer groups with respect to their vertex generators.
//
// Three routes are available and are expected to agree exactly:
//   * spherical product: complete graph with finite D_2, so D splits as
//     D_2 x D_p x D_inf and the series is a product of known factors;
//   * subset recursion: for a non-spherical graph, 1/G satisfies an
//     alternating identity over all proper vertex subsets;
//   * amalgam recursion: a vertex v whose star is not everything splits D as
//     D_{V-v} *_{D_lk(v)} D_st(v), giving 1/G = 1/G_{V-v} + 1/G_st - 1/G_lk.
// Parabolic subgroups have intrinsic word length, so series of subsets are
// memoised by their bitmask in the root graph.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyer/graph.hpp"
#include "dyer/ratfun.hpp"

namespace dyer {

enum class Strategy { kAuto, kSubset, kAmalgam, kCrossCheck };
enum class Method { kSpherical, kSubset, kAmalgam, kGraphProduct };

std::string to_string(Strategy s);
std::string to_string(Method m);

struct GrowthResult {
  RationalFunction series;
  Method method = Method::kAmalgam;
  /// Number of distinct parabolic subgroups whose series was computed.
  std::size_t subsets_evaluated = 0;
};

/// The subset and amalgam recursions disagree; always an implementation bug.
class CrossCheckMismatch : public std::logic_error {
 public:
  CrossCheckMismatch(RationalFunction subset, RationalFunction amalgam);
  const RationalFunction& subset() const { return subset_; }
  const RationalFunction& amalgam() const { return amalgam_; }

 private:
  RationalFunction subset_;
  RationalFunction amalgam_;
};

class NotSpherical : public std::invalid_argument {
 public:
  NotSpherical() : std::invalid_argument("Dyer graph is not of spherical type") {}
};

class NotGraphProduct : public std::invalid_argument {
 public:
  NotGraphProduct() : std::invalid_argument("graph has an edge label other than 2") {}
};

/// Growth of Z/n (or Z) with respect to a single generator.
RationalFunction cyclic_growth(Order order);

/// Memoised growth series of the standard parabolic subgroups of one graph.
/// Not thread-safe; use one engine per thread.
class GrowthEngine {
 public:
  explicit GrowthEngine(DyerGraph graph);

  const DyerGraph& graph() const { return graph_; }

  bool is_spherical(const VertexSubset& y);
  /// Throws NotSpherical.
  RationalFunction spherical(const VertexSubset& y);
  RationalFunction subset_recursion(const VertexSubset& y);
  RationalFunction amalgam(const VertexSubset& y);

  /// sum over Y strictly inside x of (-1)^|Y| / G_Y, with G from the amalgam route.
  RationalFunction proper_subset_sum(const VertexSubset& x);
  /// Series of B_X: sum over Y containing x of (-1)^|Y - X| G_V / G_Y.
  RationalFunction bx_series(const VertexSubset& x);

  std::size_t subset_memo_size() const { return subset_memo_.size(); }
  std::size_t amalgam_memo_size() const { return amalgam_memo_.size(); }

 private:
  bool spherical_on(Mask m);
  RationalFunction spherical_on_mask(Mask m);
  RationalFunction subset_on(Mask m);
  RationalFunction amalgam_on(Mask m);
  RationalFunction coxeter_on(Mask m);
  const RationalFunction& amalgam_inverse(Mask m);

  DyerGraph graph_;
  std::unordered_map<Mask, bool> spherical_cache_;
  std::unordered_map<Mask, RationalFunction> subset_memo_;
  std::unordered_map<Mask, RationalFunction> amalgam_memo_;
  std::unordered_map<Mask, RationalFunction> subset_inverse_;
  std::unordered_map<Mask, RationalFunction> amalgam_inverse_;
};

/// Throws NotSpherical.
RationalFunction spherical_growth(const DyerGraph& graph);
RationalFunction subset_recursion_growth(const DyerGraph& graph);
RationalFunction amalgam_growth(const DyerGraph& graph);

/// kAuto runs the amalgam recursion; kCrossCheck runs both recursions with
/// separate memo tables and throws CrossCheckMismatch if they differ.
GrowthResult growth(const DyerGraph& graph, Strategy strategy = Strategy::kAuto);

/// Graph-product formula over complete subgraphs; throws NotGraphProduct
/// unless every edge label is 2.
RationalFunction graph_product_check(const DyerGraph& graph);

/// Series of B_empty for a spherical graph: t^m prod P_x (2t/(1-t))^l.
/// Throws NotSpherical.
RationalFunction pd_series(const DyerGraph& graph);

RationalFunction bx_series(const DyerGraph& graph, const VertexSubset& x);

/// a_0..a_n of the growth series.
std::vector<Integer> sphere_sizes(const DyerGraph& graph, std::size_t n);

}  // namespace dyer
