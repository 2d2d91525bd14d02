#pragma once

// Dyer graphs: a finite simple graph with vertex orders f(x) in {2, 3, ..., inf}
// and edge labels m(e) >= 2, where an edge labelled m != 2 joins two
// vertices of order 2.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyer/coxeter_type.hpp"

namespace dyer {

/// Vertex sets are bitmasks over the declaration order.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// The order f(x) of a vertex generator: an integer >= 2 or infinity.
class Order {
 public:
  static Order finite(unsigned n);
  static Order infinite() { return Order(0); }

  bool is_infinite() const { return value_ == 0; }
  /// Throws std::logic_error when infinite.
  unsigned value() const;
  bool is_two() const { return value_ == 2; }
  /// 2 < f(x) < inf
  bool is_periodic() const { return value_ > 2; }

  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(Order, Order) = default;

 private:
  explicit Order(unsigned v) : value_(v) {}
  unsigned value_;
};

// Unvalidated description as read from input.
struct RawVertex {
  std::string name;
  std::optional<long long> order;  // nullopt means infinite
};
struct RawEdge {
  std::string first;
  std::string second;
  long long label = 2;
};
struct RawGraph {
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
};

/// Every violation found while validating a RawGraph.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// A subset used with a graph other than the one it was made from.
class ForeignSubset : public std::invalid_argument {
 public:
  ForeignSubset() : std::invalid_argument("vertex subset belongs to a different graph") {}
};

class DyerGraph;

/// A subset of the vertices of one particular DyerGraph.
class VertexSubset {
 public:
  Mask bits() const { return bits_; }
  std::uint64_t graph_id() const { return graph_id_; }
  std::size_t size() const { return static_cast<std::size_t>(popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t v) const { return v < 64 && (bits_ & bit(v)) != 0; }
  bool is_subset_of(const VertexSubset& other) const;

  VertexSubset operator|(const VertexSubset& other) const;
  VertexSubset operator&(const VertexSubset& other) const;
  VertexSubset operator-(const VertexSubset& other) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  friend class DyerGraph;
  VertexSubset(std::uint64_t graph_id, Mask bits) : graph_id_(graph_id), bits_(bits) {}
  void check_same(const VertexSubset& other) const;

  std::uint64_t graph_id_;
  Mask bits_;
};

class DyerGraph {
 public:
  struct Edge {
    std::size_t first;
    std::size_t second;
    unsigned label;
  };

  /// The empty graph (trivial group).
  DyerGraph();

  std::size_t size() const { return names_.size(); }
  std::uint64_t id() const { return id_; }

  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Order order(std::size_t v) const { return orders_.at(v); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_.at(u) & bit(v)) != 0; }
  /// m({u, v}); 0 when u and v are not adjacent.
  unsigned label(std::size_t u, std::size_t v) const { return labels_.at(u * size() + v); }
  Mask neighbours(std::size_t v) const { return adjacency_.at(v); }
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  Mask vertex_mask() const { return low_bits(size()); }
  /// V_2, V_p and V_inf as masks.
  Mask order_two_mask() const { return v2_; }
  Mask periodic_mask() const { return vp_; }
  Mask infinite_mask() const { return vinf_; }

  VertexSubset all() const { return {id_, vertex_mask()}; }
  VertexSubset none() const { return {id_, 0}; }
  /// Throws std::out_of_range on bits beyond the vertex count.
  VertexSubset subset(Mask bits) const;
  /// Throws std::out_of_range on an unknown name.
  VertexSubset subset(const std::vector<std::string>& names) const;
  /// Throws ForeignSubset when y was made from another graph.
  void check_owns(const VertexSubset& y) const;

  RawGraph to_raw() const;

 private:
  friend DyerGraph validate(const RawGraph& raw);
  friend DyerGraph induced(const DyerGraph& graph, const VertexSubset& y);

  void finish();

  std::uint64_t id_;
  std::vector<std::string> names_;
  std::vector<Order> orders_;
  std::vector<unsigned> labels_;  // size() x size(), 0 = no edge
  std::vector<Mask> adjacency_;
  Mask v2_ = 0;
  Mask vp_ = 0;
  Mask vinf_ = 0;
};

/// Checks every constraint and reports all violations at once.
DyerGraph validate(const RawGraph& raw);

/// Full subgraph spanned by y, vertices kept in host order.
DyerGraph induced(const DyerGraph& graph, const VertexSubset& y);

/// (lk(v), st(v)).
std::pair<VertexSubset, VertexSubset> link_star(const DyerGraph& graph, std::size_t v);
std::pair<VertexSubset, VertexSubset> link_star(const DyerGraph& graph, std::string_view name);

/// Whether the full subgraph on `vertices` is complete.
bool is_complete(const DyerGraph& graph, Mask vertices);

struct StructureReport {
  bool is_complete = false;
  bool is_spherical = false;
  bool is_finite_group = false;
  std::size_t order_two_count = 0;
  std::size_t periodic_count = 0;
  std::size_t infinite_count = 0;
  /// Connected components of the Coxeter diagram on V_2, as host vertex indices.
  std::vector<std::vector<std::size_t>> coxeter_components;
  /// Component types in component order; empty optional when D_2 is infinite.
  std::optional<std::vector<CoxeterType>> coxeter_types;
};

StructureReport classify(const DyerGraph& graph);
/// Same as classify(induced(graph, y)), with vertex indices of the host.
StructureReport classify(const DyerGraph& graph, const VertexSubset& y);

}  // namespace dyer
