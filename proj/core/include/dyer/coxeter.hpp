#pragma once

// Finite Coxeter group recognition on the order-2 part of a Dyer graph.
//
// Diagram convention: a Dyer edge labelled 2 means the generators commute
// (no diagram edge), a Dyer edge labelled m >= 3 is a diagram edge labelled
// m, and two order-2 vertices with no Dyer edge are joined by an edge
// labelled infinity. Recognition is pattern matching against the
// classification of connected diagrams; no real arithmetic is involved.

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyer/coxeter_type.hpp"
#include "dyer/graph.hpp"
#include "dyer/ratfun.hpp"

namespace dyer {

class CoxeterDiagram {
 public:
  static constexpr unsigned kCommute = 2;
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

  CoxeterDiagram() = default;
  /// labels is size x size, symmetric, with kCommute for "no edge".
  CoxeterDiagram(std::vector<std::string> names, std::vector<std::size_t> host_vertices,
                 std::vector<unsigned> labels);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t host_vertex(std::size_t i) const { return host_.at(i); }
  unsigned label(std::size_t i, std::size_t j) const { return labels_.at(i * size() + j); }
  bool joined(std::size_t i, std::size_t j) const { return i != j && label(i, j) != kCommute; }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> host_;
  std::vector<unsigned> labels_;
};

/// Whole graph; throws std::invalid_argument if some vertex has order != 2.
CoxeterDiagram to_diagram(const DyerGraph& graph);
/// Restriction to y, which must lie inside V_2.
CoxeterDiagram to_diagram(const DyerGraph& graph, const VertexSubset& y);

/// Connected components (diagram indices, ascending).
std::vector<std::vector<std::size_t>> diagram_components(const CoxeterDiagram& diagram);

/// An irreducible finite component together with its diagram vertices listed
/// in the standard layout of its type:
///   A_n  path order, starting from the end with the smaller index;
///   B_n  path order, starting at the end of the edge labelled 4;
///   D_n  the two short-arm leaves, the branch vertex, then the long arm outward;
///   H_n  path order, starting at the end of the edge labelled 5;
///   F4   path order; E_n centre first, then arms; I2(m) ascending.
struct CoxeterComponent {
  CoxeterType type;
  std::vector<std::size_t> layout;
};

/// Components in diagram_components order, or nullopt if the group is infinite.
std::optional<std::vector<CoxeterComponent>> decompose_finite(const CoxeterDiagram& diagram);
std::optional<std::vector<CoxeterType>> classify_finite(const CoxeterDiagram& diagram);

inline std::vector<unsigned> exponents(const CoxeterType& type) { return type.exponents(); }

class InfiniteCoxeterGroup : public std::domain_error {
 public:
  InfiniteCoxeterGroup() : std::domain_error("Coxeter diagram describes an infinite group") {}
};

/// prod over all exponents of (1 + t + ... + t^{m_i}). Throws InfiniteCoxeterGroup.
Polynomial solomon_growth(const CoxeterDiagram& diagram);
/// Sum of all exponents. Throws InfiniteCoxeterGroup.
unsigned longest_length(const CoxeterDiagram& diagram);
/// Throws InfiniteCoxeterGroup.
Integer group_order(const CoxeterDiagram& diagram);

}  // namespace dyer
