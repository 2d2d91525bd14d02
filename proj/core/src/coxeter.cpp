#include "dyer/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace dyer {

// ---------------------------------------------------------------------------
// CoxeterType

CoxeterType CoxeterType::a(unsigned rank) {
  if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
  return {Family::A, rank, 0};
}

CoxeterType CoxeterType::b(unsigned rank) {
  if (rank < 2) throw std::invalid_argument("B_n requires n >= 2");
  if (rank == 2) return i2(4);
  return {Family::B, rank, 0};
}

CoxeterType CoxeterType::d(unsigned rank) {
  if (rank < 4) throw std::invalid_argument("D_n requires n >= 4");
  return {Family::D, rank, 0};
}

CoxeterType CoxeterType::e(unsigned rank) {
  if (rank < 6 || rank > 8) throw std::invalid_argument("E_n requires 6 <= n <= 8");
  return {Family::E, rank, 0};
}

CoxeterType CoxeterType::f4() { return {Family::F, 4, 0}; }

CoxeterType CoxeterType::h(unsigned rank) {
  if (rank != 3 && rank != 4) throw std::invalid_argument("H_n requires n in {3, 4}");
  return {Family::H, rank, 0};
}

CoxeterType CoxeterType::i2(unsigned label) {
  if (label < 3) throw std::invalid_argument("I2(m) requires m >= 3");
  if (label == 3) return a(2);
  return {Family::I2, 2, label};
}

std::vector<unsigned> CoxeterType::exponents() const {
  std::vector<unsigned> out;
  switch (family_) {
    case Family::A:
      for (unsigned i = 1; i <= rank_; ++i) out.push_back(i);
      break;
    case Family::B:
      for (unsigned i = 1; i <= rank_; ++i) out.push_back(2 * i - 1);
      break;
    case Family::D:
      for (unsigned i = 1; i < rank_; ++i) out.push_back(2 * i - 1);
      out.push_back(rank_ - 1);
      std::sort(out.begin(), out.end());
      break;
    case Family::E:
      if (rank_ == 6) out = {1, 4, 5, 7, 8, 11};
      if (rank_ == 7) out = {1, 5, 7, 9, 11, 13, 17};
      if (rank_ == 8) out = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F:
      out = {1, 5, 7, 11};
      break;
    case Family::H:
      if (rank_ == 3) out = {1, 5, 9};
      if (rank_ == 4) out = {1, 11, 19, 29};
      break;
    case Family::I2:
      out = {1, label_ - 1};
      break;
  }
  return out;
}

Integer CoxeterType::order() const {
  Integer n = 1;
  for (unsigned m : exponents()) n *= m + 1;
  return n;
}

unsigned CoxeterType::longest_length() const {
  const auto ex = exponents();
  return std::accumulate(ex.begin(), ex.end(), 0U);
}

Polynomial CoxeterType::growth() const {
  Polynomial p = Polynomial::constant(1);
  for (unsigned m : exponents()) p *= Polynomial::geometric(m);
  return p;
}

std::string CoxeterType::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::E: return "E" + std::to_string(rank_);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank_);
    case Family::I2: return "I2(" + std::to_string(label_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Diagrams

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> names, std::vector<std::size_t> host_vertices,
                               std::vector<unsigned> labels)
    : names_(std::move(names)), host_(std::move(host_vertices)), labels_(std::move(labels)) {
  const std::size_t n = names_.size();
  if (host_.size() != n || labels_.size() != n * n) {
    throw std::invalid_argument("inconsistent Coxeter diagram dimensions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned m = labels_[i * n + j];
      if (label(i, j) != label(j, i)) throw std::invalid_argument("Coxeter diagram labels must be symmetric");
      if (i != j && m < 2) throw std::invalid_argument("Coxeter diagram label below 2");
    }
  }
}

CoxeterDiagram to_diagram(const DyerGraph& graph, const VertexSubset& y) {
  graph.check_owns(y);
  if ((y.bits() & ~graph.order_two_mask()) != 0) {
    throw std::invalid_argument("Coxeter diagram requested on vertices of order other than 2");
  }
  std::vector<std::size_t> host;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (y.contains(v)) host.push_back(v);
  }
  const std::size_t n = host.size();
  std::vector<std::string> names;
  std::vector<unsigned> labels(n * n, CoxeterDiagram::kCommute);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(graph.name(host[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const unsigned m = graph.label(host[i], host[j]);
      labels[i * n + j] = m == 0 ? CoxeterDiagram::kInfinite : m;
    }
  }
  return {std::move(names), std::move(host), std::move(labels)};
}

CoxeterDiagram to_diagram(const DyerGraph& graph) { return to_diagram(graph, graph.all()); }

std::vector<std::vector<std::size_t>> diagram_components(const CoxeterDiagram& diagram) {
  const std::size_t n = diagram.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && diagram.joined(comp[k], j)) {
          seen[j] = true;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Walks from `start` away from `from` along a path of degree-<=2 vertices.
std::vector<std::size_t> walk(const CoxeterDiagram& d, const std::vector<std::size_t>& comp, std::size_t from,
                              std::size_t start) {
  std::vector<std::size_t> out{start};
  std::size_t prev = from;
  std::size_t cur = start;
  for (;;) {
    std::size_t next = cur;
    for (std::size_t v : comp) {
      if (v != prev && v != cur && d.joined(cur, v)) {
        next = v;
        break;
      }
    }
    if (next == cur) return out;
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
}

std::optional<CoxeterComponent> classify_component(const CoxeterDiagram& d, const std::vector<std::size_t>& comp) {
  const std::size_t n = comp.size();
  if (n == 1) return CoxeterComponent{CoxeterType::a(1), comp};

  std::size_t edges = 0;
  std::vector<std::size_t> degree(d.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> special;  // edges with label != 3
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t u = comp[a];
      const std::size_t v = comp[b];
      if (!d.joined(u, v)) continue;
      if (d.label(u, v) == CoxeterDiagram::kInfinite) return std::nullopt;
      ++edges;
      ++degree[u];
      ++degree[v];
      if (d.label(u, v) != 3) special.emplace_back(u, v);
    }
  }
  if (edges != n - 1) return std::nullopt;  // contains a cycle

  if (n == 2) {
    const unsigned m = d.label(comp[0], comp[1]);
    return CoxeterComponent{m == 3 ? CoxeterType::a(2) : CoxeterType::i2(m), comp};
  }

  std::vector<std::size_t> branches;
  for (std::size_t v : comp) {
    if (degree[v] > 3) return std::nullopt;
    if (degree[v] == 3) branches.push_back(v);
  }

  if (branches.size() > 1) return std::nullopt;
  if (branches.size() == 1) {
    if (!special.empty()) return std::nullopt;
    const std::size_t centre = branches[0];
    std::vector<std::vector<std::size_t>> arms;
    for (std::size_t v : comp) {
      if (d.joined(centre, v)) arms.push_back(walk(d, comp, centre, v));
    }
    std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t a = arms[0].size();
    const std::size_t b = arms[1].size();
    const std::size_t c = arms[2].size();
    std::vector<std::size_t> layout;
    if (a == 1 && b == 1) {
      layout = {arms[0][0], arms[1][0], centre};
      layout.insert(layout.end(), arms[2].begin(), arms[2].end());
      return CoxeterComponent{CoxeterType::d(static_cast<unsigned>(n)), layout};
    }
    if (a == 1 && b == 2 && c >= 2 && c <= 4) {
      layout = {centre};
      for (const auto& arm : arms) layout.insert(layout.end(), arm.begin(), arm.end());
      return CoxeterComponent{CoxeterType::e(static_cast<unsigned>(n)), layout};
    }
    return std::nullopt;
  }

  // A path.
  std::vector<std::size_t> ends;
  for (std::size_t v : comp) {
    if (degree[v] == 1) ends.push_back(v);
  }
  std::vector<std::size_t> path = walk(d, comp, ends[0], ends[0]);
  if (special.empty()) return CoxeterComponent{CoxeterType::a(static_cast<unsigned>(n)), path};
  if (special.size() > 1) return std::nullopt;

  const auto [su, sv] = special[0];
  const unsigned m = d.label(su, sv);
  std::size_t k = 0;  // special edge joins path[k] and path[k + 1]
  while (!((path[k] == su && path[k + 1] == sv) || (path[k] == sv && path[k + 1] == su))) ++k;
  const bool at_front = k == 0;
  const bool at_back = k == n - 2;
  if (at_back && !at_front) std::reverse(path.begin(), path.end());

  if (m == 4) {
    if (at_front || at_back) return CoxeterComponent{CoxeterType::b(static_cast<unsigned>(n)), path};
    if (n == 4 && k == 1) return CoxeterComponent{CoxeterType::f4(), path};
    return std::nullopt;
  }
  if (m == 5 && (n == 3 || n == 4) && (at_front || at_back)) {
    return CoxeterComponent{CoxeterType::h(static_cast<unsigned>(n)), path};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<CoxeterComponent>> decompose_finite(const CoxeterDiagram& diagram) {
  std::vector<CoxeterComponent> out;
  for (const auto& comp : diagram_components(diagram)) {
    auto c = classify_component(diagram, comp);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

std::optional<std::vector<CoxeterType>> classify_finite(const CoxeterDiagram& diagram) {
  auto comps = decompose_finite(diagram);
  if (!comps) return std::nullopt;
  std::vector<CoxeterType> out;
  out.reserve(comps->size());
  for (const auto& c : *comps) out.push_back(c.type);
  return out;
}

namespace {

std::vector<CoxeterType> finite_types(const CoxeterDiagram& diagram) {
  auto types = classify_finite(diagram);
  if (!types) throw InfiniteCoxeterGroup();
  return *types;
}

}  // namespace

Polynomial solomon_growth(const CoxeterDiagram& diagram) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& t : finite_types(diagram)) p *= t.growth();
  return p;
}

unsigned longest_length(const CoxeterDiagram& diagram) {
  unsigned total = 0;
  for (const auto& t : finite_types(diagram)) total += t.longest_length();
  return total;
}

Integer group_order(const CoxeterDiagram& diagram) {
  Integer total = 1;
  for (const auto& t : finite_types(diagram)) total *= t.order();
  return total;
}

}  // namespace dyer
