#include "dyer/graph.hpp"

#include <atomic>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dyer/coxeter.hpp"

namespace dyer {

namespace {

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream os;
  os << "invalid Dyer graph";
  for (const auto& i : issues) os << "\n  - " << i;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

Order Order::finite(unsigned n) {
  if (n < 2) throw std::invalid_argument("vertex order must be at least 2");
  return Order(n);
}

unsigned Order::value() const {
  if (is_infinite()) throw std::logic_error("infinite order has no finite value");
  return value_;
}

std::string Order::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::invalid_argument(join_issues(issues)), issues_(std::move(issues)) {}

// ---------------------------------------------------------------------------

void VertexSubset::check_same(const VertexSubset& other) const {
  if (graph_id_ != other.graph_id_) throw ForeignSubset();
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
  check_same(other);
  return (bits_ & ~other.bits_) == 0;
}

VertexSubset VertexSubset::operator|(const VertexSubset& other) const {
  check_same(other);
  return {graph_id_, bits_ | other.bits_};
}

VertexSubset VertexSubset::operator&(const VertexSubset& other) const {
  check_same(other);
  return {graph_id_, bits_ & other.bits_};
}

VertexSubset VertexSubset::operator-(const VertexSubset& other) const {
  check_same(other);
  return {graph_id_, bits_ & ~other.bits_};
}

// ---------------------------------------------------------------------------

DyerGraph::DyerGraph() : id_(next_graph_id()) {}

void DyerGraph::finish() {
  const std::size_t n = size();
  adjacency_.assign(n, 0);
  v2_ = vp_ = vinf_ = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (labels_[u * n + v] != 0) adjacency_[u] |= bit(v);
    }
    const Order o = orders_[u];
    if (o.is_infinite()) {
      vinf_ |= bit(u);
    } else if (o.is_two()) {
      v2_ |= bit(u);
    } else {
      vp_ |= bit(u);
    }
  }
}

std::optional<std::size_t> DyerGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<DyerGraph::Edge> DyerGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.push_back({u, v, label(u, v)});
    }
  }
  return out;
}

std::size_t DyerGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adjacency_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

VertexSubset DyerGraph::subset(Mask bits) const {
  if ((bits & ~vertex_mask()) != 0) throw std::out_of_range("vertex subset exceeds the graph");
  return {id_, bits};
}

VertexSubset DyerGraph::subset(const std::vector<std::string>& names) const {
  Mask bits = 0;
  for (const auto& n : names) {
    const auto v = index_of(n);
    if (!v) throw std::out_of_range("unknown vertex '" + n + "'");
    bits |= bit(*v);
  }
  return {id_, bits};
}

void DyerGraph::check_owns(const VertexSubset& y) const {
  if (y.graph_id() != id_) throw ForeignSubset();
}

RawGraph DyerGraph::to_raw() const {
  RawGraph raw;
  for (std::size_t v = 0; v < size(); ++v) {
    RawVertex rv{names_[v], std::nullopt};
    if (!orders_[v].is_infinite()) rv.order = orders_[v].value();
    raw.vertices.push_back(std::move(rv));
  }
  for (const auto& e : edges()) raw.edges.push_back({names_[e.first], names_[e.second], e.label});
  return raw;
}

DyerGraph validate(const RawGraph& raw) {
  std::vector<std::string> issues;
  std::unordered_map<std::string, std::size_t> index;

  if (raw.vertices.size() > kMaxVertices) {
    issues.push_back("at most " + std::to_string(kMaxVertices) + " vertices are supported, got " +
                     std::to_string(raw.vertices.size()));
  }
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    const auto& v = raw.vertices[i];
    if (v.name.empty()) issues.push_back("vertex #" + std::to_string(i) + " has an empty name");
    if (!index.emplace(v.name, i).second) issues.push_back("duplicate vertex name '" + v.name + "'");
    if (v.order && *v.order < 2) {
      issues.push_back("vertex '" + v.name + "' has order " + std::to_string(*v.order) + " < 2");
    }
  }

  auto order_is_two = [&](std::size_t i) { return raw.vertices[i].order && *raw.vertices[i].order == 2; };

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : raw.edges) {
    const std::string desc = "edge {" + e.first + ", " + e.second + "}";
    const auto a = index.find(e.first);
    const auto b = index.find(e.second);
    bool ok = true;
    if (a == index.end()) {
      issues.push_back(desc + " references unknown vertex '" + e.first + "'");
      ok = false;
    }
    if (b == index.end()) {
      issues.push_back(desc + " references unknown vertex '" + e.second + "'");
      ok = false;
    }
    if (e.label < 2) {
      issues.push_back(desc + " has label " + std::to_string(e.label) + " < 2");
      ok = false;
    }
    if (!ok) continue;
    if (a->second == b->second) {
      issues.push_back(desc + " is a self-loop");
      continue;
    }
    const auto key = std::minmax(a->second, b->second);
    if (!seen.insert(key).second) {
      issues.push_back("duplicate " + desc);
      continue;
    }
    if (e.label != 2 && !(order_is_two(a->second) && order_is_two(b->second))) {
      issues.push_back(desc + " has label " + std::to_string(e.label) +
                       " but an endpoint has order other than 2");
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  DyerGraph g;
  const std::size_t n = raw.vertices.size();
  for (const auto& v : raw.vertices) {
    g.names_.push_back(v.name);
    g.orders_.push_back(v.order ? Order::finite(static_cast<unsigned>(*v.order)) : Order::infinite());
  }
  g.labels_.assign(n * n, 0);
  for (const auto& e : raw.edges) {
    const std::size_t a = index.at(e.first);
    const std::size_t b = index.at(e.second);
    g.labels_[a * n + b] = g.labels_[b * n + a] = static_cast<unsigned>(e.label);
  }
  g.finish();
  return g;
}

DyerGraph induced(const DyerGraph& graph, const VertexSubset& y) {
  graph.check_owns(y);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (y.contains(v)) keep.push_back(v);
  }
  DyerGraph g;
  const std::size_t n = keep.size();
  g.labels_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    g.names_.push_back(graph.name(keep[i]));
    g.orders_.push_back(graph.order(keep[i]));
    for (std::size_t j = 0; j < n; ++j) g.labels_[i * n + j] = graph.label(keep[i], keep[j]);
  }
  g.finish();
  return g;
}

std::pair<VertexSubset, VertexSubset> link_star(const DyerGraph& graph, std::size_t v) {
  if (v >= graph.size()) throw std::out_of_range("unknown vertex index " + std::to_string(v));
  const Mask lk = graph.neighbours(v);
  return {graph.subset(lk), graph.subset(lk | bit(v))};
}

std::pair<VertexSubset, VertexSubset> link_star(const DyerGraph& graph, std::string_view name) {
  const auto v = graph.index_of(name);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
  return link_star(graph, *v);
}

bool is_complete(const DyerGraph& graph, Mask vertices) {
  for (Mask rest = vertices; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const Mask others = vertices & ~bit(v);
    if ((graph.neighbours(v) & others) != others) return false;
  }
  return true;
}

StructureReport classify(const DyerGraph& graph, const VertexSubset& y) {
  graph.check_owns(y);
  const Mask m = y.bits();
  StructureReport r;
  r.is_complete = is_complete(graph, m);
  r.order_two_count = static_cast<std::size_t>(popcount(m & graph.order_two_mask()));
  r.periodic_count = static_cast<std::size_t>(popcount(m & graph.periodic_mask()));
  r.infinite_count = static_cast<std::size_t>(popcount(m & graph.infinite_mask()));

  const CoxeterDiagram diagram = to_diagram(graph, graph.subset(m & graph.order_two_mask()));
  for (const auto& comp : diagram_components(diagram)) {
    std::vector<std::size_t> host;
    for (std::size_t i : comp) host.push_back(diagram.host_vertex(i));
    r.coxeter_components.push_back(std::move(host));
  }
  r.coxeter_types = classify_finite(diagram);
  r.is_spherical = r.is_complete && r.coxeter_types.has_value();
  r.is_finite_group = r.is_spherical && r.infinite_count == 0;
  return r;
}

StructureReport classify(const DyerGraph& graph) { return classify(graph, graph.all()); }

}  // namespace dyer
