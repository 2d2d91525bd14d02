#include "dyer/growth.hpp"

#include <bit>

#include "dyer/coxeter.hpp"

namespace dyer {

namespace {

// (1 + t) / (1 - t)
const RationalFunction& integers_growth() {
  static const RationalFunction g(Polynomial{1, 1}, Polynomial{1, -1});
  return g;
}

RationalFunction signed_one(int size) { return (size % 2 == 0) ? RationalFunction(1) : RationalFunction(-1); }

std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kAuto: return "auto";
    case Strategy::kSubset: return "subset";
    case Strategy::kAmalgam: return "amalgam";
    case Strategy::kCrossCheck: return "cross-check";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kSpherical: return "spherical";
    case Method::kSubset: return "subset";
    case Method::kAmalgam: return "amalgam";
    case Method::kGraphProduct: return "graph_product";
  }
  return "?";
}

CrossCheckMismatch::CrossCheckMismatch(RationalFunction subset, RationalFunction amalgam)
    : std::logic_error("growth strategies disagree: subset recursion gives " + format_plain(subset) +
                       ", amalgam recursion gives " + format_plain(amalgam)),
      subset_(std::move(subset)),
      amalgam_(std::move(amalgam)) {}

RationalFunction cyclic_growth(Order order) {
  if (order.is_infinite()) return integers_growth();
  const unsigned n = order.value();
  const unsigned r = n / 2;
  std::vector<Integer> c(r + 1, Integer(2));
  c[0] = 1;
  if (n % 2 == 0) c[r] = 1;
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// GrowthEngine

GrowthEngine::GrowthEngine(DyerGraph graph) : graph_(std::move(graph)) {}

bool GrowthEngine::spherical_on(Mask m) {
  if (auto it = spherical_cache_.find(m); it != spherical_cache_.end()) return it->second;
  bool s = is_complete(graph_, m);
  if (s) s = classify_finite(to_diagram(graph_, graph_.subset(m & graph_.order_two_mask()))).has_value();
  spherical_cache_.emplace(m, s);
  return s;
}

RationalFunction GrowthEngine::spherical_on_mask(Mask m) {
  if (!spherical_on(m)) throw NotSpherical();
  RationalFunction g = solomon_growth(to_diagram(graph_, graph_.subset(m & graph_.order_two_mask())));
  for (Mask rest = m & graph_.periodic_mask(); rest != 0; rest &= rest - 1) {
    g *= cyclic_growth(graph_.order(lowest(rest)));
  }
  const int l = popcount(m & graph_.infinite_mask());
  for (int i = 0; i < l; ++i) g *= integers_growth();
  return g;
}

RationalFunction GrowthEngine::subset_on(Mask m) {
  if (auto it = subset_memo_.find(m); it != subset_memo_.end()) return it->second;
  RationalFunction g;
  if (spherical_on(m)) {
    g = spherical_on_mask(m);
  } else {
    // (-1)^{|V|+1} / G = sum_{Y proper} (-1)^{|Y|} / G_Y
    RationalFunction sum = 0;
    for (Mask y = (m - 1) & m;; y = (y - 1) & m) {
      auto inv = subset_inverse_.find(y);
      if (inv == subset_inverse_.end()) inv = subset_inverse_.emplace(y, subset_on(y).inverse()).first;
      if (popcount(y) % 2 == 0) {
        sum += inv->second;
      } else {
        sum -= inv->second;
      }
      if (y == 0) break;
    }
    g = signed_one(popcount(m) + 1) / sum;
  }
  subset_memo_.emplace(m, g);
  return g;
}

const RationalFunction& GrowthEngine::amalgam_inverse(Mask m) {
  auto it = amalgam_inverse_.find(m);
  if (it == amalgam_inverse_.end()) it = amalgam_inverse_.emplace(m, amalgam_on(m).inverse()).first;
  return it->second;
}

// Growth of a Coxeter group on a complete set of order-2 vertices: Solomon's
// product when finite, otherwise the alternating identity over proper subsets.
RationalFunction GrowthEngine::coxeter_on(Mask m) {
  const CoxeterDiagram diagram = to_diagram(graph_, graph_.subset(m));
  if (classify_finite(diagram)) return solomon_growth(diagram);
  RationalFunction sum = 0;
  for (Mask y = (m - 1) & m;; y = (y - 1) & m) {
    const RationalFunction& inv = amalgam_inverse(y);
    if (popcount(y) % 2 == 0) {
      sum += inv;
    } else {
      sum -= inv;
    }
    if (y == 0) break;
  }
  return signed_one(popcount(m) + 1) / sum;
}

RationalFunction GrowthEngine::amalgam_on(Mask m) {
  if (auto it = amalgam_memo_.find(m); it != amalgam_memo_.end()) return it->second;
  RationalFunction g;
  Mask pivot = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const std::size_t v = lowest(rest);
    if (((graph_.neighbours(v) | bit(v)) & m) != m) {
      pivot = bit(v);
      break;
    }
  }
  if (pivot != 0) {
    const std::size_t v = lowest(pivot);
    const Mask link = graph_.neighbours(v) & m;
    RationalFunction inv = amalgam_inverse(m & ~pivot);
    inv += amalgam_inverse(link | pivot);
    inv -= amalgam_inverse(link);
    g = inv.inverse();
  } else {
    // Complete: D = D_2 x D_p x D_inf.
    g = coxeter_on(m & graph_.order_two_mask());
    for (Mask rest = m & graph_.periodic_mask(); rest != 0; rest &= rest - 1) {
      g *= cyclic_growth(graph_.order(lowest(rest)));
    }
    const int l = popcount(m & graph_.infinite_mask());
    for (int i = 0; i < l; ++i) g *= integers_growth();
  }
  amalgam_memo_.emplace(m, g);
  return g;
}

bool GrowthEngine::is_spherical(const VertexSubset& y) {
  graph_.check_owns(y);
  return spherical_on(y.bits());
}

RationalFunction GrowthEngine::spherical(const VertexSubset& y) {
  graph_.check_owns(y);
  return spherical_on_mask(y.bits());
}

RationalFunction GrowthEngine::subset_recursion(const VertexSubset& y) {
  graph_.check_owns(y);
  return subset_on(y.bits());
}

RationalFunction GrowthEngine::amalgam(const VertexSubset& y) {
  graph_.check_owns(y);
  return amalgam_on(y.bits());
}

RationalFunction GrowthEngine::proper_subset_sum(const VertexSubset& x) {
  graph_.check_owns(x);
  const Mask m = x.bits();
  RationalFunction sum = 0;
  if (m == 0) return sum;
  for (Mask y = (m - 1) & m;; y = (y - 1) & m) {
    if (popcount(y) % 2 == 0) {
      sum += amalgam_inverse(y);
    } else {
      sum -= amalgam_inverse(y);
    }
    if (y == 0) break;
  }
  return sum;
}

RationalFunction GrowthEngine::bx_series(const VertexSubset& x) {
  graph_.check_owns(x);
  const Mask all = graph_.vertex_mask();
  const Mask base = x.bits();
  const Mask free = all & ~base;
  const RationalFunction g = amalgam_on(all);
  RationalFunction sum = 0;
  for (Mask extra = free;; extra = (extra - 1) & free) {
    const RationalFunction term = g * amalgam_inverse(base | extra);
    if (popcount(extra) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (extra == 0) break;
  }
  return sum;
}

// ---------------------------------------------------------------------------

RationalFunction spherical_growth(const DyerGraph& graph) {
  GrowthEngine engine(graph);
  return engine.spherical(graph.all());
}

RationalFunction subset_recursion_growth(const DyerGraph& graph) {
  GrowthEngine engine(graph);
  return engine.subset_recursion(graph.all());
}

RationalFunction amalgam_growth(const DyerGraph& graph) {
  GrowthEngine engine(graph);
  return engine.amalgam(graph.all());
}

GrowthResult growth(const DyerGraph& graph, Strategy strategy) {
  GrowthEngine engine(graph);
  const VertexSubset all = graph.all();
  const bool spherical = engine.is_spherical(all);
  GrowthResult r;
  switch (strategy) {
    case Strategy::kAuto:
    case Strategy::kAmalgam:
      r.series = engine.amalgam(all);
      r.method = Method::kAmalgam;
      r.subsets_evaluated = engine.amalgam_memo_size();
      break;
    case Strategy::kSubset:
      r.series = engine.subset_recursion(all);
      r.method = Method::kSubset;
      r.subsets_evaluated = engine.subset_memo_size();
      break;
    case Strategy::kCrossCheck: {
      RationalFunction s = engine.subset_recursion(all);
      RationalFunction a = engine.amalgam(all);
      if (!(s == a)) throw CrossCheckMismatch(std::move(s), std::move(a));
      r.series = std::move(a);
      r.method = Method::kAmalgam;
      r.subsets_evaluated = engine.subset_memo_size() + engine.amalgam_memo_size();
      break;
    }
  }
  if (spherical) r.method = Method::kSpherical;
  return r;
}

RationalFunction graph_product_check(const DyerGraph& graph) {
  for (const auto& e : graph.edges()) {
    if (e.label != 2) throw NotGraphProduct();
  }
  const std::size_t n = graph.size();
  std::vector<RationalFunction> factor;  // 1/G_{Z_f(x)} - 1
  factor.reserve(n);
  for (std::size_t v = 0; v < n; ++v) factor.push_back(cyclic_growth(graph.order(v)).inverse() - 1);

  // Depth-first enumeration of cliques, each extended only by larger indices.
  RationalFunction sum = 1;  // the empty clique
  struct Frame {
    Mask candidates;
    RationalFunction product;
  };
  std::vector<Frame> stack{{graph.vertex_mask(), RationalFunction(1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (Mask rest = f.candidates; rest != 0; rest &= rest - 1) {
      const std::size_t v = lowest(rest);
      RationalFunction p = f.product * factor[v];
      sum += p;
      const Mask later = (rest & ~bit(v)) & graph.neighbours(v);
      if (later != 0) stack.push_back({later, std::move(p)});
    }
  }
  return sum.inverse();
}

RationalFunction pd_series(const DyerGraph& graph) {
  GrowthEngine engine(graph);
  if (!engine.is_spherical(graph.all())) throw NotSpherical();
  const unsigned m = longest_length(to_diagram(graph, graph.subset(graph.order_two_mask())));
  RationalFunction p = Polynomial::monomial(1, m);
  for (Mask rest = graph.periodic_mask(); rest != 0; rest &= rest - 1) {
    const unsigned f = graph.order(lowest(rest)).value();
    const unsigned r = f / 2;
    // even 2r: 2t + ... + 2t^{r-1} + t^r; odd 2r+1: 2t + ... + 2t^r
    std::vector<Integer> c(r + 1, Integer(2));
    c[0] = 0;
    if (f % 2 == 0) c[r] = 1;
    p *= Polynomial(std::move(c));
  }
  const int l = popcount(graph.infinite_mask());
  const RationalFunction two_t_over(Polynomial{0, 2}, Polynomial{1, -1});
  for (int i = 0; i < l; ++i) p *= two_t_over;
  return p;
}

RationalFunction bx_series(const DyerGraph& graph, const VertexSubset& x) {
  GrowthEngine engine(graph);
  return engine.bx_series(x);
}

std::vector<Integer> sphere_sizes(const DyerGraph& graph, std::size_t n) {
  return growth(graph).series.taylor_coefficients(n);
}

}  // namespace dyer
