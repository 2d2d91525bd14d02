#include "dyer/euler.hpp"

#include <bit>
#include <unordered_map>

#include "dyer/coxeter.hpp"
#include "dyer/growth.hpp"

namespace dyer {

std::string to_string(EulerMethod m) { return m == EulerMethod::kViaGrowth ? "growth" : "recursive"; }

EulerResult euler_via_growth(const DyerGraph& graph) {
  const RationalFunction inv = growth(graph).series.inverse();
  return {inv.evaluate(Rational(1)), EulerMethod::kViaGrowth};
}

namespace {

class EulerRecursion {
 public:
  explicit EulerRecursion(const DyerGraph& graph) : graph_(graph) {}

  Rational on(Mask m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Rational chi;
    Mask pivot = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (((graph_.neighbours(v) | bit(v)) & m) != m) {
        pivot = bit(v);
        break;
      }
    }
    if (pivot != 0) {
      const Mask link = graph_.neighbours(static_cast<std::size_t>(std::countr_zero(pivot))) & m;
      chi = on(m & ~pivot) + on(link | pivot) - on(link);
    } else if ((m & graph_.infinite_mask()) != 0) {
      chi = 0;  // a Z^l factor with l > 0
    } else {
      chi = coxeter(m & graph_.order_two_mask());
      for (Mask rest = m & graph_.periodic_mask(); rest != 0; rest &= rest - 1) {
        chi /= graph_.order(static_cast<std::size_t>(std::countr_zero(rest))).value();
      }
    }
    chi.canonicalize();
    memo_.emplace(m, chi);
    return chi;
  }

 private:
  // Complete set of order-2 vertices: 1/|W| when finite, otherwise
  // chi(W) = (-1)^{|S|+1} sum_{X proper} (-1)^{|X|} chi(W_X).
  Rational coxeter(Mask m) {
    if (auto it = coxeter_memo_.find(m); it != coxeter_memo_.end()) return it->second;
    const CoxeterDiagram diagram = to_diagram(graph_, graph_.subset(m));
    Rational chi;
    if (classify_finite(diagram)) {
      chi = Rational(Integer(1), group_order(diagram));
    } else {
      Rational sum = 0;
      for (Mask y = (m - 1) & m;; y = (y - 1) & m) {
        if (std::popcount(y) % 2 == 0) {
          sum += coxeter(y);
        } else {
          sum -= coxeter(y);
        }
        if (y == 0) break;
      }
      chi = (std::popcount(m) % 2 == 1) ? sum : Rational(-sum);
    }
    chi.canonicalize();
    coxeter_memo_.emplace(m, chi);
    return chi;
  }

  const DyerGraph& graph_;
  std::unordered_map<Mask, Rational> memo_;
  std::unordered_map<Mask, Rational> coxeter_memo_;
};

}  // namespace

EulerResult euler_recursive(const DyerGraph& graph) {
  EulerRecursion rec(graph);
  return {rec.on(graph.vertex_mask()), EulerMethod::kRecursive};
}

}  // namespace dyer
