#pragma once

// Rational Euler characteristic of a Dyer group, two independent ways:
// from the growth series (chi = 1 / G(1)) and from the product and amalgam
// rules for chi directly.

#include <string>

#include "dyer/graph.hpp"
#include "dyer/ratfun.hpp"

namespace dyer {

enum class EulerMethod { kViaGrowth, kRecursive };

std::string to_string(EulerMethod m);

struct EulerResult {
  Rational value;
  EulerMethod method;
};

/// 1/G evaluated at t = 1. Throws PoleError if 1/G has a pole there.
EulerResult euler_via_growth(const DyerGraph& graph);

/// chi(D) = chi(D_{V-v}) + chi(D_st(v)) - chi(D_lk(v)) for the first vertex with
/// st(v) != V; on complete graphs chi(D_2) chi(D_p) chi(D_inf). An infinite D_2
/// is handled by the Coxeter alternating identity evaluated at t = 1.
EulerResult euler_recursive(const DyerGraph& graph);

}  // namespace dyer
