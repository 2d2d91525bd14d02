#pragma once

// Shared helpers for the test binaries: compact graph construction and the
// exhaustive small-graph corpus.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "dyer/graph.hpp"
#include "dyer/ratfun.hpp"

namespace dyer::test {

constexpr long long kInf = -1;

/// Vertices as (name, order) with kInf for infinity; edges as (u, v, label).
inline DyerGraph make_graph(std::initializer_list<std::pair<std::string, long long>> vertices,
                            std::initializer_list<std::tuple<std::string, std::string, long long>> edges = {}) {
  RawGraph raw;
  for (const auto& [name, order] : vertices) {
    raw.vertices.push_back({name, order == kInf ? std::nullopt : std::optional<long long>(order)});
  }
  for (const auto& [u, v, label] : edges) raw.edges.push_back({u, v, label});
  return validate(raw);
}

/// Complete graph on order-2 vertices s0..s{n-1} with the given label matrix
/// entries (upper triangle, row major); 0 means no edge.
inline DyerGraph coxeter_graph(std::size_t n, const std::vector<long long>& upper) {
  RawGraph raw;
  for (std::size_t i = 0; i < n; ++i) raw.vertices.push_back({"s" + std::to_string(i), 2});
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (upper.at(k) != 0) raw.edges.push_back({"s" + std::to_string(i), "s" + std::to_string(j), upper[k]});
    }
  }
  return validate(raw);
}

/// Commuting-generator diagrams for the classical types, labels along a path.
inline DyerGraph coxeter_path(const std::vector<long long>& bonds) {
  const std::size_t n = bonds.size() + 1;
  std::vector<long long> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(j == i + 1 ? bonds[i] : 2);
  }
  return coxeter_graph(n, upper);
}

/// Every valid Dyer graph on 0..max_vertices labelled vertices with orders
/// from `orders` (kInf allowed) and labels from `labels` (plus "no edge").
inline void for_each_small_graph(std::size_t max_vertices, const std::vector<long long>& orders,
                                 const std::vector<long long>& labels, const std::function<void(const DyerGraph&)>& visit) {
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::size_t> ord(n, 0);
    while (true) {
      // Per pair, the admissible choices: 0 = no edge, else a label.
      std::vector<std::vector<long long>> choices;
      for (auto [i, j] : pairs) {
        std::vector<long long> c{0};
        for (long long l : labels) {
          if (l == 2 || (orders[ord[i]] == 2 && orders[ord[j]] == 2)) c.push_back(l);
        }
        choices.push_back(std::move(c));
      }
      std::vector<std::size_t> pick(pairs.size(), 0);
      while (true) {
        RawGraph raw;
        for (std::size_t i = 0; i < n; ++i) {
          const long long o = orders[ord[i]];
          raw.vertices.push_back({"v" + std::to_string(i), o == kInf ? std::nullopt : std::optional<long long>(o)});
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const long long l = choices[p][pick[p]];
          if (l != 0) raw.edges.push_back({"v" + std::to_string(pairs[p].first), "v" + std::to_string(pairs[p].second), l});
        }
        visit(validate(raw));
        std::size_t p = 0;
        while (p < pick.size() && ++pick[p] == choices[p].size()) pick[p++] = 0;
        if (p == pick.size()) break;
      }
      std::size_t v = 0;
      while (v < n && ++ord[v] == orders.size()) ord[v++] = 0;
      if (v == n) break;
    }
  }
}

/// Coefficients of num/den as a power series by naive long division over Q.
inline std::vector<Rational> long_division(const Polynomial& num, const Polynomial& den, std::size_t n) {
  std::vector<Rational> rem(n + 1);
  for (std::size_t i = 0; i <= n; ++i) rem[i] = num.coefficient(i);
  std::vector<Rational> out(n + 1);
  const Rational d0 = den.coefficient(0);
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = rem[k] / d0;
    for (std::size_t j = 0; k + j <= n; ++j) rem[k + j] -= out[k] * Rational(den.coefficient(j));
  }
  return out;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return Polynomial(std::move(c));
}

}  // namespace dyer::test
