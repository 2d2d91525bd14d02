#include "dyer/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "dyer/coxeter.hpp"

namespace dyer {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ e.size();
  for (std::int64_t x : e) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t OracleGroup::generator_index(const std::string& name) const {
  const auto& names = generator_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

Element canonicalize(const OracleGroup& model, const Word& word) {
  Element g = model.identity();
  for (const auto& [gen, exponent] : word) {
    if (gen >= model.generator_count()) throw std::out_of_range("unknown generator index " + std::to_string(gen));
    const bool inverse = exponent < 0;
    const std::int64_t reps = inverse ? -exponent : exponent;
    for (std::int64_t i = 0; i < reps; ++i) g = model.multiply(g, gen, inverse);
  }
  return g;
}

// ---------------------------------------------------------------------------
// CyclicGraphProduct

CyclicGraphProduct::CyclicGraphProduct(DyerGraph graph) : graph_(std::move(graph)) {
  for (const auto& e : graph_.edges()) {
    if (e.label != 2) throw std::invalid_argument("cyclic graph product requires every edge label to be 2");
  }
}

std::string CyclicGraphProduct::description() const {
  auto factor = [&](std::size_t v) {
    const Order o = graph_.order(v);
    return o.is_infinite() ? std::string("Z") : "Z/" + std::to_string(o.value());
  };
  if (graph_.size() == 1) return factor(0);
  std::string out = "GraphProduct(";
  for (std::size_t v = 0; v < graph_.size(); ++v) {
    if (v != 0) out += ", ";
    out += graph_.name(v) + ":" + factor(v);
  }
  return out + ")";
}

std::int64_t CyclicGraphProduct::reduce(std::size_t vertex, std::int64_t exponent) const {
  const Order o = graph_.order(vertex);
  if (o.is_infinite()) return exponent;
  const auto n = static_cast<std::int64_t>(o.value());
  return ((exponent % n) + n) % n;
}

std::vector<CyclicGraphProduct::Syllable> CyclicGraphProduct::normal_form(std::vector<Syllable> word) const {
  for (auto& s : word) {
    if (s.vertex >= graph_.size()) throw std::out_of_range("unknown generator index " + std::to_string(s.vertex));
    s.exponent = reduce(s.vertex, s.exponent);
  }
  std::erase_if(word, [](const Syllable& s) { return s.exponent == 0; });

  // Merge two syllables of one vertex whenever everything between them
  // commutes with that vertex.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < word.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[j].vertex == word[i].vertex) {
          word[i].exponent = reduce(word[i].vertex, word[i].exponent + word[j].exponent);
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
          if (word[i].exponent == 0) word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commute(word[i].vertex, word[j].vertex)) break;
      }
    }
  }

  // Lexicographic normal form: repeatedly take the smallest vertex among the
  // syllables that can be shuffled to the front.
  std::vector<Syllable> out;
  out.reserve(word.size());
  while (!word.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < word.size(); ++k) {
      bool movable = true;
      for (std::size_t j = 0; j < k && movable; ++j) movable = commute(word[j].vertex, word[k].vertex);
      if (movable && word[k].vertex < word[best].vertex) best = k;
    }
    out.push_back(word[best]);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<CyclicGraphProduct::Syllable> CyclicGraphProduct::decode(const Element& e) const {
  std::vector<Syllable> out;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2) out.push_back({static_cast<std::size_t>(e[i]), e[i + 1]});
  return out;
}

Element CyclicGraphProduct::encode(const std::vector<Syllable>& s) const {
  Element out;
  out.reserve(2 * s.size());
  for (const auto& x : s) {
    out.push_back(static_cast<std::int64_t>(x.vertex));
    out.push_back(x.exponent);
  }
  return out;
}

Element CyclicGraphProduct::multiply(const Element& g, std::size_t generator, bool inverse) const {
  auto word = decode(g);
  word.push_back({generator, inverse ? -1 : 1});
  return encode(normal_form(std::move(word)));
}

std::int64_t CyclicGraphProduct::syllable_norm_sum(const Element& e) const {
  std::int64_t total = 0;
  for (const auto& s : decode(e)) {
    const Order o = graph_.order(s.vertex);
    if (o.is_infinite()) {
      total += s.exponent < 0 ? -s.exponent : s.exponent;
    } else {
      const auto n = static_cast<std::int64_t>(o.value());
      total += std::min(s.exponent, n - s.exponent);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// PermutationCoxeter

namespace {

Element identity_images(std::size_t n) {
  Element e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::int64_t>(i) + 1;
  return e;
}

Element swap_images(std::size_t n, std::size_t i, std::size_t j) {
  Element e = identity_images(n);
  std::swap(e[i], e[j]);
  return e;
}

std::int64_t positive_mod(std::int64_t x, std::int64_t m) { return m == 0 ? x : ((x % m) + m) % m; }

}  // namespace

PermutationCoxeter::PermutationCoxeter(const CoxeterType& type, std::vector<std::string> names)
    : description_("Coxeter " + type.name()), names_(std::move(names)) {
  const std::size_t n = type.rank();
  if (names_.size() != n) throw std::invalid_argument("generator name count does not match the Coxeter rank");
  switch (type.family()) {
    case CoxeterType::Family::A:
      points_ = n + 1;
      for (std::size_t i = 0; i < n; ++i) generators_.push_back(swap_images(points_, i, i + 1));
      break;
    case CoxeterType::Family::B: {
      points_ = n;
      Element neg = identity_images(n);
      neg[0] = -1;
      generators_.push_back(neg);
      for (std::size_t i = 1; i < n; ++i) generators_.push_back(swap_images(points_, i - 1, i));
      break;
    }
    case CoxeterType::Family::D: {
      points_ = n;
      generators_.push_back(swap_images(points_, 0, 1));
      Element negswap = identity_images(n);
      negswap[0] = -2;
      negswap[1] = -1;
      generators_.push_back(negswap);
      for (std::size_t i = 2; i < n; ++i) generators_.push_back(swap_images(points_, i - 1, i));
      break;
    }
    case CoxeterType::Family::I2:
      affine_ = true;
      modulus_ = type.label();
      break;
    default:
      throw std::invalid_argument("no permutation model for Coxeter type " + type.name());
  }
}

PermutationCoxeter PermutationCoxeter::infinite_dihedral(std::vector<std::string> names) {
  if (names.size() != 2) throw std::invalid_argument("infinite dihedral group has two generators");
  PermutationCoxeter p;
  p.description_ = "Coxeter infinite-dihedral";
  p.names_ = std::move(names);
  p.affine_ = true;
  p.modulus_ = 0;
  return p;
}

Element PermutationCoxeter::identity() const {
  if (affine_) return {1, 0};
  return identity_images(points_);
}

Element PermutationCoxeter::multiply(const Element& g, std::size_t generator, bool /*inverse*/) const {
  if (generator >= names_.size()) throw std::out_of_range("unknown generator index " + std::to_string(generator));
  if (affine_) {
    // g o h with h(k) = -k + c_h, c_h = 0 or 1.
    const std::int64_t sign = g[0];
    const std::int64_t shift = g[1];
    const std::int64_t ch = generator == 0 ? 0 : 1;
    return {-sign, positive_mod(sign * ch + shift, modulus_)};
  }
  const Element& s = generators_[generator];
  Element out(points_);
  for (std::size_t k = 0; k < points_; ++k) {
    const std::int64_t v = s[k];
    out[k] = v > 0 ? g[static_cast<std::size_t>(v - 1)] : -g[static_cast<std::size_t>(-v - 1)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

std::string join_descriptions(const std::string& head, const std::vector<OraclePtr>& factors) {
  std::string out = head + "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += ", ";
    out += factors[i]->description();
  }
  return out + ")";
}

void collect_generators(const std::vector<OraclePtr>& factors, std::vector<std::string>& names,
                        std::vector<std::pair<std::size_t, std::size_t>>& locate) {
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& fn = factors[f]->generator_names();
    for (std::size_t j = 0; j < fn.size(); ++j) {
      names.push_back(fn[j]);
      locate.emplace_back(f, j);
    }
  }
}

}  // namespace

FreeProduct::FreeProduct(std::vector<OraclePtr> factors) : factors_(std::move(factors)) {
  collect_generators(factors_, names_, locate_);
}

std::string FreeProduct::description() const { return join_descriptions("FreeProduct", factors_); }

// Encoding: blocks [factor, length, payload...] with consecutive blocks from
// different factors and no identity payloads.
Element FreeProduct::multiply(const Element& g, std::size_t generator, bool inverse) const {
  const auto [f, local] = locate_.at(generator);
  const OracleGroup& factor = *factors_[f];
  std::size_t last = g.size();
  for (std::size_t pos = 0; pos < g.size(); pos += 2 + static_cast<std::size_t>(g[pos + 1])) last = pos;

  Element out;
  if (last < g.size() && static_cast<std::size_t>(g[last]) == f) {
    out.assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(last));
    const Element inner(g.begin() + static_cast<std::ptrdiff_t>(last + 2), g.end());
    const Element next = factor.multiply(inner, local, inverse);
    if (next == factor.identity()) return out;
    out.push_back(static_cast<std::int64_t>(f));
    out.push_back(static_cast<std::int64_t>(next.size()));
    out.insert(out.end(), next.begin(), next.end());
    return out;
  }
  out = g;
  const Element next = factor.multiply(factor.identity(), local, inverse);
  out.push_back(static_cast<std::int64_t>(f));
  out.push_back(static_cast<std::int64_t>(next.size()));
  out.insert(out.end(), next.begin(), next.end());
  return out;
}

DirectProduct::DirectProduct(std::vector<OraclePtr> factors) : factors_(std::move(factors)) {
  collect_generators(factors_, names_, locate_);
}

std::string DirectProduct::description() const { return join_descriptions("DirectProduct", factors_); }

// Encoding: [length_0, payload_0..., length_1, payload_1...].
Element DirectProduct::identity() const {
  Element out;
  for (const auto& f : factors_) {
    const Element id = f->identity();
    out.push_back(static_cast<std::int64_t>(id.size()));
    out.insert(out.end(), id.begin(), id.end());
  }
  return out;
}

Element DirectProduct::multiply(const Element& g, std::size_t generator, bool inverse) const {
  const auto [f, local] = locate_.at(generator);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < f; ++i) pos += 1 + static_cast<std::size_t>(g[pos]);
  const auto len = static_cast<std::size_t>(g[pos]);
  const auto begin = g.begin() + static_cast<std::ptrdiff_t>(pos + 1);
  const Element inner(begin, begin + static_cast<std::ptrdiff_t>(len));
  const Element next = factors_[f]->multiply(inner, local, inverse);

  Element out(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(static_cast<std::int64_t>(next.size()));
  out.insert(out.end(), next.begin(), next.end());
  out.insert(out.end(), begin + static_cast<std::ptrdiff_t>(len), g.end());
  return out;
}

// ---------------------------------------------------------------------------
// build_oracle

namespace {

using Relation = bool (*)(const DyerGraph&, std::size_t, std::size_t);

// Connected components of `m` under the symmetric relation `linked`.
std::vector<Mask> components(const DyerGraph& g, Mask m, Relation linked) {
  std::vector<Mask> out;
  Mask left = m;
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      for (Mask rest = left & ~comp; rest != 0; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        if (linked(g, u, v)) {
          comp |= bit(u);
          frontier |= bit(u);
        }
      }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool adjacent_rel(const DyerGraph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v); }
bool non_commuting_rel(const DyerGraph& g, std::size_t u, std::size_t v) { return g.label(u, v) != 2; }

std::variant<OraclePtr, Unsupported> build_on(const DyerGraph& g, Mask m) {
  if (popcount(m) <= 1) return std::make_shared<CyclicGraphProduct>(induced(g, g.subset(m)));

  auto assemble = [&](const std::vector<Mask>& parts, bool free) -> std::variant<OraclePtr, Unsupported> {
    std::vector<OraclePtr> factors;
    for (Mask p : parts) {
      auto sub = build_on(g, p);
      if (std::holds_alternative<Unsupported>(sub)) return sub;
      factors.push_back(std::get<OraclePtr>(std::move(sub)));
    }
    if (free) return std::make_shared<FreeProduct>(std::move(factors));
    return std::make_shared<DirectProduct>(std::move(factors));
  };

  if (auto parts = components(g, m, adjacent_rel); parts.size() > 1) return assemble(parts, true);
  if (auto parts = components(g, m, non_commuting_rel); parts.size() > 1) return assemble(parts, false);

  bool all_two = true;
  for (Mask a = m; a != 0; a &= a - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(a));
    for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(b));
      if (g.adjacent(u, v) && g.label(u, v) != 2) all_two = false;
    }
  }
  if (all_two) return std::make_shared<CyclicGraphProduct>(induced(g, g.subset(m)));

  if ((m & ~g.order_two_mask()) != 0) {
    return Unsupported{"graph mixes braid labels with non-involutive generators and splits only as an "
                       "amalgamated product"};
  }
  const CoxeterDiagram diagram = to_diagram(g, g.subset(m));
  const auto comps = decompose_finite(diagram);
  if (!comps) return Unsupported{"infinite irreducible Coxeter group outside the modelled families"};
  const CoxeterComponent& c = comps->front();
  const auto family = c.type.family();
  if (family != CoxeterType::Family::A && family != CoxeterType::Family::B && family != CoxeterType::Family::D &&
      family != CoxeterType::Family::I2) {
    return Unsupported{"no permutation model for Coxeter type " + c.type.name()};
  }
  std::vector<std::string> names;
  for (std::size_t i : c.layout) names.push_back(diagram.name(i));
  return std::make_shared<PermutationCoxeter>(c.type, std::move(names));
}

}  // namespace

std::variant<OraclePtr, Unsupported> build_oracle(const DyerGraph& graph) {
  return build_on(graph, graph.vertex_mask());
}

// ---------------------------------------------------------------------------
// Census

namespace {

CensusReport search(const OracleGroup& model, std::size_t radius, std::size_t max_elements) {
  CensusReport r;
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> frontier{model.identity()};
  seen.insert(frontier.front());
  r.counts.push_back(1);
  const std::size_t gens = model.generator_count();
  std::size_t depth = 0;
  while (depth < radius) {
    std::vector<Element> next;
    for (const auto& g : frontier) {
      for (std::size_t s = 0; s < gens; ++s) {
        for (bool inverse : {false, true}) {
          Element h = model.multiply(g, s, inverse);
          if (seen.insert(h).second) {
            if (seen.size() > max_elements) throw std::length_error("Cayley ball exceeds the element budget");
            next.push_back(std::move(h));
          }
        }
      }
    }
    if (next.empty()) {
      r.order = seen.size();
      r.max_length = depth;
      break;
    }
    ++depth;
    r.counts.push_back(next.size());
    frontier = std::move(next);
  }
  return r;
}

}  // namespace

CensusReport bfs_census(const OracleGroup& model, std::size_t n) {
  CensusReport r = search(model, n, std::numeric_limits<std::size_t>::max());
  r.counts.resize(n + 1, 0);
  return r;
}

CensusReport full_census(const OracleGroup& model, std::size_t max_elements) {
  return search(model, std::numeric_limits<std::size_t>::max(), max_elements);
}

}  // namespace dyer
