#pragma once

// Ground-truth group models for checking growth series by brute force.
//
// Each model has a canonical encoding of its elements, so two words are
// equal in the group iff their encodings coincide, and a breadth-first search
// of the Cayley graph gives the sphere sizes directly. The supported families
// are graph products of cyclic groups (all edge labels 2), Coxeter groups of
// types A, B, D, I2(m) and the infinite dihedral group, and free and direct
// products of supported models. General Dyer groups are not modelled.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dyer/coxeter_type.hpp"
#include "dyer/graph.hpp"

namespace dyer {

/// Canonical encoding of a group element; layout is model specific.
using Element = std::vector<std::int64_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

class OracleGroup {
 public:
  virtual ~OracleGroup() = default;

  virtual std::string description() const = 0;
  virtual Element identity() const = 0;
  virtual const std::vector<std::string>& generator_names() const = 0;
  /// g * s or g * s^{-1} for generator s, in canonical form.
  virtual Element multiply(const Element& g, std::size_t generator, bool inverse) const = 0;

  std::size_t generator_count() const { return generator_names().size(); }
  /// Throws std::out_of_range on an unknown name.
  std::size_t generator_index(const std::string& name) const;
};

using OraclePtr = std::shared_ptr<const OracleGroup>;

/// A word of (generator index, exponent) syllables.
using Word = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Throws std::out_of_range on an unknown generator.
Element canonicalize(const OracleGroup& model, const Word& word);

/// Graph product of cyclic groups Z/f(x) (or Z) over a graph with all edge
/// labels 2. Elements are stored as reduced syllable sequences in
/// lexicographic normal form with respect to the vertex order.
class CyclicGraphProduct final : public OracleGroup {
 public:
  struct Syllable {
    std::size_t vertex;
    std::int64_t exponent;
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  /// Throws std::invalid_argument if some edge label is not 2.
  explicit CyclicGraphProduct(DyerGraph graph);

  std::string description() const override;
  Element identity() const override { return {}; }
  const std::vector<std::string>& generator_names() const override { return graph_.names(); }
  Element multiply(const Element& g, std::size_t generator, bool inverse) const override;

  /// Merges syllables of the same vertex that can be shuffled together,
  /// drops trivial ones, then sorts into lexicographic normal form.
  std::vector<Syllable> normal_form(std::vector<Syllable> word) const;
  std::vector<Syllable> decode(const Element& e) const;
  Element encode(const std::vector<Syllable>& s) const;
  /// Sum of the syllable norms |a|_{f(x)} of a normal form.
  std::int64_t syllable_norm_sum(const Element& e) const;

 private:
  std::int64_t reduce(std::size_t vertex, std::int64_t exponent) const;
  bool commute(std::size_t u, std::size_t v) const { return graph_.adjacent(u, v); }

  DyerGraph graph_;
};

/// Coxeter groups of type A_n (permutations), B_n (signed permutations),
/// D_n (even signed permutations), I2(m) and the infinite dihedral group
/// (affine maps k -> +-k + c on Z/m or Z).
///
/// Generator i corresponds to position i of the standard layout
/// (see CoxeterComponent):
///   A_n: s_i swaps points i and i+1 of {1..n+1};
///   B_n: s_0 negates coordinate 1, s_i (i >= 1) swaps coordinates i and i+1;
///   D_n: s_0 swaps coordinates 1,2; s_1 maps e1 -> -e2, e2 -> -e1;
///        s_i (i >= 2) swaps coordinates i and i+1;
///   I2(m), infinite dihedral: s_0: k -> -k, s_1: k -> 1 - k.
class PermutationCoxeter final : public OracleGroup {
 public:
  /// Supports families A, B, D and I2; throws std::invalid_argument otherwise.
  PermutationCoxeter(const CoxeterType& type, std::vector<std::string> names);
  static PermutationCoxeter infinite_dihedral(std::vector<std::string> names);

  std::string description() const override { return description_; }
  Element identity() const override;
  const std::vector<std::string>& generator_names() const override { return names_; }
  Element multiply(const Element& g, std::size_t generator, bool inverse) const override;

 private:
  PermutationCoxeter() = default;

  std::string description_;
  std::vector<std::string> names_;
  // Signed permutation mode: images of 1..n, as signed 1-based values.
  std::vector<Element> generators_;
  std::size_t points_ = 0;
  // Affine mode (dihedral): modulus 0 means Z.
  bool affine_ = false;
  std::int64_t modulus_ = 0;
};

class FreeProduct final : public OracleGroup {
 public:
  explicit FreeProduct(std::vector<OraclePtr> factors);

  std::string description() const override;
  Element identity() const override { return {}; }
  const std::vector<std::string>& generator_names() const override { return names_; }
  Element multiply(const Element& g, std::size_t generator, bool inverse) const override;

 private:
  std::vector<OraclePtr> factors_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, std::size_t>> locate_;  // generator -> (factor, local)
};

class DirectProduct final : public OracleGroup {
 public:
  explicit DirectProduct(std::vector<OraclePtr> factors);

  std::string description() const override;
  Element identity() const override;
  const std::vector<std::string>& generator_names() const override { return names_; }
  Element multiply(const Element& g, std::size_t generator, bool inverse) const override;

 private:
  std::vector<OraclePtr> factors_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, std::size_t>> locate_;
};

struct Unsupported {
  std::string reason;
};

/// Splits the graph into free factors (connected components) and direct
/// factors (joins by label-2 edges), then models each irreducible piece as a
/// cyclic graph product or a permutation Coxeter group.
std::variant<OraclePtr, Unsupported> build_oracle(const DyerGraph& graph);

struct CensusReport {
  std::vector<std::uint64_t> counts;  // a_0..a_n
  /// Set when the search exhausted the group within radius n.
  std::optional<std::uint64_t> order;
  std::optional<std::size_t> max_length;
};

/// Breadth-first search from the identity by right multiplication with the
/// generators and their inverses. Stops at radius n.
CensusReport bfs_census(const OracleGroup& model, std::size_t n);

/// Searches until the group is exhausted; throws std::length_error after
/// max_elements elements.
CensusReport full_census(const OracleGroup& model, std::size_t max_elements = 10'000'000);

}  // namespace dyer
