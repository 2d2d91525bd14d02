#pragma once

#include <string>
#include <vector>

#include "dyer/ratfun.hpp"

namespace dyer {

/// Irreducible finite Coxeter type. Rank-1 and rank-2 coincidences use a
/// single tag: rank 1 is always A1, label 3 is A2, any other rank-2 label m
/// (including 4 and 6) is I2(m).
class CoxeterType {
 public:
  enum class Family { A, B, D, E, F, H, I2 };

  /// Throws std::invalid_argument outside the valid parameter ranges.
  static CoxeterType a(unsigned rank);
  static CoxeterType b(unsigned rank);
  static CoxeterType d(unsigned rank);
  static CoxeterType e(unsigned rank);
  static CoxeterType f4();
  static CoxeterType h(unsigned rank);
  static CoxeterType i2(unsigned label);

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  /// Dihedral label for I2(m); 0 for other families.
  unsigned label() const { return label_; }

  /// Exponents m_1 <= ... <= m_rank.
  std::vector<unsigned> exponents() const;
  /// Product of (m_i + 1).
  Integer order() const;
  /// Sum of exponents, the length of the longest element.
  unsigned longest_length() const;
  /// prod (1 + t + ... + t^{m_i}).
  Polynomial growth() const;

  /// "A3", "D4", "I2(5)".
  std::string name() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;

 private:
  CoxeterType(Family family, unsigned rank, unsigned label) : family_(family), rank_(rank), label_(label) {}

  Family family_;
  unsigned rank_;
  unsigned label_;
};

}  // namespace dyer
