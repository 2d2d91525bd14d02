#pragma once

// Exact univariate polynomials and rational functions over Z.
//
// Every growth series handled by the library is a RationalFunction in the
// indeterminate t. Values are immutable once constructed and always kept in
// canonical form, so structural equality is value equality.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dyer {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial. Index i holds the coefficient of t^i; the
/// highest stored coefficient is never zero (the zero polynomial is empty).
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Integer& c);
  /// c * t^k
  static Polynomial monomial(const Integer& c, std::size_t k);
  /// 1 + t + ... + t^k
  static Polynomial geometric(std::size_t k);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const;
  /// Coefficient of t^i, zero beyond the degree.
  Integer coefficient(std::size_t i) const;
  const Integer& leading() const;

  /// gcd of all coefficients, always nonnegative; zero for the zero polynomial.
  Integer content() const;
  Rational evaluate(const Rational& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Palindromic of its own degree: c_k == c_{deg-k}.
  bool is_palindromic() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Pow by repeated squaring.
Polynomial pow(const Polynomial& base, unsigned exponent);

/// Quotient of an exact division; throws std::domain_error when divisor does
/// not divide dividend in Z[t].
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);
Polynomial divide_exact(const Polynomial& dividend, const Integer& divisor);

/// Primitive part with positive leading coefficient of gcd(a, b) over Q[t].
/// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Raised when a rational function is divided by (or inverts) zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero rational function") {}
};

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(Rational point);
  const Rational& point() const { return point_; }

 private:
  Rational point_;
};

/// Raised when Taylor coefficients are requested for a function that is not
/// an integral power series at t = 0.
class NotPowerSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// numerator / denominator in canonical form: coprime over Q, integer
/// contents jointly reduced, denominator with positive leading coefficient.
/// The zero function is 0 / 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Polynomial::constant(c)) {}  // NOLINT
  /// Throws DivisionByZero when denominator is zero.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// 1/a. Throws DivisionByZero on the zero function.
  RationalFunction inverse() const;

  /// Coefficients of t^0..t^n of the expansion at 0, computed by the linear
  /// recurrence of the denominator.
  std::vector<Integer> taylor_coefficients(std::size_t n) const;

  /// Throws PoleError when the denominator vanishes at point.
  Rational evaluate(const Rational& point) const;

 private:
  struct Canonical {};
  RationalFunction(Canonical, Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exponent);

/// Ascending powers: "1 + 2*t + t^2"; a proper quotient renders as
/// "(1 + t)/(1 - t)".
std::string format_plain(const Polynomial& p);
std::string format_plain(const RationalFunction& f);
/// LaTeX, ascending powers, quotient as \frac{..}{..}.
std::string format_latex(const Polynomial& p);
std::string format_latex(const RationalFunction& f);
/// "-1", "1/6", "0".
std::string format_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace dyer
