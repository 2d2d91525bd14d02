#include "dyer/ratfun.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace dyer {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::geometric(std::size_t k) { return Polynomial(std::vector<Integer>(k + 1, Integer(1))); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long Polynomial::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

Integer Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Rational Polynomial::evaluate(const Rational& point) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

bool Polynomial::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (coeffs_[k] != coeffs_[n - 1 - k]) return false;
  }
  return true;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Polynomial divide_exact(const Polynomial& dividend, const Integer& divisor) {
  if (divisor == 0) throw std::domain_error("exact division by zero");
  std::vector<Integer> out = dividend.coefficients();
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
      throw std::domain_error("inexact integer division of polynomial");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  }
  return Polynomial(std::move(out));
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact division by the zero polynomial");
  if (dividend.is_zero()) return {};
  const long dd = divisor.degree();
  long rd = dividend.degree();
  if (rd < dd) throw std::domain_error("inexact polynomial division");

  std::vector<Integer> rem = dividend.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(rd - dd + 1));
  const auto& dc = divisor.coefficients();
  const Integer& lc = divisor.leading();
  Integer q;
  for (long k = rd - dd; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (long j = 0; j <= dd; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 dc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = q;
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::domain_error("inexact polynomial division");
  }
  return Polynomial(std::move(quot));
}

namespace {

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading() < 0) c = -c;
  return c == 1 ? p : divide_exact(p, c);
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const long db = b.degree();
  const Integer& lb = b.leading();
  long dr = static_cast<long>(r.size()) - 1;
  while (dr >= db) {
    const Integer lr = r[static_cast<std::size_t>(dr)];
    const long shift = dr - db;
    for (auto& c : r) c *= lb;
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
  }
  return Polynomial(std::move(r));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return Polynomial::constant(1);
    Polynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------------------
// RationalFunction

namespace {

std::string pole_message(const Rational& point) {
  return "rational function has a pole at t = " + point.get_str();
}

}  // namespace

PoleError::PoleError(Rational point) : std::domain_error(pole_message(point)), point_(std::move(point)) {}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Integer c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = divide_exact(num_, c);
    den_ = divide_exact(den_, c);
  }
}

RationalFunction RationalFunction::operator-() const { return {Canonical{}, -num_, den_}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.leading() < 0) return {Canonical{}, -den_, -num_};
  return {Canonical{}, den_, num_};
}

std::vector<Integer> RationalFunction::taylor_coefficients(std::size_t n) const {
  const Integer d0 = den_.coefficient(0);
  if (d0 == 0) throw NotPowerSeries("denominator vanishes at t = 0");
  const auto& dc = den_.coefficients();
  std::vector<Integer> out(n + 1);
  Integer acc;
  for (std::size_t k = 0; k <= n; ++k) {
    acc = num_.coefficient(k);
    const std::size_t reach = std::min(k, dc.size() - 1);
    for (std::size_t j = 1; j <= reach; ++j) {
      mpz_submul(acc.get_mpz_t(), dc[j].get_mpz_t(), out[k - j].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw NotPowerSeries("expansion at t = 0 has non-integral coefficients");
    }
    mpz_divexact(out[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

Rational RationalFunction::evaluate(const Rational& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError(point);
  Rational v = num_.evaluate(point) / d;
  v.canonicalize();
  return v;
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
  RationalFunction result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

enum class Style { kPlain, kLatex };

std::string render(const Polynomial& p, Style style) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Integer& c = cs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << (style == Style::kPlain ? "*" : "");
    os << 't';
    if (k > 1) {
      if (style == Style::kPlain) {
        os << '^' << k;
      } else {
        os << "^{" << k << '}';
      }
    }
  }
  return os.str();
}

}  // namespace

std::string format_plain(const Polynomial& p) { return render(p, Style::kPlain); }

namespace {

// Displayed with the lowest denominator coefficient positive, so Z reads
// (1 + t)/(1 - t); the stored form keeps the leading coefficient positive.
std::pair<Polynomial, Polynomial> display_pair(const RationalFunction& f) {
  const Polynomial& den = f.denominator();
  const auto& c = den.coefficients();
  const auto lowest = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
  if (*lowest < 0) return {-f.numerator(), -den};
  return {f.numerator(), den};
}

std::size_t term_count(const Polynomial& p) {
  const auto& c = p.coefficients();
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; }));
}

std::string grouped(const Polynomial& p, Style style) {
  const std::string body = render(p, style);
  return term_count(p) > 1 ? "(" + body + ")" : body;
}

}  // namespace

std::string format_plain(const RationalFunction& f) {
  if (f.is_polynomial()) return render(f.numerator(), Style::kPlain);
  const auto [num, den] = display_pair(f);
  return grouped(num, Style::kPlain) + "/" + grouped(den, Style::kPlain);
}

std::string format_latex(const Polynomial& p) { return render(p, Style::kLatex); }

std::string format_latex(const RationalFunction& f) {
  if (f.is_polynomial()) return render(f.numerator(), Style::kLatex);
  const auto [num, den] = display_pair(f);
  return "\\frac{" + render(num, Style::kLatex) + "}{" + render(den, Style::kLatex) + "}";
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format_plain(p); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << format_plain(f); }

}  // namespace dyer
