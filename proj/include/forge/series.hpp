#pragma once

#include <string>
#include <vector>

#include "forge/exact.hpp"

namespace forge::series {

using exact::Rational;

/// Dense univariate polynomial over the rationals; coefficient i belongs to
/// x^i and the highest stored coefficient is nonzero (zero = no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  /// Coefficient reversal to the declared degree: x^deg * p(1/x).
  Polynomial reversed() const;

  Rational eval(const Rational& at) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// "c0 + c1*x + c2*x^2 + ..." with exact rational coefficients.
  std::string str() const;
  static Polynomial parse(const std::string& text);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient of two polynomials; the denominator is never the zero polynomial.
/// No gcd reduction is performed.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(<poly>)/(<poly>)".
  std::string str() const;
  static RationalFunction parse(const std::string& text);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// First `count` coefficients of the power-series expansion at 0, computed by
/// the denominator's linear recurrence. The denominator needs a nonzero
/// constant term; otherwise NotTaylorExpandableError.
std::vector<Rational> taylor_coeffs(const RationalFunction& rf, std::size_t count);

/// Coefficients of x^-1, x^-2, ... of the expansion at infinity. Requires a
/// strictly proper function (deg num < deg den); otherwise
/// UnsupportedShapeError.
std::vector<Rational> laurent_coeffs_at_infinity(const RationalFunction& rf, std::size_t count);

}  // namespace forge::series
