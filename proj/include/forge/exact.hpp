#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "forge/errors.hpp"

namespace forge::exact {

/// Unbounded signed integer. GMP supplies the arithmetic; the helpers below
/// pin down the decimal-string interface used by every serialization path.
using Integer = mpz_class;

std::string to_string(const Integer& n);

/// Parses a decimal integer string (optional leading '-', no exponent form).
Integer parse_integer(const std::string& text);

Integer pow_integer(const Integer& base, unsigned long e);
bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

/// Writes n = f^2 * d with f > 0 and d squarefree (d carries the sign of n).
/// Requires n != 0.
void squarefree_decompose(const Integer& n, Integer& f, Integer& d);

/// Exact rational in canonical form: denominator > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. Construction from a zero denominator throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  template <class E>
  Rational(const __gmp_expr<mpz_t, E>& e) : v_(Integer(e)) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational reciprocal() const;

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Canonicalizes num/den; throws ZeroDenominatorError when den = 0.
Rational rational_normalize(const Integer& num, const Integer& den);

Rational pow_rational(const Rational& base, unsigned long e);

/// Element of the rationals with up to three formal square roots adjoined:
/// sum over subsets S of the radicand set of c_S * prod_{i in S} sqrt(d_i).
///
/// Radicands are pairwise distinct squarefree integers (never 0 or 1,
/// negative allowed) kept multiplicatively independent: whenever a product of
/// stored radicands is a perfect square, the dependent root is rewritten over
/// the remaining ones instead of being stored. That keeps the componentwise
/// zero test exact: a value is zero iff every component is zero.
class RadicalScalar {
 public:
  static constexpr std::size_t kMaxRadicands = 3;

  RadicalScalar() : comps_(1) {}
  RadicalScalar(const Rational& r) : comps_{r} {}
  RadicalScalar(int n) : comps_{Rational(n)} {}
  RadicalScalar(long n) : comps_{Rational(n)} {}

  /// Raw constructor; radicands must already be distinct, squarefree,
  /// not 0 or 1, and multiplicatively independent.
  RadicalScalar(std::vector<Integer> radicands, std::vector<Rational> components);

  bool is_zero() const;
  /// True when no radical component is nonzero.
  bool is_rational() const;
  /// The value as a Rational; throws Error if a radical component remains.
  Rational rational_value() const;

  const std::vector<Integer>& radicands() const { return rads_; }
  /// Coefficient of prod_{i in mask} sqrt(radicands()[i]).
  const Rational& component(unsigned mask) const { return comps_[mask]; }
  const std::vector<Rational>& components() const { return comps_; }

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { a += b; return a; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { a -= b; return a; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { a *= b; return a; }

  RadicalScalar& operator*=(const Rational& r);
  friend RadicalScalar operator*(RadicalScalar a, const Rational& r) { a *= r; return a; }
  friend RadicalScalar operator*(const Rational& r, RadicalScalar a) { a *= r; return a; }

  RadicalScalar pow(unsigned long e) const;

  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void prune();

  std::vector<Integer> rads_;   // sorted ascending, size k <= kMaxRadicands
  std::vector<Rational> comps_; // size 1 << k, comps_[mask] as documented
};

/// Exact square root: returns X with X*X = q. The result uses the squarefree
/// part of num*den as its only radicand (none when q is a perfect rational
/// square). q = 0 yields zero. Negative q yields a formal root of a negative
/// radicand.
RadicalScalar sqrt_of_rational(const Rational& q);

/// Product in the radical tower; folds sqrt(d)*sqrt(d) = d. Throws
/// UnsupportedTowerError if the merged tower would exceed three radicands.
RadicalScalar radical_mul(const RadicalScalar& x, const RadicalScalar& y);

}  // namespace forge::exact
