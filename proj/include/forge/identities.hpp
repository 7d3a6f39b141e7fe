#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "forge/exact.hpp"

namespace forge::identities {

using exact::Rational;
using exact::RadicalScalar;

/// Exponent vector over the variables (a, b, c).
struct Monomial {
  std::array<unsigned, 3> e{0, 0, 0};

  unsigned degree() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with a > b > c, iterated largest-first so that
/// printing and serialization are deterministic (a^2 before ab before b^2).
struct GrlexDescending {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    return x.e > y.e;
  }
};

/// Polynomial in up to three variables with RadicalScalar coefficients; the
/// expansion workspace for certification. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, RadicalScalar, GrlexDescending>;

  MultiPoly() = default;

  void add_term(const Monomial& m, const RadicalScalar& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  RadicalScalar evaluate(const std::vector<Rational>& point) const;

  std::string str() const;

 private:
  TermMap terms_;
};

/// Quadratic form builders over (a, b) and (a, b, c).
MultiPoly quadratic_form(const RadicalScalar& aa, const RadicalScalar& ab, const RadicalScalar& bb);
MultiPoly quadratic_form(const RadicalScalar& aa, const RadicalScalar& bb, const RadicalScalar& cc,
                         const RadicalScalar& ab, const RadicalScalar& ac, const RadicalScalar& bc);

/// Rational solution of p^3 + q^3 + r^3 = s^3; the relation is checked at
/// construction.
struct CubicSeed {
  Rational p, q, r, s;
  CubicSeed(Rational p_, Rational q_, Rational r_, Rational s_);
  friend bool operator==(const CubicSeed&, const CubicSeed&) = default;
};

/// Rational solution of p^3 + q^3 + r^3 + s^3 + t^3 = u^3 with the chord
/// denominators p+s, q+t, r-u all nonzero; checked at construction.
struct FiveCubeSeed {
  Rational p, q, r, s, t, u;
  FiveCubeSeed(Rational p_, Rational q_, Rational r_, Rational s_, Rational t_, Rational u_);
  friend bool operator==(const FiveCubeSeed&, const FiveCubeSeed&) = default;
};

/// Tuple of homogeneous degree-2 forms with a side split and a common
/// exponent: sum of lhs forms^exponent = sum of rhs forms^exponent.
struct QuadraticFormTuple {
  unsigned num_vars = 2;  // 2 or 3
  unsigned exponent = 3;  // 3 or 4
  std::vector<MultiPoly> lhs;
  std::vector<MultiPoly> rhs;

  std::string to_json() const;
  static QuadraticFormTuple from_json(const std::string& text);
  friend bool operator==(const QuadraticFormTuple& a, const QuadraticFormTuple& b);
};

/// Chord parameter through a known cubic solution in direction (a, b):
/// theta = -(a(p^2-r^2) + b(q^2-s^2)) / (a^2(p+r) + b^2(q-s)).
/// A vanishing denominator raises DegenerateDirectionError.
Rational chord_theta(const CubicSeed& seed, const Rational& a, const Rational& b);

/// The new solution (A, B, C, D) of A^3+B^3+C^3 = D^3 cut out by the chord.
std::array<Rational, 4> chord_point(const CubicSeed& seed, const Rational& a, const Rational& b);

/// Two-parameter family of solutions grown from a cubic seed: four quadratic
/// forms in (a, b) whose coefficients live in a radical extension. Requires
/// r+p != 0 and s-q != 0 (DegenerateSeedError otherwise).
QuadraticFormTuple euler_forms(const CubicSeed& seed);

/// Three-parameter family grown from a five-cube seed: six quadratic forms in
/// (a, b, c). Radicands may be negative; everything stays formal.
QuadraticFormTuple five_cube_forms(const FiveCubeSeed& seed);

/// Expands sum(lhs^e) - sum(rhs^e) over the radical tower; true iff every
/// coefficient cancels exactly.
bool certify_identity(const QuadraticFormTuple& t);

struct CertificationReport {
  bool certified = false;
  std::size_t monomials_checked = 0;
};
CertificationReport certify_report(const QuadraticFormTuple& t);

/// Built-in identity catalog (keys: eq1.4, eq1.5, eq3.9, eq3.12).
const std::vector<std::string>& builtin_identity_names();
QuadraticFormTuple builtin_identity(const std::string& name);

/// The two built-in six-form quartic identities (eq3.9 and eq3.12).
std::vector<QuadraticFormTuple> builtin_quartic_identities();

}  // namespace forge::identities
