#include "forge/series.hpp"

#include <random>

#include "doctest.h"

using namespace forge;
using namespace forge::series;
using exact::Rational;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_deg, bool nonzero_const = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) v = Rational(coef(rng));
  if (nonzero_const && c[0].is_zero()) c[0] = Rational(1);
  if (c.back().is_zero()) c.back() = Rational(2);
  return Polynomial(std::move(c));
}

// Independent route to the expansion at infinity: divide in descending
// powers of x directly on the original coefficients.
std::vector<Rational> laurent_by_long_division(const RationalFunction& rf, std::size_t count) {
  const Polynomial& p = rf.numerator();
  const Polynomial& q = rf.denominator();
  long D = q.degree();
  Rational lead = q.coeff(static_cast<std::size_t>(D));
  std::vector<Rational> alpha;
  for (std::size_t m = 0; m < count; ++m) {
    long j = D - 1 - static_cast<long>(m);
    Rational acc = j >= 0 ? p.coeff(static_cast<std::size_t>(j)) : Rational(0);
    for (std::size_t k = 0; k < m; ++k) {
      long qi = D - static_cast<long>(m) + static_cast<long>(k);
      if (qi >= 0) acc -= alpha[k] * q.coeff(static_cast<std::size_t>(qi));
    }
    alpha.push_back(acc / lead);
  }
  return alpha;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Polynomial one_plus_x({Rational(1), Rational(1)});
  Polynomial one_minus_x({Rational(1), Rational(-1)});
  CHECK_EQ(one_plus_x * one_minus_x, Polynomial({Rational(1), Rational(0), Rational(-1)}));

  Polynomial den({Rational(1), Rational(-2), Rational(-2), Rational(1)});
  CHECK_EQ(den * Polynomial::constant(Rational(1)), den);

  Polynomial ram({Rational(1), Rational(-82), Rational(-82), Rational(1)});
  CHECK_EQ(ram.reversed(), ram);  // palindromic denominator

  CHECK_EQ((one_plus_x - one_plus_x).degree(), -1);
  CHECK((one_plus_x - one_plus_x).is_zero());
}

TEST_CASE("polynomial text format") {
  Polynomial ram({Rational(1), Rational(-82), Rational(-82), Rational(1)});
  CHECK_EQ(ram.str(), "1 - 82*x - 82*x^2 + x^3");
  CHECK_EQ(Polynomial::parse("1-82x-82x^2+x^3"), ram);
  CHECK_EQ(Polynomial::parse("1 - 82*x - 82*x^2 + x^3"), ram);
  CHECK_EQ(Polynomial().str(), "0");
  CHECK_EQ(Polynomial::parse("0"), Polynomial());
  CHECK_EQ(Polynomial::parse("-x"), Polynomial({Rational(0), Rational(-1)}));
  CHECK_EQ(Polynomial::parse("1/2 + x"), Polynomial({Rational(1, 2), Rational(1)}));
  CHECK_EQ(Polynomial::parse("3x + 2x"), Polynomial({Rational(0), Rational(5)}));
  CHECK_THROWS_AS(Polynomial::parse(""), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("2y"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x^"), ParseError);
}

TEST_CASE("polynomial print/parse round-trip (property)") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, 5);
    CHECK_EQ(Polynomial::parse(p.str()), p);
  }
}

TEST_CASE("rational-function literals") {
  RationalFunction rf = RationalFunction::parse("(1+53x+9x^2)/(1-82x-82x^2+x^3)");
  CHECK_EQ(rf.numerator(), Polynomial({Rational(1), Rational(53), Rational(9)}));
  CHECK_EQ(rf.denominator(), Polynomial({Rational(1), Rational(-82), Rational(-82), Rational(1)}));
  CHECK_EQ(RationalFunction::parse(rf.str()), rf);

  RationalFunction geo = RationalFunction::parse("1/(1-x)");
  CHECK_EQ(geo.numerator(), Polynomial::constant(Rational(1)));
  CHECK_EQ(geo.denominator(), Polynomial({Rational(1), Rational(-1)}));

  RationalFunction inv = RationalFunction::parse("1/x");
  CHECK_EQ(inv.denominator(), Polynomial::x());

  // A '/' inside an unparenthesized sum is a rational coefficient, not the bar.
  RationalFunction half = RationalFunction::parse("1/2 + x");
  CHECK_EQ(half.numerator(), Polynomial({Rational(1, 2), Rational(1)}));
  CHECK_EQ(half.denominator(), Polynomial::constant(Rational(1)));

  CHECK_THROWS_AS(RationalFunction::parse("x/0"), ZeroDenominatorError);
  CHECK_THROWS_AS(RationalFunction(Polynomial::x(), Polynomial()), ZeroDenominatorError);
}

TEST_CASE("taylor coefficients") {
  SUBCASE("integer family coefficients") {
    auto a = taylor_coeffs(RationalFunction::parse("(1+53x+9x^2)/(1-82x-82x^2+x^3)"), 3);
    CHECK_EQ(a, std::vector<Rational>{Rational(1), Rational(135), Rational(11161)});
  }
  SUBCASE("geometric series") {
    auto a = taylor_coeffs(RationalFunction::parse("1/(1-x)"), 4);
    CHECK_EQ(a, std::vector<Rational>(4, Rational(1)));
  }
  SUBCASE("squares of Fibonacci numbers") {
    auto a = taylor_coeffs(RationalFunction::parse("(x-x^2)/(1-2x-2x^2+x^3)"), 7);
    long f0 = 0, f1 = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
      CHECK_EQ(a[n], Rational(f0 * f0));
      long f2 = f0 + f1;
      f0 = f1;
      f1 = f2;
    }
    CHECK_EQ(a.back(), Rational(64));
  }
  SUBCASE("zero constant term is not expandable") {
    CHECK_THROWS_AS(taylor_coeffs(RationalFunction::parse("1/x"), 1), NotTaylorExpandableError);
  }
}

TEST_CASE("laurent coefficients at infinity") {
  SUBCASE("coefficients at infinity") {
    auto a = laurent_coeffs_at_infinity(RationalFunction::parse("(1+53x+9x^2)/(1-82x-82x^2+x^3)"), 3);
    CHECK_EQ(a, std::vector<Rational>{Rational(9), Rational(791), Rational(65601)});
  }
  SUBCASE("1/x") {
    auto a = laurent_coeffs_at_infinity(RationalFunction::parse("1/x"), 2);
    CHECK_EQ(a, std::vector<Rational>{Rational(1), Rational(0)});
  }
  SUBCASE("first rational Laurent coefficient of the 9^n family") {
    auto a = laurent_coeffs_at_infinity(
        RationalFunction::parse("(2-8x-90x^2)/(1-58x-522x^2+729x^3)"), 1);
    CHECK_EQ(a, std::vector<Rational>{Rational(-10, 81)});
  }
  SUBCASE("improper shapes are rejected") {
    CHECK_THROWS_AS(laurent_coeffs_at_infinity(RationalFunction::parse("(1+x)/(1-x)"), 1),
                    UnsupportedShapeError);
    CHECK_THROWS_AS(laurent_coeffs_at_infinity(RationalFunction::parse("(x^2)/(1+x)"), 1),
                    UnsupportedShapeError);
  }
}

TEST_CASE("recurrence consistency: series times denominator gives numerator (property)") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Polynomial num = random_poly(rng, 3);
    Polynomial den = random_poly(rng, 3, /*nonzero_const=*/true);
    RationalFunction rf(num, den);
    std::size_t order = 12;
    auto a = taylor_coeffs(rf, order);
    Polynomial trunc((std::vector<Rational>(a)));
    Polynomial prod = trunc * den;
    for (std::size_t j = 0; j < order; ++j) CHECK_EQ(prod.coeff(j), num.coeff(j));
  }
}

TEST_CASE("laurent agrees with descending long division (property)") {
  std::mt19937 rng(23);
  int done = 0;
  while (done < 50) {
    Polynomial den = random_poly(rng, 4);
    if (den.degree() < 1) continue;
    Polynomial num = random_poly(rng, static_cast<int>(den.degree()) - 1);
    RationalFunction rf(num, den);
    auto fast = laurent_coeffs_at_infinity(rf, 10);
    auto slow = laurent_by_long_division(rf, 10);
    CHECK_EQ(fast, slow);
    ++done;
  }
}

TEST_CASE("palindromic denominator shares taylor and laurent recurrences") {
  RationalFunction rf = RationalFunction::parse("(1+53x+9x^2)/(1-82x-82x^2+x^3)");
  CHECK_EQ(rf.denominator().reversed(), rf.denominator());
  // Both expansions of the same function therefore obey the same
  // characteristic recurrence; spot-check it on the laurent side.
  auto a = laurent_coeffs_at_infinity(rf, 4);
  CHECK_EQ(a[3], Rational(82) * a[2] + Rational(82) * a[1] - a[0]);
}
