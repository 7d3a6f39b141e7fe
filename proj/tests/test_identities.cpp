#include "forge/identities.hpp"

#include <random>

#include "doctest.h"

using namespace forge;
using namespace forge::identities;
using exact::Rational;
using exact::RadicalScalar;

namespace {

Rational cube(const Rational& x) { return x * x * x; }

Rational pow4(const Rational& x) { return x * x * x * x; }

// Direct check of the power relation at a rational point, independent of the
// certification path.
bool holds_at(const QuadraticFormTuple& t, const std::vector<Rational>& point) {
  RadicalScalar acc;
  for (const MultiPoly& f : t.lhs) acc += f.evaluate(point).pow(t.exponent);
  for (const MultiPoly& f : t.rhs) acc -= f.evaluate(point).pow(t.exponent);
  return acc.is_zero();
}

}  // namespace

TEST_CASE("seed constructors validate their relations") {
  CHECK_NOTHROW(CubicSeed(3, 4, 5, 6));
  CHECK_THROWS_AS(CubicSeed(1, 1, 1, 1), InvalidSeedError);
  CHECK_NOTHROW(FiveCubeSeed(-3, 0, 6, 0, -4, 5));
  CHECK_THROWS_AS(FiveCubeSeed(1, 1, 1, 1, 1, 1), InvalidSeedError);
  // 3^3 + 1^3 + 4^3 + 5^3 + (-1)^3 = 6^3 but q + t = 0.
  CHECK_THROWS_AS(FiveCubeSeed(3, 1, 4, 5, -1, 6), DegenerateSeedError);
}

TEST_CASE("chord through a known solution") {
  CubicSeed seed(3, 4, 5, 6);
  CHECK_EQ(chord_theta(seed, 0, 1), Rational(-10));
  auto pt = chord_point(seed, 0, 1);
  CHECK_EQ(pt, std::array<Rational, 4>{3, -6, 5, -4});
  CHECK_EQ(cube(pt[0]) + cube(pt[1]) + cube(pt[2]), cube(pt[3]));
  CHECK_THROWS_AS(chord_theta(seed, 0, 0), DegenerateDirectionError);
}

TEST_CASE("chord closure on random directions (property)") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<CubicSeed> seeds = {{3, 4, 5, 6}, {1, 6, 8, 9}, {3, 10, 18, 19}};
  for (const CubicSeed& seed : seeds) {
    int done = 0;
    while (done < 30) {
      Rational a(d(rng)), b(d(rng));
      Rational den = a * a * (seed.p + seed.r) + b * b * (seed.q - seed.s);
      if (den.is_zero()) continue;
      auto pt = chord_point(seed, a, b);
      CHECK_EQ(cube(pt[0]) + cube(pt[1]) + cube(pt[2]), cube(pt[3]));
      ++done;
    }
  }
}

TEST_CASE("euler_forms reproduces the classic two-parameter family") {
  QuadraticFormTuple t = euler_forms(CubicSeed(3, 4, 5, 6));
  CHECK_EQ(t, builtin_identity("eq1.4"));
  CHECK(certify_identity(t));

  // b = 0 recovers the seed.
  std::vector<Rational> at_10 = {Rational(1), Rational(0)};
  CHECK_EQ(t.lhs[0].evaluate(at_10).rational_value(), Rational(3));
  CHECK_EQ(t.lhs[1].evaluate(at_10).rational_value(), Rational(4));
  CHECK_EQ(t.lhs[2].evaluate(at_10).rational_value(), Rational(5));
  CHECK_EQ(t.rhs[0].evaluate(at_10).rational_value(), Rational(6));
}

TEST_CASE("euler_forms with irrational radical coefficients") {
  QuadraticFormTuple t = euler_forms(CubicSeed(1, 6, 8, 9));
  // (9-6)/(8+1) = 1/3 is not a square, so the coefficients live in a tower.
  bool any_irrational = false;
  for (const auto& [m, c] : t.lhs[0].terms())
    if (!c.is_rational()) any_irrational = true;
  CHECK(any_irrational);
  CHECK(certify_identity(t));
}

TEST_CASE("euler_forms certifies across hand-picked seeds") {
  for (const CubicSeed& seed :
       {CubicSeed(3, 4, 5, 6), CubicSeed(1, 6, 8, 9), CubicSeed(3, 10, 18, 19),
        CubicSeed(7, 14, 17, 20), CubicSeed(2, 17, 40, 41)}) {
    CHECK(certify_identity(euler_forms(seed)));
  }
}

TEST_CASE("euler_forms rejects degenerate seeds") {
  // (1, -1, -1, -1): 1 - 1 - 1 = -1 holds and r + p = 0.
  CubicSeed seed(1, -1, -1, -1);
  CHECK_THROWS_AS(euler_forms(seed), DegenerateSeedError);
}

TEST_CASE("scaling covariance") {
  CubicSeed base(3, 4, 5, 6);
  for (const Rational& lam : {Rational(2), Rational(1, 3), Rational(-2)}) {
    CubicSeed scaled(base.p * lam, base.q * lam, base.r * lam, base.s * lam);
    QuadraticFormTuple t = euler_forms(scaled);
    CHECK(certify_identity(t));
    if (lam.sign() > 0) {
      QuadraticFormTuple t0 = euler_forms(base);
      std::vector<Rational> pt = {Rational(2), Rational(3)};
      for (std::size_t i = 0; i < t.lhs.size(); ++i)
        CHECK_EQ(t.lhs[i].evaluate(pt), t0.lhs[i].evaluate(pt) * lam);
    }
  }
}

TEST_CASE("five_cube_forms certifies a searched seed over a mixed tower") {
  FiveCubeSeed seed(-3, 0, 6, 0, -4, 5);
  CHECK_EQ(cube(seed.p) + cube(seed.q) + cube(seed.r) + cube(seed.s) + cube(seed.t), cube(seed.u));
  QuadraticFormTuple t = five_cube_forms(seed);
  CHECK_EQ(t.lhs.size(), 5);
  CHECK_EQ(t.rhs.size(), 1);
  CHECK(certify_identity(t));
  // (a,b,c) = (1,0,0) reads the seed back as (s,q,r,p,t | u).
  std::vector<Rational> at_100 = {Rational(1), Rational(0), Rational(0)};
  CHECK_EQ(t.lhs[0].evaluate(at_100).rational_value(), seed.s);
  CHECK_EQ(t.rhs[0].evaluate(at_100).rational_value(), seed.u);
}

TEST_CASE("five_cube_forms on further seeds") {
  CHECK(certify_identity(five_cube_forms(FiveCubeSeed(1, 2, 3, 1, 3, 4))));
  CHECK(certify_identity(five_cube_forms(FiveCubeSeed(0, -3, 6, -4, 0, 5))));
}

TEST_CASE("certification of the built-in identities") {
  for (const std::string& name : builtin_identity_names()) {
    CertificationReport rep = certify_report(builtin_identity(name));
    CHECK(rep.certified);
    CHECK_GT(rep.monomials_checked, 0);
  }
  CHECK_EQ(certify_report(builtin_identity("eq1.4")).monomials_checked, 7);   // degree 6 in 2 vars
  CHECK_EQ(certify_report(builtin_identity("eq3.9")).monomials_checked, 9);   // degree 8 in 2 vars
}

TEST_CASE("a perturbed identity fails certification") {
  QuadraticFormTuple t = builtin_identity("eq1.4");
  t.lhs[0].add_term(Monomial{{2, 0, 0}}, RadicalScalar(Rational(1)));
  CHECK_FALSE(certify_identity(t));
}

TEST_CASE("built-in quartic identities evaluate correctly") {
  std::vector<QuadraticFormTuple> quartics = builtin_quartic_identities();
  REQUIRE_EQ(quartics.size(), 2);

  SUBCASE("first quartic at unit points") {
    const QuadraticFormTuple& t = quartics[0];
    std::vector<Rational> e1 = {Rational(1), Rational(0)};
    std::vector<Rational> e2 = {Rational(0), Rational(1)};
    std::vector<Rational> vals;
    for (const MultiPoly& f : t.lhs) vals.push_back(f.evaluate(e1).rational_value());
    CHECK_EQ(vals, std::vector<Rational>{8, 6, 14, 9, 4});
    CHECK_EQ(t.rhs[0].evaluate(e1).rational_value(), Rational(15));
    CHECK_EQ(pow4(Rational(8)) + pow4(Rational(6)) + pow4(Rational(14)) + pow4(Rational(9)) +
                 pow4(Rational(4)),
             pow4(Rational(15)));

    vals.clear();
    for (const MultiPoly& f : t.lhs) vals.push_back(f.evaluate(e2).rational_value());
    CHECK_EQ(vals, std::vector<Rational>{-24, -18, -42, 27, 12});
    CHECK_EQ(t.rhs[0].evaluate(e2).rational_value(), Rational(45));
  }

  SUBCASE("second quartic at (1,0)") {
    const QuadraticFormTuple& t = quartics[1];
    std::vector<Rational> e1 = {Rational(1), Rational(0)};
    std::vector<Rational> vals;
    for (const MultiPoly& f : t.lhs) vals.push_back(f.evaluate(e1).rational_value());
    CHECK_EQ(vals, std::vector<Rational>{4, 3, 2, 4, 2});
    CHECK_EQ(t.rhs[0].evaluate(e1).rational_value(), Rational(5));
  }

  SUBCASE("100 random integer points satisfy both quartics exactly") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> pt = {Rational(d(rng)), Rational(d(rng))};
      CHECK(holds_at(quartics[0], pt));
      CHECK(holds_at(quartics[1], pt));
    }
  }
}

TEST_CASE("form tuples round-trip through JSON") {
  for (const QuadraticFormTuple& t :
       {euler_forms(CubicSeed(1, 6, 8, 9)), five_cube_forms(FiveCubeSeed(-3, 0, 6, 0, -4, 5)),
        builtin_identity("eq3.9")}) {
    QuadraticFormTuple back = QuadraticFormTuple::from_json(t.to_json());
    CHECK(back == t);
  }
  CHECK_THROWS_AS(QuadraticFormTuple::from_json("{"), ParseError);
  CHECK_THROWS_AS(QuadraticFormTuple::from_json("{\"variables\":[\"a\",\"b\"]}"), ParseError);
}
