#include "forge/recurrences.hpp"

#include "doctest.h"
#include "forge/series.hpp"

using namespace forge;
using namespace forge::recurrences;
using exact::Integer;
using exact::Rational;
using series::RationalFunction;

namespace {

const LinearRecurrence2 kFibonacci{1, 1, 0, 1};    // w_{n+2} = w_{n+1} + w_n
const LinearRecurrence2 kNine{-7, 9, 0, 1};        // w_{n+2} = 9w_n - 7w_{n+1}
const LinearRecurrence2 kSix{2, -6, 0, 1};         // w_{n+2} = -6w_n + 2w_{n+1}
const LinearRecurrence2 kThree{-5, 3, 0, 1};       // w_{n+2} = 3w_n - 5w_{n+1}
const LinearRecurrence2 kTwoThree{6, 3, 0, 1};     // w_{n+2} = 6w_{n+1} + 3w_n

}  // namespace

TEST_CASE("term by iteration") {
  CHECK_EQ(term(kFibonacci, 6), Integer(8));
  CHECK_EQ(term(kNine, 2), Integer(-7));
  CHECK_EQ(term(kNine, 3), Integer(58));
  CHECK_EQ(term(kNine, 0), Integer(0));
  CHECK_EQ(terms(kNine, 3), std::vector<Integer>{0, 1, -7, 58});
}

TEST_CASE("casoratian values and law") {
  CHECK_EQ(casoratian(kNine, 0), Integer(1));
  CHECK_EQ(casoratian(kNine, 1), Integer(-9));
  CHECK_EQ(Integer(8) * casoratian(kThree, 0), Integer(8));

  for (const auto& rec : {kFibonacci, kNine, kSix, kThree, kTwoThree}) {
    Integer base = rec.w1 * rec.w1 - rec.w0 * (rec.c1 * rec.w1 + rec.c2 * rec.w0);
    for (std::size_t n = 1; n <= 40; ++n) {
      CHECK_EQ(casoratian(rec, n), -rec.c2 * casoratian(rec, n - 1));
      CHECK_EQ(casoratian(rec, n), exact::pow_integer(-rec.c2, n) * base);
    }
  }
}

TEST_CASE("square generating functions have the expected closed forms") {
  CHECK_EQ(square_ogf(kFibonacci), RationalFunction::parse("(x-x^2)/(1-2x-2x^2+x^3)"));
  CHECK_EQ(square_ogf(kNine), RationalFunction::parse("(x-9x^2)/(1-58x-522x^2+729x^3)"));
  CHECK_EQ(square_ogf(kSix), RationalFunction::parse("(x+6x^2)/(1+2x-12x^2-216x^3)"));
  CHECK_EQ(square_ogf(kThree), RationalFunction::parse("(x-3x^2)/(1-28x-84x^2+27x^3)"));
  CHECK_EQ(square_ogf(kTwoThree).denominator(),
           series::Polynomial::parse("1-39x-117x^2+27x^3"));
}

TEST_CASE("cross generating functions have the expected closed forms") {
  CHECK_EQ(cross_ogf(kFibonacci), RationalFunction::parse("x/(1-2x-2x^2+x^3)"));
  CHECK_EQ(cross_ogf(kNine), RationalFunction::parse("(-7x)/(1-58x-522x^2+729x^3)"));
  CHECK_EQ(cross_ogf(kThree), RationalFunction::parse("(-5x)/(1-28x-84x^2+27x^3)"));
}

TEST_CASE("ogf coefficients reproduce products of terms up to n = 200") {
  for (const auto& rec : {kFibonacci, kNine, kSix, kThree, kTwoThree}) {
    const std::size_t n_max = 200;
    std::vector<Integer> w = terms(rec, n_max + 1);
    auto sq = series::taylor_coeffs(square_ogf(rec), n_max + 1);
    auto cr = series::taylor_coeffs(cross_ogf(rec), n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      CHECK_EQ(sq[n], Rational(w[n] * w[n]));
      CHECK_EQ(cr[n], Rational(w[n] * w[n + 1]));
    }
  }
}

TEST_CASE("json round-trip") {
  std::string j = kNine.to_json();
  CHECK_EQ(LinearRecurrence2::from_json(j), kNine);
  CHECK_THROWS_AS(LinearRecurrence2::from_json("{"), ParseError);
  CHECK_THROWS_AS(LinearRecurrence2::from_json("{\"c1\":\"1\"}"), ParseError);
}
