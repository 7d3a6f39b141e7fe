#include "forge/recurrences.hpp"

#include <utility>

#include "json.hpp"

namespace forge::recurrences {

using exact::Rational;
using json = nlohmann::json;

std::string LinearRecurrence2::to_json() const {
  json j;
  j["c1"] = exact::to_string(c1);
  j["c2"] = exact::to_string(c2);
  j["w0"] = exact::to_string(w0);
  j["w1"] = exact::to_string(w1);
  return j.dump();
}

LinearRecurrence2 LinearRecurrence2::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad recurrence JSON: ") + e.what());
  }
  auto field = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_string())
      throw ParseError(std::string("recurrence JSON missing string field ") + name);
    return exact::parse_integer(j[name].get<std::string>());
  };
  return LinearRecurrence2{field("c1"), field("c2"), field("w0"), field("w1")};
}

Integer term(const LinearRecurrence2& rec, std::size_t n) {
  if (n == 0) return rec.w0;
  Integer prev = rec.w0;
  Integer cur = rec.w1;
  for (std::size_t i = 1; i < n; ++i) {
    Integer next = rec.c1 * cur + rec.c2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> terms(const LinearRecurrence2& rec, std::size_t n_max) {
  std::vector<Integer> w;
  w.reserve(n_max + 1);
  w.push_back(rec.w0);
  if (n_max == 0) return w;
  w.push_back(rec.w1);
  for (std::size_t n = 2; n <= n_max; ++n) w.push_back(rec.c1 * w[n - 1] + rec.c2 * w[n - 2]);
  return w;
}

Integer casoratian(const LinearRecurrence2& rec, std::size_t n) {
  std::vector<Integer> w = terms(rec, n + 2);
  return w[n + 1] * w[n + 1] - w[n] * w[n + 2];
}

namespace {

Polynomial ogf_denominator(const LinearRecurrence2& rec) {
  Rational e1(rec.c1 * rec.c1 + rec.c2);
  Rational e2(-rec.c2 * (rec.c1 * rec.c1 + rec.c2));
  Rational e3(-(rec.c2 * rec.c2 * rec.c2));
  return Polynomial({Rational(1), -e1, e2, -e3});
}

// Numerator of a series known to satisfy the order-3 denominator recurrence:
// the product (series * denominator) truncates to degree <= 2.
Polynomial ogf_numerator(const std::vector<Integer>& first3, const Polynomial& den) {
  std::vector<Rational> num(3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i <= j; ++i) num[j] += Rational(first3[i]) * den.coeff(j - i);
  return Polynomial(std::move(num));
}

}  // namespace

RationalFunction square_ogf(const LinearRecurrence2& rec) {
  Polynomial den = ogf_denominator(rec);
  std::vector<Integer> w = terms(rec, 2);
  return RationalFunction(ogf_numerator({w[0] * w[0], w[1] * w[1], w[2] * w[2]}, den), den);
}

RationalFunction cross_ogf(const LinearRecurrence2& rec) {
  Polynomial den = ogf_denominator(rec);
  std::vector<Integer> w = terms(rec, 3);
  return RationalFunction(ogf_numerator({w[0] * w[1], w[1] * w[2], w[2] * w[3]}, den), den);
}

}  // namespace forge::recurrences
