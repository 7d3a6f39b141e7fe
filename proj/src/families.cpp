#include "forge/families.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"

namespace forge::families {

using exact::pow_rational;
using series::Polynomial;
using json = nlohmann::json;

namespace {

FamilySpec make_spec(std::string name, unsigned exponent, Direction direction, const char* den,
                     std::vector<const char*> nums, std::size_t lhs_count,
                     std::optional<ResidualSpec> residual, LinearRecurrence2 rec,
                     std::vector<QuadSub> subs) {
  FamilySpec s;
  s.name = std::move(name);
  s.exponent = exponent;
  s.direction = direction;
  Polynomial d = Polynomial::parse(den);
  for (const char* n : nums) s.generators.emplace_back(Polynomial::parse(n), d);
  s.lhs_count = lhs_count;
  s.residual = std::move(residual);
  s.recurrence = std::move(rec);
  s.substitutions = std::move(subs);
  return s;
}

std::vector<FamilySpec> build_specs() {
  std::vector<FamilySpec> v;

  v.push_back(make_spec("thm1.1", 3, Direction::taylor, "1-82x-82x^2+x^3",
                        {"1+53x+9x^2", "2-26x-12x^2", "2+8x-10x^2"}, 2,
                        ResidualSpec{+1, Rational(1), Rational(-1), 0, QuadSub{1, -9, -1}},
                        LinearRecurrence2{9, 1, 0, 1},
                        {{1, 7, -9}, {2, -4, 12}, {2, 0, 10}}));

  v.push_back(make_spec("thm2.4", 3, Direction::taylor, "1-2x-2x^2+x^3",
                        {"1-3x+9x^2", "2+6x-12x^2", "2+8x-10x^2", "1-11x+x^2"}, 2, std::nullopt,
                        LinearRecurrence2{1, 1, 0, 1},
                        {{1, 7, -9}, {2, -4, 12}, {2, 0, 10}, {1, -9, -1}}));

  v.push_back(make_spec("thm2.5", 3, Direction::taylor, "1-58x-522x^2+729x^3",
                        {"2-8x-90x^2", "1+53x+9x^2", "2+22x-108x^2"}, 2,
                        ResidualSpec{+1, Rational(1), Rational(-9), 0, QuadSub{1, 7, -9}},
                        LinearRecurrence2{-7, 9, 0, 1},
                        {{2, 0, 10}, {1, -9, -1}, {2, -4, 12}}));

  v.push_back(make_spec("thm2.6", 3, Direction::taylor, "1+2x-12x^2-216x^3",
                        {"2+22x+60x^2", "1-13x-6x^2", "1+11x-54x^2"}, 2,
                        ResidualSpec{+1, Rational(2), Rational(6), 0, QuadSub{2, -4, 12}},
                        LinearRecurrence2{2, -6, 0, 1},
                        {{2, 0, 10}, {1, -9, -1}, {1, 7, -9}}));

  v.push_back(make_spec("thm2.7", 4, Direction::taylor, "1-2x-2x^2+x^3",
                        {"8+8x+24x^2", "6-68x+18x^2", "14-60x+42x^2", "9+18x-27x^2", "4+8x-12x^2",
                         "15+30x-45x^2"},
                        5, std::nullopt, LinearRecurrence2{1, 1, 0, 1},
                        {{8, 40, -24}, {6, -44, -18}, {14, -4, -42}, {9, 0, 27}, {4, 0, 12},
                         {15, 0, 45}}));

  v.push_back(make_spec("thm2.8", 4, Direction::taylor, "1-28x-84x^2+27x^3",
                        {"6+184x+54x^2", "14-64x+126x^2", "9-81x^2", "4-36x^2", "15-135x^2"}, 4,
                        ResidualSpec{-1, Rational(8), Rational(-3), 0, QuadSub{8, 40, -24}},
                        LinearRecurrence2{-5, 3, 0, 1},
                        {{6, -44, -18}, {14, -4, -42}, {9, 0, 27}, {4, 0, 12}, {15, 0, 45}}));

  v.push_back(make_spec("thm2.9", 4, Direction::taylor, "1-2x-2x^2+x^3",
                        {"4-16x+12x^2", "3+6x-9x^2", "2-20x+6x^2", "4+8x-12x^2", "2+4x+6x^2",
                         "5+10x-15x^2"},
                        5, std::nullopt, LinearRecurrence2{1, 1, 0, 1},
                        {{4, 0, -12}, {3, 0, 9}, {2, -12, -6}, {4, 0, 12}, {2, 12, -6},
                         {5, 0, 15}}));

  v.push_back(make_spec("thm2.10", 4, Direction::taylor, "1-39x-117x^2+27x^3",
                        {"4-24x+36x^2", "3-27x^2", "4-36x^2", "2+60x+18x^2", "5-45x^2"}, 4,
                        ResidualSpec{-1, Rational(2), Rational(-3), 0, QuadSub{2, -12, -6}},
                        LinearRecurrence2{6, 3, 0, 1},
                        {{4, 0, -12}, {3, 0, 9}, {4, 0, 12}, {2, 12, -6}, {5, 0, 15}}));

  v.push_back(make_spec("thm1.1-laurent", 3, Direction::laurent, "1-82x-82x^2+x^3",
                        {"1+53x+9x^2", "2-26x-12x^2", "2+8x-10x^2"}, 2,
                        ResidualSpec{+1, Rational(1), Rational(-1), 0, std::nullopt},
                        LinearRecurrence2{9, 1, 0, 1}, {}));

  v.push_back(make_spec("thm2.5-laurent", 3, Direction::laurent, "1-58x-522x^2+729x^3",
                        {"2-8x-90x^2", "1+53x+9x^2", "2+22x-108x^2"}, 2,
                        ResidualSpec{-1, Rational(1), Rational(-1, 9), 1, std::nullopt},
                        LinearRecurrence2{-7, 9, 0, 1}, {}));

  v.push_back(make_spec("thm2.6-laurent", 3, Direction::laurent, "1+2x-12x^2-216x^3",
                        {"2+22x+60x^2", "1-13x-6x^2", "1+11x-54x^2"}, 2,
                        ResidualSpec{-1, Rational(2), Rational(1, 6), 1, std::nullopt},
                        LinearRecurrence2{2, -6, 0, 1}, {}));

  return v;
}

}  // namespace

const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> specs = build_specs();
  return specs;
}

const FamilySpec& family_by_name(const std::string& name) {
  for (const FamilySpec& s : builtin_families())
    if (s.name == name) return s;
  std::ostringstream os;
  os << "unknown family '" << name << "'; valid names:";
  for (const FamilySpec& s : builtin_families()) os << " " << s.name;
  throw UnknownFamilyError(os.str());
}

Rational residual_value(const ResidualSpec& spec, std::size_t n) {
  return spec.scale * pow_rational(spec.base, n + spec.index_offset);
}

namespace {

std::vector<SolutionTuple> assemble(const FamilySpec& spec, std::size_t n_max,
                                    const std::vector<std::vector<Rational>>& columns,
                                    bool require_integral) {
  std::vector<SolutionTuple> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<Rational> entries;
    entries.reserve(columns.size());
    for (const auto& col : columns) entries.push_back(col[n]);
    std::optional<Residual> res;
    if (spec.residual) res = Residual{spec.residual->sign, residual_value(*spec.residual, n)};
    SolutionTuple t(n, std::move(entries), spec.lhs_count, spec.exponent, std::move(res));
    if (require_integral && !t.is_integral())
      throw InternalInconsistencyError("family " + spec.name + " produced a non-integral row at n = " +
                                       std::to_string(n));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<SolutionTuple> generate(const FamilySpec& spec, std::size_t n_max) {
  if (spec.direction != Direction::taylor)
    throw Error("generate needs a taylor-direction family, got " + spec.name);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(spec.generators.size());
  for (const RationalFunction& g : spec.generators)
    columns.push_back(series::taylor_coeffs(g, n_max + 1));
  return assemble(spec, n_max, columns, /*require_integral=*/true);
}

std::vector<SolutionTuple> generate_laurent(const FamilySpec& spec, std::size_t n_max) {
  if (spec.direction != Direction::laurent)
    throw Error("generate_laurent needs a laurent-direction family, got " + spec.name);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(spec.generators.size());
  for (const RationalFunction& g : spec.generators)
    columns.push_back(series::laurent_coeffs_at_infinity(g, n_max + 1));
  return assemble(spec, n_max, columns, /*require_integral=*/false);
}

SolutionTuple clear_denominators(const SolutionTuple& t, const Integer& base) {
  if (base < 2) throw Error("clear_denominators needs base >= 2");
  constexpr unsigned kMaxPower = 64;
  Rational lambda(1);
  for (unsigned j = 0; j <= kMaxPower; ++j) {
    bool ok = true;
    for (const Rational& e : t.entries())
      if (!(e * lambda).is_integer()) ok = false;
    if (t.residual() && !(t.residual()->value * lambda).is_integer()) ok = false;
    if (ok) {
      std::vector<Rational> entries;
      entries.reserve(t.entries().size());
      for (const Rational& e : t.entries()) entries.push_back(e * lambda);
      std::optional<Residual> res;
      if (t.residual()) res = Residual{t.residual()->sign, t.residual()->value * lambda};
      return SolutionTuple(t.index(), std::move(entries), t.lhs_count(), t.exponent(),
                           std::move(res));
    }
    lambda *= Rational(base);
  }
  throw NotClearableError("no power of " + exact::to_string(base) + " up to " +
                          std::to_string(kMaxPower) + " clears the tuple at n = " +
                          std::to_string(t.index()));
}

bool check_shift_remark(std::size_t n_max) {
  const FamilySpec& spec = family_by_name("thm2.4");
  auto a = series::taylor_coeffs(spec.generators[0], n_max + 2);
  auto d = series::taylor_coeffs(spec.generators[3], n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    if (d[n] != -a[n + 1]) return false;
  return true;
}

std::string tuples_to_csv(const std::vector<SolutionTuple>& tuples) {
  static const char* kLetters = "abcdef";
  std::ostringstream os;
  std::size_t width = tuples.empty() ? 0 : tuples.front().entries().size();
  os << "n";
  for (std::size_t i = 0; i < width; ++i) os << "," << kLetters[i];
  os << ",residual\n";
  for (const SolutionTuple& t : tuples) {
    os << t.index();
    for (const Rational& e : t.entries()) os << "," << e.str();
    os << ",";
    if (t.residual()) os << t.residual()->value.str();
    os << "\n";
  }
  return os.str();
}

std::string tuples_to_json(const std::vector<SolutionTuple>& tuples) {
  json arr = json::array();
  for (const SolutionTuple& t : tuples) {
    json j;
    j["n"] = t.index();
    j["exponent"] = t.exponent();
    j["lhs_count"] = t.lhs_count();
    j["entries"] = json::array();
    for (const Rational& e : t.entries()) j["entries"].push_back(e.str());
    if (t.residual()) {
      j["residual"] = {{"sign", t.residual()->sign}, {"value", t.residual()->value.str()}};
    } else {
      j["residual"] = nullptr;
    }
    arr.push_back(j);
  }
  return arr.dump();
}

std::vector<SolutionTuple> tuples_from_json(const std::string& text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad tuple JSON: ") + e.what());
  }
  try {
    std::vector<SolutionTuple> out;
    for (const json& j : arr) {
      std::vector<Rational> entries;
      for (const auto& e : j.at("entries")) entries.push_back(Rational::parse(e.get<std::string>()));
      std::optional<Residual> res;
      if (!j.at("residual").is_null())
        res = Residual{j.at("residual").at("sign").get<int>(),
                       Rational::parse(j.at("residual").at("value").get<std::string>())};
      out.emplace_back(j.at("n").get<std::size_t>(), std::move(entries),
                       j.at("lhs_count").get<std::size_t>(), j.at("exponent").get<unsigned>(),
                       std::move(res));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad tuple JSON: ") + e.what());
  }
}

std::string to_equation(const SolutionTuple& t) {
  auto term = [&](const Rational& v) {
    bool wrap = v.sign() < 0 || !v.is_integer();
    std::string s = wrap ? "(" + v.str() + ")" : v.str();
    return s + "^" + std::to_string(t.exponent());
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < t.lhs_count(); ++i) {
    if (i) os << " + ";
    os << term(t.entries()[i]);
  }
  os << " = ";
  bool first = true;
  for (std::size_t i = t.lhs_count(); i < t.entries().size(); ++i) {
    if (!first) os << " + ";
    first = false;
    os << term(t.entries()[i]);
  }
  if (t.residual()) {
    if (!first) os << (t.residual()->sign < 0 ? " - " : " + ");
    else if (t.residual()->sign < 0) os << "-";
    os << term(t.residual()->value);
  }
  return os.str();
}

}  // namespace forge::families
