#include "forge/identities.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace forge::identities {

using exact::Integer;
using exact::sqrt_of_rational;
using json = nlohmann::json;

void MultiPoly::add_term(const Monomial& m, const RadicalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc;
  acc.add_term(Monomial{}, RadicalScalar(Rational(1)));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly d = a;
  d -= b;
  return d.is_zero();
}

RadicalScalar MultiPoly::evaluate(const std::vector<Rational>& point) const {
  RadicalScalar acc;
  for (const auto& [m, c] : terms_) {
    Rational v(1);
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.e[i] == 0) continue;
      Rational x = i < point.size() ? point[i] : Rational(0);
      v *= exact::pow_rational(x, m.e[i]);
    }
    acc += c * v;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* kVars = "abc";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.e[i] == 0) continue;
      os << "*" << kVars[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

MultiPoly quadratic_form(const RadicalScalar& aa, const RadicalScalar& ab, const RadicalScalar& bb) {
  MultiPoly f;
  f.add_term(Monomial{{2, 0, 0}}, aa);
  f.add_term(Monomial{{1, 1, 0}}, ab);
  f.add_term(Monomial{{0, 2, 0}}, bb);
  return f;
}

MultiPoly quadratic_form(const RadicalScalar& aa, const RadicalScalar& bb, const RadicalScalar& cc,
                         const RadicalScalar& ab, const RadicalScalar& ac, const RadicalScalar& bc) {
  MultiPoly f;
  f.add_term(Monomial{{2, 0, 0}}, aa);
  f.add_term(Monomial{{0, 2, 0}}, bb);
  f.add_term(Monomial{{0, 0, 2}}, cc);
  f.add_term(Monomial{{1, 1, 0}}, ab);
  f.add_term(Monomial{{1, 0, 1}}, ac);
  f.add_term(Monomial{{0, 1, 1}}, bc);
  return f;
}

namespace {

Rational cube(const Rational& x) { return x * x * x; }

}  // namespace

CubicSeed::CubicSeed(Rational p_, Rational q_, Rational r_, Rational s_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
  if (cube(p) + cube(q) + cube(r) != cube(s))
    throw InvalidSeedError("seed (" + p.str() + "," + q.str() + "," + r.str() + "," + s.str() +
                           ") does not satisfy p^3+q^3+r^3 = s^3");
}

FiveCubeSeed::FiveCubeSeed(Rational p_, Rational q_, Rational r_, Rational s_, Rational t_,
                           Rational u_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)), t(std::move(t_)),
      u(std::move(u_)) {
  if (cube(p) + cube(q) + cube(r) + cube(s) + cube(t) != cube(u))
    throw InvalidSeedError("seed does not satisfy p^3+q^3+r^3+s^3+t^3 = u^3");
  if ((p + s).is_zero() || (q + t).is_zero() || (r - u).is_zero())
    throw DegenerateSeedError("five-cube seed needs p+s, q+t and r-u all nonzero");
}

Rational chord_theta(const CubicSeed& seed, const Rational& a, const Rational& b) {
  Rational den = a * a * (seed.p + seed.r) + b * b * (seed.q - seed.s);
  if (den.is_zero())
    throw DegenerateDirectionError("chord direction (" + a.str() + "," + b.str() +
                                   ") is degenerate for this seed");
  Rational num = a * (seed.p * seed.p - seed.r * seed.r) + b * (seed.q * seed.q - seed.s * seed.s);
  return -num / den;
}

std::array<Rational, 4> chord_point(const CubicSeed& seed, const Rational& a, const Rational& b) {
  Rational theta = chord_theta(seed, a, b);
  return {a * theta + seed.p, b * theta + seed.q, -(a * theta) + seed.r, b * theta + seed.s};
}

QuadraticFormTuple euler_forms(const CubicSeed& seed) {
  Rational big_u = seed.r + seed.p;
  Rational big_v = seed.s - seed.q;
  if (big_u.is_zero() || big_v.is_zero())
    throw DegenerateSeedError("euler_forms needs r+p != 0 and s-q != 0");
  // Both radical coefficients are built from the same primary roots of r+p
  // and s-q, so their product collapses to (s+q)(r-p) exactly, whatever the
  // signs of the radicands.
  RadicalScalar root_uv = sqrt_of_rational(big_u) * sqrt_of_rational(big_v);
  RadicalScalar m = root_uv * ((seed.s + seed.q) / big_u);
  RadicalScalar n = root_uv * ((seed.r - seed.p) / big_v);
  RadicalScalar p(seed.p), q(seed.q), r(seed.r), s(seed.s);

  QuadraticFormTuple t;
  t.num_vars = 2;
  t.exponent = 3;
  t.lhs = {quadratic_form(p, m, -r), quadratic_form(q, -n, s), quadratic_form(r, -m, -p)};
  t.rhs = {quadratic_form(s, -n, q)};
  return t;
}

QuadraticFormTuple five_cube_forms(const FiveCubeSeed& seed) {
  Rational big_u = seed.p + seed.s;
  Rational big_v = seed.q + seed.t;
  Rational big_w = seed.r - seed.u;
  if (big_u.is_zero() || big_v.is_zero() || big_w.is_zero())
    throw DegenerateSeedError("five_cube_forms needs p+s, q+t and r-u all nonzero");
  RadicalScalar ru = sqrt_of_rational(big_u);
  RadicalScalar rv = sqrt_of_rational(big_v);
  RadicalScalar rw = sqrt_of_rational(big_w);

  RadicalScalar g = (ru * rv) * ((seed.q - seed.t) / big_u);
  RadicalScalar h = (ru * rw) * ((seed.p - seed.s) / big_w);
  RadicalScalar k = (ru * rv) * ((seed.p - seed.s) / big_v);
  RadicalScalar l = (rv * rw) * ((seed.q - seed.t) / big_w);
  RadicalScalar m = (ru * rw) * ((seed.r + seed.u) / big_u);
  RadicalScalar n = (rv * rw) * ((seed.r + seed.u) / big_v);

  RadicalScalar p(seed.p), q(seed.q), r(seed.r), s(seed.s), t(seed.t), u(seed.u);
  RadicalScalar zero;

  QuadraticFormTuple out;
  out.num_vars = 3;
  out.exponent = 3;
  out.lhs = {
      quadratic_form(s, p, p, -g, -m, zero),
      quadratic_form(q, t, q, -k, zero, -n),
      quadratic_form(r, r, -u, zero, -h, -l),
      quadratic_form(p, s, s, g, m, zero),
      quadratic_form(t, q, t, k, zero, n),
  };
  out.rhs = {quadratic_form(u, u, -r, zero, -h, -l)};
  return out;
}

CertificationReport certify_report(const QuadraticFormTuple& t) {
  MultiPoly diff;
  std::set<Monomial, GrlexDescending> support;
  auto accumulate = [&](const MultiPoly& f, bool negate) {
    MultiPoly p = f.pow(t.exponent);
    for (const auto& [m, c] : p.terms()) support.insert(m);
    if (negate)
      diff -= p;
    else
      diff += p;
  };
  for (const MultiPoly& f : t.lhs) accumulate(f, false);
  for (const MultiPoly& f : t.rhs) accumulate(f, true);
  return {diff.is_zero(), support.size()};
}

bool certify_identity(const QuadraticFormTuple& t) { return certify_report(t).certified; }

namespace {

MultiPoly int_form2(long aa, long ab, long bb) {
  return quadratic_form(RadicalScalar(Rational(aa)), RadicalScalar(Rational(ab)),
                        RadicalScalar(Rational(bb)));
}

QuadraticFormTuple int_tuple2(std::vector<std::array<long, 3>> lhs,
                                   std::vector<std::array<long, 3>> rhs, unsigned exponent) {
  QuadraticFormTuple t;
  t.num_vars = 2;
  t.exponent = exponent;
  for (const auto& f : lhs) t.lhs.push_back(int_form2(f[0], f[1], f[2]));
  for (const auto& f : rhs) t.rhs.push_back(int_form2(f[0], f[1], f[2]));
  return t;
}

}  // namespace

const std::vector<std::string>& builtin_identity_names() {
  static const std::vector<std::string> names = {"eq1.4", "eq1.5", "eq3.9", "eq3.12"};
  return names;
}

QuadraticFormTuple builtin_identity(const std::string& name) {
  if (name == "eq1.4")
    return int_tuple2({{3, 5, -5}, {4, -4, 6}, {5, -5, -3}}, {{6, -4, 4}}, 3);
  if (name == "eq1.5")
    return int_tuple2({{1, 7, -9}, {2, -4, 12}}, {{2, 0, 10}, {1, -9, -1}}, 3);
  if (name == "eq3.9")
    return int_tuple2({{8, 40, -24}, {6, -44, -18}, {14, -4, -42}, {9, 0, 27}, {4, 0, 12}},
                           {{15, 0, 45}}, 4);
  if (name == "eq3.12")
    return int_tuple2({{4, 0, -12}, {3, 0, 9}, {2, -12, -6}, {4, 0, 12}, {2, 12, -6}},
                           {{5, 0, 15}}, 4);
  throw Error("unknown identity '" + name + "'");
}

std::vector<QuadraticFormTuple> builtin_quartic_identities() {
  return {builtin_identity("eq3.9"), builtin_identity("eq3.12")};
}

namespace {

json radical_to_json(const RadicalScalar& x) {
  json j;
  j["radicands"] = json::array();
  for (const Integer& d : x.radicands()) j["radicands"].push_back(exact::to_string(d));
  j["components"] = json::array();
  for (const Rational& c : x.components()) j["components"].push_back(c.str());
  return j;
}

RadicalScalar radical_from_json(const json& j) {
  std::vector<Integer> rads;
  for (const auto& v : j.at("radicands")) rads.push_back(exact::parse_integer(v.get<std::string>()));
  std::vector<Rational> comps;
  for (const auto& v : j.at("components")) comps.push_back(Rational::parse(v.get<std::string>()));
  return RadicalScalar(std::move(rads), std::move(comps));
}

json form_to_json(const MultiPoly& f, unsigned num_vars) {
  json arr = json::array();
  for (const auto& [m, c] : f.terms()) {
    json term;
    term["powers"] = json::array();
    for (unsigned i = 0; i < num_vars; ++i) term["powers"].push_back(m.e[i]);
    term["coefficient"] = radical_to_json(c);
    arr.push_back(term);
  }
  return arr;
}

MultiPoly form_from_json(const json& arr, unsigned num_vars) {
  MultiPoly f;
  for (const auto& term : arr) {
    const json& powers = term.at("powers");
    if (powers.size() != num_vars) throw ParseError("form monomial arity mismatch");
    Monomial m;
    for (std::size_t i = 0; i < powers.size(); ++i) m.e[i] = powers[i].get<unsigned>();
    if (m.degree() != 2) throw ParseError("form monomial is not of degree 2");
    f.add_term(m, radical_from_json(term.at("coefficient")));
  }
  return f;
}

}  // namespace

std::string QuadraticFormTuple::to_json() const {
  json j;
  j["variables"] = num_vars == 2 ? json::array({"a", "b"}) : json::array({"a", "b", "c"});
  j["exponent"] = exponent;
  j["lhs"] = json::array();
  for (const MultiPoly& f : lhs) j["lhs"].push_back(form_to_json(f, num_vars));
  j["rhs"] = json::array();
  for (const MultiPoly& f : rhs) j["rhs"].push_back(form_to_json(f, num_vars));
  return j.dump();
}

QuadraticFormTuple QuadraticFormTuple::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad form-tuple JSON: ") + e.what());
  }
  try {
    QuadraticFormTuple t;
    t.num_vars = static_cast<unsigned>(j.at("variables").size());
    if (t.num_vars != 2 && t.num_vars != 3) throw ParseError("form tuple needs 2 or 3 variables");
    t.exponent = j.at("exponent").get<unsigned>();
    if (t.exponent != 3 && t.exponent != 4) throw ParseError("form tuple exponent must be 3 or 4");
    for (const auto& f : j.at("lhs")) t.lhs.push_back(form_from_json(f, t.num_vars));
    for (const auto& f : j.at("rhs")) t.rhs.push_back(form_from_json(f, t.num_vars));
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad form-tuple JSON: ") + e.what());
  }
}

bool operator==(const QuadraticFormTuple& a, const QuadraticFormTuple& b) {
  if (a.num_vars != b.num_vars || a.exponent != b.exponent) return false;
  if (a.lhs.size() != b.lhs.size() || a.rhs.size() != b.rhs.size()) return false;
  for (std::size_t i = 0; i < a.lhs.size(); ++i)
    if (!(a.lhs[i] == b.lhs[i])) return false;
  for (std::size_t i = 0; i < a.rhs.size(); ++i)
    if (!(a.rhs[i] == b.rhs[i])) return false;
  return true;
}

}  // namespace forge::identities
