#include "forge/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace forge::series {

using exact::Integer;

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
  return Polynomial(std::move(r));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  std::string digits() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits at position " + std::to_string(start) + " in '" + s + "'");
    return s.substr(start, pos - start);
  }
};

// coefficient := digits [ '/' digits ]
Rational parse_coefficient(Cursor& c) {
  Integer num = exact::parse_integer(c.digits());
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    Integer den = exact::parse_integer(c.digits());
    return exact::rational_normalize(num, den);
  }
  return Rational(num);
}

// term := coefficient ['*'] [var] | var ;  var := 'x' ['^' digits]
void parse_term(Cursor& c, int sign, std::vector<Rational>& acc) {
  Rational coeff(1);
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_coefficient(c);
    have_coeff = true;
    c.skip_ws();
    if (!c.done() && c.peek() == '*') {
      ++c.pos;
      c.skip_ws();
    }
  }
  std::size_t deg = 0;
  if (!c.done() && c.peek() == 'x') {
    ++c.pos;
    deg = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      deg = std::stoul(c.digits());
    }
  } else if (!have_coeff) {
    throw ParseError("expected term at position " + std::to_string(c.pos) + " in '" + c.s + "'");
  }
  if (acc.size() < deg + 1) acc.resize(deg + 1);
  acc[deg] += sign < 0 ? -coeff : coeff;
}

// True when `s` has no parentheses and no top-level '/', '+', '-' except a
// leading sign. A side of the function-literal division must satisfy this or
// be fully parenthesized.
bool is_atomic(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == ')' || ch == '/') return false;
    if ((ch == '+' || ch == '-') && i > 0) return false;
  }
  return !s.empty();
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Strips one pair of parentheses when they wrap the whole string.
bool strip_outer_parens(std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0) return false;  // the opening paren closes early
  }
  s = trim(s.substr(1, s.size() - 2));
  return true;
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  std::string body = trim(text);
  while (strip_outer_parens(body)) {
  }
  Cursor c{body};
  c.skip_ws();
  if (c.done()) throw ParseError("empty polynomial literal");
  std::vector<Rational> acc;
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') {
    sign = c.peek() == '-' ? -1 : 1;
    ++c.pos;
    c.skip_ws();
  }
  for (;;) {
    parse_term(c, sign, acc);
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
      c.skip_ws();
    } else {
      throw ParseError("unexpected character '" + std::string(1, c.peek()) + "' in polynomial '" +
                       text + "'");
    }
  }
  return Polynomial(std::move(acc));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction RationalFunction::parse(const std::string& text) {
  std::string body = trim(text);
  if (body.empty()) throw ParseError("empty rational-function literal");
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch != '/' || depth != 0) continue;
    std::string left = trim(body.substr(0, i));
    std::string right = trim(body.substr(i + 1));
    auto side_ok = [](std::string s) {
      if (strip_outer_parens(s)) return true;
      return is_atomic(s);
    };
    if (!side_ok(left) || !side_ok(right)) continue;
    return RationalFunction(Polynomial::parse(left), Polynomial::parse(right));
  }
  return RationalFunction(Polynomial::parse(body), Polynomial::constant(Rational(1)));
}

std::vector<Rational> taylor_coeffs(const RationalFunction& rf, std::size_t count) {
  const Polynomial& p = rf.numerator();
  const Polynomial& q = rf.denominator();
  Rational q0 = q.coeff(0);
  if (q0.is_zero())
    throw NotTaylorExpandableError("denominator has zero constant term: " + q.str());
  std::vector<Rational> a;
  a.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = p.coeff(n);
    std::size_t lim = std::min<std::size_t>(n, static_cast<std::size_t>(std::max<long>(q.degree(), 0)));
    for (std::size_t i = 1; i <= lim; ++i) acc -= q.coeff(i) * a[n - i];
    a.push_back(acc / q0);
  }
  return a;
}

std::vector<Rational> laurent_coeffs_at_infinity(const RationalFunction& rf, std::size_t count) {
  const Polynomial& p = rf.numerator();
  const Polynomial& q = rf.denominator();
  if (p.is_zero()) return std::vector<Rational>(count, Rational(0));
  if (p.degree() >= q.degree())
    throw UnsupportedShapeError("expansion at infinity needs deg(num) < deg(den): " + rf.str());
  // Substitute x -> 1/y: the function becomes y^(D-N) * rev(num)/rev(den),
  // which is Taylor-expandable at y = 0 because rev(den)(0) = leading(den) != 0.
  std::size_t shift = static_cast<std::size_t>(q.degree() - p.degree());
  RationalFunction rev(p.reversed(), q.reversed());
  std::vector<Rational> t = taylor_coeffs(rev, count);
  std::vector<Rational> alpha(count, Rational(0));
  for (std::size_t k = 0; k < count; ++k) {
    // alpha_k multiplies x^-(k+1), i.e. y^(k+1); strip the y^shift prefactor.
    if (k + 1 >= shift) alpha[k] = t[k + 1 - shift];
  }
  return alpha;
}

}  // namespace forge::series
