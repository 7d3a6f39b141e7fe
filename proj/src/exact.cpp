#include "forge/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace forge::exact {

std::string to_string(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ParseError("integer literal '" + text + "' has no digits");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad integer literal '" + text + "'");
  }
  return Integer(text, 10);
}

Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

void squarefree_decompose(const Integer& n, Integer& f, Integer& d) {
  if (sgn(n) == 0) throw Error("squarefree_decompose: zero input");
  f = 1;
  d = sgn(n) < 0 ? -1 : 1;
  Integer m = abs(n);
  Integer p = 2;
  while (m > 1) {
    if (is_perfect_square(m)) {
      f *= isqrt(m);
      return;
    }
    if (p * p > m) break;
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) {
      if (e >= 2) f *= pow_integer(p, e / 2);
      if (e % 2 == 1) d *= p;
    }
    p = (p == 2) ? Integer(3) : Integer(p + 2);
  }
  d *= m;  // remaining factor is 1 or prime
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw ZeroDenominatorError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::reciprocal() const {
  if (is_zero()) throw ZeroDenominatorError("reciprocal of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw ZeroDenominatorError("rational literal '" + text + "' has zero denominator");
  return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ZeroDenominatorError("division by zero rational");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominatorError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational rational_normalize(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

Rational pow_rational(const Rational& base, unsigned long e) {
  return Rational(pow_integer(base.num(), e), pow_integer(base.den(), e));
}

namespace {

// sqrt(d) expressed over a tower: coeff * prod_{i in mask} sqrt(tower[i]).
struct BasisRep {
  unsigned mask = 0;
  Rational coeff = Rational(1);
};

// Embeds sqrt(d) into the tower, extending it when d is independent of the
// radicands already present. d must be squarefree and not 0 or 1.
BasisRep adjoin(std::vector<Integer>& tower, const Integer& d) {
  const unsigned n = static_cast<unsigned>(tower.size());
  for (unsigned i = 0; i < n; ++i)
    if (tower[i] == d) return BasisRep{1u << i, Rational(1)};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Integer prod = d;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= tower[i];
    if (is_perfect_square(prod)) {
      Integer denom = 1;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) denom *= tower[i];
      return BasisRep{mask, Rational(isqrt(prod), denom)};
    }
  }
  if (tower.size() == RadicalScalar::kMaxRadicands)
    throw UnsupportedTowerError("radical tower limited to 3 radicands");
  tower.push_back(d);
  return BasisRep{1u << n, Rational(1)};
}

// Components of a value re-expressed over `tower`, which is extended as
// needed. reps[i] caches the embedding of the i-th source radicand.
std::vector<Rational> embed(const std::vector<Integer>& src_rads,
                            const std::vector<Rational>& src_comps,
                            std::vector<Integer>& tower) {
  std::vector<BasisRep> reps;
  reps.reserve(src_rads.size());
  for (const Integer& d : src_rads) reps.push_back(adjoin(tower, d));

  std::vector<Rational> out(std::size_t(1) << tower.size());
  for (unsigned m = 0; m < src_comps.size(); ++m) {
    if (src_comps[m].is_zero()) continue;
    Rational c = src_comps[m];
    unsigned mask = 0;
    for (unsigned i = 0; i < src_rads.size(); ++i) {
      if (!(m & (1u << i))) continue;
      c *= reps[i].coeff;
      unsigned common = mask & reps[i].mask;
      for (unsigned j = 0; common; ++j, common >>= 1)
        if (common & 1u) c *= Rational(tower[j]);
      mask ^= reps[i].mask;
    }
    out[mask] += c;
  }
  return out;
}

// Restores the sorted-radicand invariant after a merge.
void sort_tower(std::vector<Integer>& tower, std::vector<Rational>& comps) {
  const unsigned n = static_cast<unsigned>(tower.size());
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](unsigned a, unsigned b) { return tower[a] < tower[b]; });
  bool sorted = true;
  for (unsigned i = 0; i < n; ++i)
    if (order[i] != i) sorted = false;
  if (sorted) return;

  std::vector<Integer> new_tower(n);
  for (unsigned i = 0; i < n; ++i) new_tower[i] = tower[order[i]];
  std::vector<Rational> new_comps(comps.size());
  for (unsigned mask = 0; mask < comps.size(); ++mask) {
    unsigned nm = 0;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << order[i])) nm |= (1u << i);
    new_comps[nm] = comps[mask];
  }
  tower = std::move(new_tower);
  comps = std::move(new_comps);
}

}  // namespace

RadicalScalar::RadicalScalar(std::vector<Integer> radicands, std::vector<Rational> components)
    : rads_(std::move(radicands)), comps_(std::move(components)) {
  if (comps_.size() != (std::size_t(1) << rads_.size()))
    throw Error("RadicalScalar: component count must be 2^k");
  if (rads_.size() > kMaxRadicands)
    throw UnsupportedTowerError("radical tower limited to 3 radicands");
  sort_tower(rads_, comps_);
  prune();
}

bool RadicalScalar::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool RadicalScalar::is_rational() const {
  for (unsigned mask = 1; mask < comps_.size(); ++mask)
    if (!comps_[mask].is_zero()) return false;
  return true;
}

Rational RadicalScalar::rational_value() const {
  if (!is_rational()) throw Error("RadicalScalar is not rational: " + str());
  return comps_[0];
}

void RadicalScalar::prune() {
  for (unsigned i = 0; i < rads_.size();) {
    bool used = false;
    for (unsigned mask = 0; mask < comps_.size(); ++mask)
      if ((mask & (1u << i)) && !comps_[mask].is_zero()) used = true;
    if (used) {
      ++i;
      continue;
    }
    std::vector<Rational> reduced(comps_.size() / 2);
    for (unsigned mask = 0; mask < comps_.size(); ++mask) {
      if (mask & (1u << i)) continue;
      unsigned low = mask & ((1u << i) - 1);
      unsigned high = (mask >> (i + 1)) << i;
      reduced[high | low] = comps_[mask];
    }
    comps_ = std::move(reduced);
    rads_.erase(rads_.begin() + i);
  }
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  std::vector<Integer> tower = rads_;
  std::vector<Rational> a = embed(rads_, comps_, tower);
  std::vector<Rational> b = embed(o.rads_, o.comps_, tower);
  a.resize(std::size_t(1) << tower.size());
  for (unsigned m = 0; m < b.size(); ++m) a[m] += b[m];
  sort_tower(tower, a);
  rads_ = std::move(tower);
  comps_ = std::move(a);
  prune();
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  return *this += -o;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  std::vector<Integer> tower = rads_;
  std::vector<Rational> a = embed(rads_, comps_, tower);
  std::vector<Rational> b = embed(o.rads_, o.comps_, tower);
  a.resize(std::size_t(1) << tower.size());
  std::vector<Rational> out(a.size());
  for (unsigned m1 = 0; m1 < a.size(); ++m1) {
    if (a[m1].is_zero()) continue;
    for (unsigned m2 = 0; m2 < b.size(); ++m2) {
      if (b[m2].is_zero()) continue;
      Rational c = a[m1] * b[m2];
      unsigned common = m1 & m2;
      for (unsigned j = 0; common; ++j, common >>= 1)
        if (common & 1u) c *= Rational(tower[j]);
      out[m1 ^ m2] += c;
    }
  }
  sort_tower(tower, out);
  rads_ = std::move(tower);
  comps_ = std::move(out);
  prune();
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const Rational& r) {
  for (auto& c : comps_) c *= r;
  prune();
  return *this;
}

RadicalScalar RadicalScalar::pow(unsigned long e) const {
  RadicalScalar acc(Rational(1));
  for (unsigned long i = 0; i < e; ++i) acc *= *this;
  return acc;
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar d = a;
  d -= b;
  return d.is_zero();
}

std::string RadicalScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned mask = 0; mask < comps_.size(); ++mask) {
    if (comps_[mask].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comps_[mask].str() << ")";
    for (unsigned i = 0; i < rads_.size(); ++i)
      if (mask & (1u << i)) os << "*sqrt(" << rads_[i].get_str() << ")";
  }
  if (first) os << "0";
  return os.str();
}

RadicalScalar sqrt_of_rational(const Rational& q) {
  if (q.is_zero()) return RadicalScalar();
  Integer f, d;
  squarefree_decompose(q.num() * q.den(), f, d);
  Rational scale(f, q.den());
  if (d == 1) return RadicalScalar(scale);
  return RadicalScalar({d}, {Rational(0), scale});
}

RadicalScalar radical_mul(const RadicalScalar& x, const RadicalScalar& y) {
  RadicalScalar r = x;
  r *= y;
  return r;
}

}  // namespace forge::exact
