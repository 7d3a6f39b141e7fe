#include "forge/solution.hpp"

#include <sstream>
#include <utility>

namespace forge::families {

SolutionTuple::SolutionTuple(std::size_t index, std::vector<Rational> entries,
                             std::size_t lhs_count, unsigned exponent,
                             std::optional<Residual> residual)
    : index_(index), entries_(std::move(entries)), lhs_count_(lhs_count), exponent_(exponent),
      residual_(std::move(residual)) {
  if (lhs_count_ > entries_.size())
    throw Error("SolutionTuple: left side larger than the tuple");
  Rational acc(0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    Rational p = exact::pow_rational(entries_[i], exponent_);
    if (i < lhs_count_)
      acc += p;
    else
      acc -= p;
  }
  if (residual_) {
    Rational rp = exact::pow_rational(residual_->value, exponent_);
    acc -= residual_->sign < 0 ? -rp : rp;
  }
  if (!acc.is_zero()) {
    std::ostringstream os;
    os << "solution tuple at n = " << index_ << " fails its power relation:";
    for (const Rational& e : entries_) os << " " << e.str();
    throw InternalInconsistencyError(os.str());
  }
}

bool SolutionTuple::is_integral() const {
  for (const Rational& e : entries_)
    if (!e.is_integer()) return false;
  if (residual_ && !residual_->value.is_integer()) return false;
  return true;
}

}  // namespace forge::families
