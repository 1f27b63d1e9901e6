#include "mumford/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace mumford {

namespace {

int add_clamped(int a, int b) {
  if (a <= LaurentSeries::kExactBelow || b <= LaurentSeries::kExactBelow)
    return LaurentSeries::kExactBelow;
  return a + b;
}

}  // namespace

LaurentSeries LaurentSeries::monomial(int exp, const SymbolicPoly& coeff) {
  LaurentSeries s;
  s.lo_ = kExactBelow;
  s.hi_ = exp;
  if (!coeff.is_zero()) s.coeffs_[exp] = coeff;
  s.normalize_bounds();
  return s;
}

void LaurentSeries::set_coeff(int exp, const SymbolicPoly& p) {
  if (p.is_zero())
    coeffs_.erase(exp);
  else
    coeffs_[exp] = p;
}

void LaurentSeries::normalize_bounds() {
  // hi_ may only shrink to the actual support; never below lo_ - 1.
  while (hi_ > lo_ && hi_ > kExactBelow && !coeffs_.count(hi_)) --hi_;
}

SymbolicPoly LaurentSeries::coefficient(int k) const {
  if (k < lo_)
    throw std::out_of_range("LaurentSeries: coefficient of t^" + std::to_string(k) +
                            " is below the truncation floor " + std::to_string(lo_));
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? SymbolicPoly() : it->second;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  LaurentSeries r;
  r.lo_ = std::max(lo_, o.lo_);
  r.hi_ = std::max(hi_, o.hi_);
  for (const auto& [e, p] : coeffs_)
    if (e >= r.lo_) r.coeffs_[e] = p;
  for (const auto& [e, p] : o.coeffs_) {
    if (e < r.lo_) continue;
    auto it = r.coeffs_.find(e);
    if (it == r.coeffs_.end())
      r.coeffs_[e] = p;
    else {
      it->second = it->second + p;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  r.normalize_bounds();
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  LaurentSeries r;
  // c_n is exact iff every dropped coefficient of one operand would have met
  // a known-zero coefficient of the other.
  r.lo_ = std::max(add_clamped(lo_, o.hi_), add_clamped(o.lo_, hi_));
  r.hi_ = add_clamped(hi_, o.hi_);
  if (r.hi_ <= kExactBelow) return r;  // zero * anything
  for (const auto& [ea, pa] : coeffs_) {
    for (const auto& [eb, pb] : o.coeffs_) {
      int e = ea + eb;
      if (e < r.lo_) continue;
      SymbolicPoly prod = pa * pb;
      if (prod.is_zero()) continue;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end())
        r.coeffs_[e] = prod;
      else {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  r.normalize_bounds();
  return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
  return scaled(SymbolicPoly(c));
}

LaurentSeries LaurentSeries::scaled(const SymbolicPoly& p) const {
  LaurentSeries r;
  r.lo_ = lo_;
  r.hi_ = hi_;
  if (p.is_zero()) {
    r.hi_ = kExactBelow;
    r.lo_ = kExactBelow;
    return r;
  }
  for (const auto& [e, q] : coeffs_) r.set_coeff(e, q * p);
  r.normalize_bounds();
  return r;
}

LaurentSeries LaurentSeries::truncated_below(int floor) const {
  LaurentSeries r;
  r.lo_ = std::max(lo_, floor);
  r.hi_ = hi_;
  for (const auto& [e, p] : coeffs_)
    if (e >= r.lo_) r.coeffs_[e] = p;
  r.normalize_bounds();
  return r;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, p] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")*t^" << e;
  }
  if (first) os << "0";
  os << "]  (floor t^" << lo_ << ")";
  return os.str();
}

namespace {

// 1/(sigma t + s), expanded down to t^depth.
LaurentSeries invert_linear_factor(const LinearFactor& f, int depth) {
  if (f.sign != 1 && f.sign != -1)
    throw std::invalid_argument("laurent_expand_rational: unsupported denominator");
  if (f.shift.is_zero()) {
    // 1/(sigma t) = sigma t^-1 exactly.
    return LaurentSeries::monomial(-1, SymbolicPoly(Rational(f.sign)));
  }
  LaurentSeries r = LaurentSeries::zero();
  SymbolicPoly shift_pow = SymbolicPoly::one();
  for (int k = 0; -1 - k >= depth; ++k) {
    // Coefficient of t^{-1-k} is sigma^{k+1} (-s)^k, which collapses to
    // (-1)^k s^k for sigma = +1 and to -s^k for sigma = -1.
    int sgn = (f.sign == 1) ? (k % 2 == 0 ? 1 : -1) : -1;
    r = r + LaurentSeries::monomial(-1 - k, shift_pow.scaled(Rational(sgn)));
    shift_pow = shift_pow * f.shift;
  }
  return r.truncated_below(depth);
}

}  // namespace

LaurentSeries laurent_expand_rational(const std::vector<std::pair<int, SymbolicPoly>>& numer,
                                      const std::vector<LinearFactor>& factors,
                                      int window_lo) {
  LaurentSeries acc = LaurentSeries::zero();
  int numer_hi = LaurentSeries::kExactBelow;
  for (const auto& [exp, coeff] : numer) {
    acc = acc + LaurentSeries::monomial(exp, coeff);
    numer_hi = std::max(numer_hi, exp);
  }
  if (acc.hi() <= LaurentSeries::kExactBelow) return acc;

  // Every inverted factor has support top -1, so expanding each one down to
  // window_lo - (top of everything else) keeps the product exact on the
  // requested window.
  int others_hi = numer_hi - static_cast<int>(factors.size());  // each factor tops at -1
  for (const auto& f : factors) {
    int depth = window_lo - (others_hi - (-1)) - 1;
    acc = acc * invert_linear_factor(f, depth);
  }
  if (acc.lo() > window_lo)
    throw std::logic_error("laurent_expand_rational: internal truncation shortfall");
  return acc.truncated_below(window_lo);
}

}  // namespace mumford
