#pragma once

#include <limits>
#include <map>
#include <vector>

#include "mumford/symbolic.hpp"

namespace mumford {

/*
 * Truncated Laurent series in the equivariant parameter t with SymbolicPoly
 * coefficients.
 *
 * Every series tracks two bounds:
 *   lo  - validity floor. Coefficients below lo were truncated away and
 *         reading them is an error, never a silent zero.
 *   hi  - support top. Exponents above hi are genuinely zero (our series
 *         come from geometric expansions 1/(t - s) = sum s^k t^{-1-k},
 *         which are bounded above), so reads above hi return 0.
 *
 * Arithmetic shrinks the validity range to what is exactly computable from
 * the operands; truncation is explicit, never silent.
 */
class LaurentSeries {
 public:
  // Floor sentinel for series that are exact all the way down
  // (finite t-polynomials).
  static constexpr int kExactBelow = std::numeric_limits<int>::min() / 4;

  LaurentSeries() : lo_(kExactBelow), hi_(kExactBelow) {}

  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries monomial(int exp, const SymbolicPoly& coeff);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::map<int, SymbolicPoly>& coeffs() const { return coeffs_; }

  // Exact coefficient of t^k. Throws below the validity floor.
  SymbolicPoly coefficient(int k) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(const Rational& c) const;
  LaurentSeries scaled(const SymbolicPoly& p) const;

  // Raises the validity floor to `floor` and drops everything below it.
  LaurentSeries truncated_below(int floor) const;

  bool operator==(const LaurentSeries& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && coeffs_ == o.coeffs_;
  }

  std::string to_string() const;

 private:
  void set_coeff(int exp, const SymbolicPoly& p);
  void normalize_bounds();

  int lo_;
  int hi_;
  std::map<int, SymbolicPoly> coeffs_;
};

// One linear denominator factor sign*t + shift with shift free of t.
struct LinearFactor {
  int sign = 1;          // +1 or -1
  SymbolicPoly shift;    // e.g. -psi_0 for the factor (t - psi_0)
};

/*
 * Expands numer / prod(factors) as a Laurent series, exact on the requested
 * window and above. Each factor is inverted by the geometric series
 *   1/(sigma t + s) = sum_k sigma^{k+1} (-s)^k t^{-1-k},
 * expanded deep enough that every coefficient >= window_lo of the product is
 * exact. Factors of any other shape are rejected.
 */
LaurentSeries laurent_expand_rational(const std::vector<std::pair<int, SymbolicPoly>>& numer,
                                      const std::vector<LinearFactor>& factors,
                                      int window_lo);

}  // namespace mumford
