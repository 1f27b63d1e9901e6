#pragma once

// Independent oracles for the localization coefficients, derived on paper
// and implemented as direct enumerations. They never touch the Laurent
// machinery they are used to check.

#include "mumford/symbolic.hpp"

namespace oracles {

using namespace mumford;

// Coefficient of t^{-3-j} in the F_0 contribution
//   (1/t) (-1)^g (t^g + lambda_1 t^{g-1} + ... + lambda_g) / (-t(-t - psi)),
// by direct bookkeeping of exponents: picking lambda_i from the numerator
// forces psi^{g-i+j} from the geometric tail, and the signs collapse to
// (-1)^{i+j}.
inline SymbolicPoly f0_coefficient(int g, int j) {
  SymbolicPoly out;
  for (int i = 0; i <= g; ++i) {
    Monomial m;
    if (i >= 1) m[Symbol::lambda(Site::Infinity, i)] = 1;
    m[Symbol::psi(Site::Infinity)] = g + j - i;  // always >= j >= 1
    out.add_term(m, Rational(((i + j) % 2 == 0) ? 1 : -1));
  }
  return out;
}

// Coefficient of t^{-3-j} in the F_h contribution (1 <= h <= g): a sum over
// all (j1, k1, j2, k2) with j1 <= h, j2 <= g-h, j1+k1+j2+k2 = g+j-1, with
// sign (-1)^{j1 + (g-h) + k2}.
inline SymbolicPoly fh_coefficient(int g, int h, int j) {
  SymbolicPoly out;
  int total = g + j - 1;
  for (int j1 = 0; j1 <= h; ++j1) {
    for (int j2 = 0; j2 <= g - h; ++j2) {
      for (int k1 = 0; j1 + k1 + j2 <= total; ++k1) {
        int k2 = total - j1 - k1 - j2;
        Monomial m;
        if (j1 >= 1) m[Symbol::lambda(Site::Zero, j1)] = 1;
        if (k1 >= 1) m[Symbol::psi(Site::Zero)] = k1;
        if (j2 >= 1) m[Symbol::lambda(Site::Infinity, j2)] = 1;
        if (k2 >= 1) m[Symbol::psi(Site::Infinity)] = k2;
        int sign = ((j1 + (g - h) + k2) % 2 == 0) ? 1 : -1;
        out.add_term(m, Rational(sign));
      }
    }
  }
  return out;
}

}  // namespace oracles
