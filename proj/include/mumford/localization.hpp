#pragma once

#include <vector>

#include "mumford/builders.hpp"
#include "mumford/laurent.hpp"
#include "mumford/tautclass.hpp"
#include "mumford/tautops.hpp"

namespace mumford {

/*
 * One torus-fixed locus of the degree-1 stable-map space over the line,
 * restricted over the fixed point configuration (0, inf, inf). h = 0 is the
 * locus with the whole genus-g curve at infinity; 1 <= h <= g puts genus h
 * at 0 and genus g-h at infinity. There are exactly g+1 of them.
 */
struct FixedLocus {
  int g = 1;
  int h = 0;  // 0 means F_0
  int genus_at_zero() const { return h == 0 ? 0 : h; }
  int genus_at_infinity() const { return h == 0 ? g : g - h; }
};

std::vector<FixedLocus> enumerate_fixed_loci(int g);

// Default truncation floor for genus-g runs: deep enough that every
// extraction at t^{-4} and t^{-3-j}, j <= 3, is exact.
inline int default_window_lo(int g) { return -(g + 6); }

/*
 * The equivariant Euler-inverse contribution of one fixed locus as an exact
 * truncated Laurent series:
 *   F_0:  (1/t) (-1)^g (t^g + lambda_1 t^{g-1} + ... + lambda_g)
 *            / (-t (-t - psi_inf))
 *   F_h:  (t^h - lambda^0_1 t^{h-1} + ... +- lambda^0_h) / (t (t - psi_0))
 *         * (-1)^{g-h} (t^{g-h} + ... + lambda^inf_{g-h}) / (-t (-t - psi_inf))
 */
LaurentSeries fixed_locus_contribution(const FixedLocus& locus, int window_lo);
LaurentSeries fixed_locus_contribution(const FixedLocus& locus);

// Checks that the t^{-4} coefficient of the F_h series equals the double
// sum c'_h as a symbolic polynomial (F_0 against its closed form). Residual
// details go into the notes.
RelationReport verify_cprime(int g, int h);

/*
 * Full symbolic replay of the localization proof at the t^{-3-j}
 * coefficient (j = 1 gives the principal boundary formula):
 *
 *   stage 0: extract per-locus coefficients, normalize by (-1)^{j-1}, and
 *            promote them to boundary classes of the 3-pointed space;
 *   stage 1: multiply by psi_3 and push forward (dilaton factors 2g and
 *            2(g-h); the h = g branch dies at the psi_3 step);
 *   stage 2: push forward forgetting point 2 (string; exponents drop by 1);
 *   final:   the assembled identity must equal
 *            -2g M(D) + sum_h 2(g-h) iota_h(c_h^{(D)}),  D = g + j - 1,
 *            i.e. 2g (boundary formula - Mumford class) at degree D.
 *
 * Every intermediate is checked against its closed form; the geometric
 * input "the coefficients of the pushed-forward polynomial sum to zero" is
 * an axiom of the replay, not something the engine proves. The report also
 * certifies that the comparison corrections skipped by the dilaton steps
 * are identically zero (psi at a point of a three-legged genus-0 bubble).
 */
RelationReport replay_derivation(int g);
RelationReport higher_coefficient_extract(int g, int j);

// Promotions from extracted coefficient polynomials to boundary classes.
// F_0 lives on one genus-g vertex with psi_inf identified with psi at the
// first marked point; F_h glues (h | g-h) with points 2, 3 at infinity.
TautClass f0_coefficient_class(int g, const SymbolicPoly& coeff,
                               const std::vector<int>& markings);
TautClass fh_coefficient_class(int g, int h, const SymbolicPoly& coeff,
                               const std::vector<int>& markings);

}  // namespace mumford
