#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mumford/symbolic.hpp"
#include "mumford/tautclass.hpp"

namespace mumford {

// Marking label conventions used by the builders: 0 is the node-to-be on a
// gluing factor, 1 is the surviving marked point, 2 and 3 are the extra
// points of the three-pointed localization ambient.
inline constexpr int kNodeMarking = 0;

/*
 * One bidegree component of the double sums c_h / c'_h: a sign together
 * with the degrees of the truncated Mumford factors on the genus-h side
 * (psi_0) and the genus-(g-h) side (psi_inf).
 */
struct FactorPair {
  Rational coeff;
  int deg0 = 0;
  int deginf = 0;
};

// Boundary-formula coefficients at degree D (the principal case is D = g):
//   c_h^{(D)} = sum_{i=0}^{D-1} (-1)^{h+i} M_0(i) (x) M_inf(D-1-i).
// The list is the formal double sum; no dimension truncation here.
std::vector<FactorPair> c_terms(int g, int h, int degree);

// Localization-side coefficients at degree D (the t^{-4} case is D = g):
//   c'_h^{(D)} = sum_{i=0}^{D} (-1)^{h+i} M_0(i) (x) M_inf(D-i).
std::vector<FactorPair> c_prime_terms(int g, int h, int degree);

// Expands a term list into a polynomial over the psi_0/psi_inf alphabet.
SymbolicPoly pair_sum_poly(int g, int h, const std::vector<FactorPair>& terms);

// Applies the psi_inf-lowering of the string equation to a term list
// (used to check that c is exactly c' lowered).
SymbolicPoly lower_psi_inf(const SymbolicPoly& p);

/*
 * The Mumford-type class psi^D - lambda_1 psi^{D-1} + ... as a one-vertex
 * class on the 1-pointed genus-g space, kept as a truncated Mumford factor.
 * degree defaults to g.
 */
TautClass mumford_lhs(int g);
TautClass mumford_lhs_general(int g, int degree);

// iota_h(c_h^{(D)}) in the 1-pointed genus-g space. Dimension-vanishing
// bidegrees drop out when the strata are materialized.
TautClass glue_c(int g, int h, int degree);

/*
 * The boundary formula sum_{h=1}^{g-1} (1 - h/g) iota_h(c_h^{(D)}). For
 * D = g this is the right side of the recursive formula for the Mumford
 * class; higher D gives the t^{-3-j} family with D = g + j - 1. The h = g
 * summand is omitted: its weight vanishes and its right factor would be
 * unstable.
 */
TautClass boundary_formula(int g);
TautClass mumford_boundary_formula(int g, int degree);

// iota_h(c'_h) glued into the 3-pointed ambient (marked point on the
// genus-h side, points 2 and 3 on the genus-(g-h) side). h = g is allowed
// here: the right factor is the 3-marked genus-0 vertex.
TautClass glue_c_prime_3pt(int g, int h, int degree);

/*
 * Outcome of checking (or just assembling) one relation. For checked
 * relations ok == residual.is_zero(); report-only relations set
 * checked = false and leave residual empty.
 */
struct RelationReport {
  std::string variant;
  int genus = 0;
  int h = 0;
  int j = 0;
  bool checked = true;
  bool ok = true;
  TautClass lhs, rhs, residual;
  std::vector<std::string> notes;
};

// Remark-family relation: the boundary formula at degree g + j - 1 equals
// the Mumford-type class of that degree. Verified by replaying the
// localization pipeline at the matching coefficient.
RelationReport degree_family_relation(int g, int j);

/*
 * The second tautological relation on the 1-pointed space:
 *   sum_{h=1}^{g-1} (2h) iota_h(c_h) + (2g) pi_*(psi_2^{g+1} - ...) = 0,
 * with the pushforward realized by the kappa rule. The engine assembles the
 * left side and checks degree homogeneity; it does not prove the relation.
 * The combination (replay LHS + this LHS)/2g is checked exactly against
 * sum_h iota_h(c_h) + pi_*(...) - M(g), which it must equal identically.
 */
RelationReport kappa_relation(int g);

// The kappa-class image pi_*(psi_2^{g+1} - lambda_1 psi_2^g + ...) used by
// kappa_relation; exposed for tests.
TautClass kappa_pushforward_class(int g);

}  // namespace mumford
