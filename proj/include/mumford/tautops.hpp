#pragma once

#include <map>

#include "mumford/tautclass.hpp"

namespace mumford {

/*
 * Boundary gluing: joins the left factor's designated marked leg to the
 * right factor's designated marked leg by a new node edge. Coefficients
 * multiply; codimension goes up by exactly one beyond the sum.
 */
TautClass glue_pushforward(const TautClass& left, int left_node_marking,
                           const TautClass& right, int right_node_marking,
                           const Ambient& target);

// Multiplies by the psi class at a marked point. On a term whose marked
// point sits on a genus-0 three-legged vertex the product is zero (the
// moduli factor is a point); the dimension rule handles that.
TautClass psi_multiply(const TautClass& c, int marking);

/*
 * Pushforward along the map forgetting one marked point. Supported shapes,
 * per term, looking at the forgotten point's vertex:
 *
 *   psi_p^0  - string rule: sum over the psi powers and Mumford factors on
 *              the vertex, each lowered by one; a term with nothing to
 *              lower pushes to zero. If the vertex is a bare genus-0
 *              three-legged bubble, it contracts instead (the map is an
 *              isomorphism there).
 *   psi_p^1  - dilaton rule: scalar factor 2*genus - 2 + n with n the leg
 *              count after forgetting.
 *   psi_p^b, b >= 2 - kappa rule: psi_p^b becomes kappa_{b-1}, valid only
 *              with no other psi on the vertex.
 *
 * Anything else throws "unsupported pushforward shape"; nothing is silently
 * approximated.
 */
TautClass forget_pushforward(const TautClass& c, int marking);

/*
 * Pullback along the map forgetting `new_marking`: distributes the new leg
 * over the vertices of each term. On the receiving vertex every psi power
 * psi_r^m picks up the comparison correction
 *     psi_r^m  ->  psi_r^m - psi_c^{m-1} D_{pr},
 * where D_{pr} is the stratum with p and r bubbled off on a genus-0
 * three-legged vertex, and Mumford factors correct the same way with the
 * degree dropping by one. Corrections at two different legs never interact
 * (D_{pr} D_{ps} = 0). Lambda factors pull back untouched; kappa input is
 * rejected.
 */
TautClass forget_pullback(const TautClass& c, int new_marking);

// Count of comparison corrections that a dilaton/kappa pushforward step
// would generate if materialized, together with how many of them are the
// zero class. Every correction carries psi at a point of a genus-0
// three-legged bubble, so vanished == generated; the replay uses this as a
// mechanical certificate that the uncorrected rules were exact.
struct CorrectionAudit {
  long generated = 0;
  long vanished = 0;
};
CorrectionAudit audit_pushforward_corrections(const TautClass& c, int marking);

/*
 * Replaces one vertex of a host stratum by a local class living on
 * (vertex genus, local marking labels). Each local marked leg is identified
 * with the host leg given by the mapping; everything else in the host is
 * untouched. The host vertex's decorations must already be consumed.
 */
TautClass splice_vertex(const Ambient& ambient, const DecoratedStratum& host,
                        const Rational& coeff, int vertex,
                        const std::map<int, int>& local_marking_to_host_leg,
                        const TautClass& local);

/*
 * The two-pointed comparison rewrite for a reducible Mumford factor on a
 * two-legged vertex (p, q):
 *
 *   M_q(d) = pullback_p(M(d) on the one-legged vertex) + D_{pq} M_node(d-1)
 *
 * with an optional psi_q^a absorbed into the degree (valid since d >= genus)
 * and an optional psi_p^b multiplying through, which kills the bubble term
 * (psi_p restricts to zero on the bubble). The caller supplies the boundary
 * expansion of the one-legged factor, i.e. a class on (genus, {q}) equal to
 * M(a + d); the rewrite splices its pullback into the host.
 */
TautClass comparison_rewrite(const Ambient& ambient, const DecoratedStratum& host,
                             const Rational& coeff, int vertex, int leg_p, int leg_q,
                             int degree, int psi_p_exp,
                             const TautClass& one_legged_expansion);

}  // namespace mumford
