#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mumford/builders.hpp"
#include "mumford/tautclass.hpp"

namespace mumford {

struct StratumAnalysis {
  Rational coeff;
  long automorphisms = 1;
  int marked_vertex_genus = 0;
  bool marked_on_genus0 = false;
  bool has_genus0_vertex = false;
  bool terminal_factors = true;  // no reducible Mumford factor
  bool integral_raw = false;
  // Integrality after absorbing the automorphism factor: the gluing
  // parametrization covers its image stratum with degree |Aut|, so the
  // image-cycle coefficient is coeff * |Aut|.
  bool integral_aut = false;
  int vertices = 0;
  int edges = 0;
  std::string shape;  // genera along the tree, marked vertex starred
};

struct ExpansionReport {
  int genus = 0;
  long steps = 0;
  bool fixpoint = true;  // false when the step budget ran out
  TautClass normal_form;
  std::vector<StratumAnalysis> strata;

  long non_integral_raw = 0;
  long non_integral_aut = 0;
  bool all_marked_on_genus0 = true;
  bool all_terminal_factors = true;
  bool all_have_genus0 = true;
  std::map<std::string, int> shape_counts;
};

// Per-stratum and summary analysis of a (partially) expanded class.
ExpansionReport analyze_expansion(const TautClass& c, int genus, long steps, bool fixpoint);
std::string summarize(const ExpansionReport& report);

struct ExpandBudgetExceeded : std::runtime_error {
  ExpandBudgetExceeded(std::string what, TautClass partial_state, long steps_done)
      : std::runtime_error(std::move(what)),
        partial(std::move(partial_state)),
        steps(steps_done) {}
  TautClass partial;
  long steps;
};

/*
 * The recursive simplifier. A site is a truncated Mumford factor of degree
 * >= its host vertex genus >= 1. One step rewrites the first site in
 * canonical order:
 *
 *   E1 (one-legged vertex): the factor, together with any psi power at the
 *       same leg, is the degree-D Mumford-type class of the vertex, which
 *       equals the boundary formula at degree D; splice that formula in.
 *   E2 (two-legged vertex): the comparison rewrite; the pullback part uses
 *       the fully normalized boundary formula so the new point never lands
 *       on a vertex with a reducible factor.
 *
 * Iteration terminates: each step replaces a site by sites that are
 * strictly smaller in the multiset order on (host genus, degree), which the
 * engine asserts at every step. Normal forms carry only irreducible
 * factors.
 */
class Expander {
 public:
  enum class SiteOrder { Canonical, ReverseCanonical };

  explicit Expander(long max_steps = 1000000,
                    SiteOrder order = SiteOrder::Canonical)
      : max_steps_(max_steps), order_(order) {}

  // One rewrite; second element reports whether a site was found.
  std::pair<TautClass, bool> expand_step(const TautClass& c);

  // Iterates expand_step to the fixpoint.
  TautClass normalize(const TautClass& c);

  // Normal form of the boundary formula itself, memoized per (genus, degree).
  TautClass normalized_boundary_formula(int genus, int degree);

  // Full pipeline for the 1-pointed genus-g Mumford class.
  ExpansionReport expand_full(int g);

  long steps() const { return steps_; }

 private:
  long max_steps_;
  SiteOrder order_;
  long steps_ = 0;
  std::map<std::pair<int, int>, TautClass> memo_;
};

}  // namespace mumford
