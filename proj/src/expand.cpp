#include "mumford/expand.hpp"

#include <algorithm>
#include <sstream>

#include "mumford/tautops.hpp"

namespace mumford {

namespace {

struct Site {
  std::string key;  // term key
  int vertex = -1;
  int factor_index = -1;
  int genus = 0;
  int degree = 0;  // Mumford degree, psi at the same leg not yet absorbed
};

std::optional<Site> find_site_in_term(const std::string& key, const TautClass::Term& t) {
  const DecoratedStratum& s = t.stratum;
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    int genus = s.vertices[v].genus;
    if (genus < 1) continue;
    for (size_t fi = 0; fi < s.decorations[v].size(); ++fi) {
      const auto* m = std::get_if<MumfordFactor>(&s.decorations[v][fi]);
      if (m && m->degree >= genus)
        return Site{key, static_cast<int>(v), static_cast<int>(fi), genus, m->degree};
    }
  }
  return std::nullopt;
}

std::optional<Site> find_site(const TautClass& c, Expander::SiteOrder order) {
  if (order == Expander::SiteOrder::Canonical) {
    for (const auto& [key, t] : c.terms())
      if (auto site = find_site_in_term(key, t)) return site;
  } else {
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
      if (auto site = find_site_in_term(it->first, it->second)) return site;
  }
  return std::nullopt;
}

// The termination measure: (host genus, factor degree) over all sites,
// sorted descending. Steps must strictly decrease it in the multiset order,
// which for totally ordered elements is the lexicographic order on these
// sorted sequences.
std::vector<std::pair<int, int>> measure(const TautClass& c) {
  std::vector<std::pair<int, int>> m;
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    const DecoratedStratum& s = t.stratum;
    for (size_t v = 0; v < s.vertices.size(); ++v) {
      int genus = s.vertices[v].genus;
      if (genus < 1) continue;
      for (const auto& f : s.decorations[v]) {
        const auto* mf = std::get_if<MumfordFactor>(&f);
        if (mf && mf->degree >= genus) m.push_back({genus, mf->degree});
      }
    }
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

bool measure_less(const std::vector<std::pair<int, int>>& a,
                  const std::vector<std::pair<int, int>>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::pair<TautClass, bool> Expander::expand_step(const TautClass& c) {
  auto site = find_site(c, order_);
  if (!site) return {c, false};
  if (steps_ >= max_steps_)
    throw ExpandBudgetExceeded("expansion step budget exceeded", c, steps_);
  ++steps_;

  const TautClass::Term& term = c.terms().at(site->key);
  const DecoratedStratum& s = term.stratum;
  int v = site->vertex;
  int genus = site->genus;
  const auto* mf = std::get_if<MumfordFactor>(&s.decorations[v][site->factor_index]);
  int leg_q = mf->leg;

  // Classify the remaining decorations on the vertex: a psi power at the
  // factor leg is absorbed into the degree, a psi power at the other leg of
  // a two-legged vertex rides along. Anything else has no rewrite rule.
  int absorbed = 0, psi_p = 0, leg_p = -1;
  for (int l : s.vertices[v].legs)
    if (l != leg_q) leg_p = l;
  for (size_t fi = 0; fi < s.decorations[v].size(); ++fi) {
    if (fi == static_cast<size_t>(site->factor_index)) continue;
    const auto& f = s.decorations[v][fi];
    if (const auto* p = std::get_if<PsiPow>(&f)) {
      if (p->leg == leg_q)
        absorbed = p->exp;
      else if (p->leg == leg_p)
        psi_p = p->exp;
      else
        throw std::logic_error("expand_step: psi power on an unexpected leg");
    } else {
      throw std::logic_error("expand_step: no rewrite rule for decoration " +
                             factor_to_string(f) + " next to a reducible factor");
    }
  }
  int degree = site->degree + absorbed;

  TautClass rest(c.ambient());
  for (const auto& [key, t] : c.terms())
    if (key != site->key)
      rest.add_canonical(CanonicalForm{key, t.automorphisms, t.stratum}, t.coeff);

  TautClass rewritten(c.ambient());
  size_t nlegs = s.vertices[v].legs.size();
  if (nlegs == 1) {
    // E1: the one-legged factor is the boundary formula at its total degree.
    DecoratedStratum stripped = s;
    stripped.decorations[v].clear();
    rewritten = splice_vertex(c.ambient(), stripped, term.coeff, v, {{1, leg_q}},
                              mumford_boundary_formula(genus, degree));
  } else if (nlegs == 2) {
    DecoratedStratum stripped = s;
    stripped.decorations[v].clear();
    rewritten = comparison_rewrite(c.ambient(), stripped, term.coeff, v, leg_p, leg_q,
                                   degree, psi_p,
                                   normalized_boundary_formula(genus, degree));
  } else {
    throw std::logic_error("expand_step: reducible factor on a vertex with " +
                           std::to_string(nlegs) + " legs");
  }

  TautClass result = rest + rewritten;
  if (!measure_less(measure(result), measure(c)))
    throw std::logic_error("expand_step: termination measure failed to decrease");
  return {result, true};
}

TautClass Expander::normalize(const TautClass& c) {
  TautClass current = c;
  while (true) {
    auto [next, progressed] = expand_step(current);
    if (!progressed) return next;
    current = std::move(next);
  }
}

TautClass Expander::normalized_boundary_formula(int genus, int degree) {
  auto key = std::make_pair(genus, degree);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  TautClass nf = normalize(mumford_boundary_formula(genus, degree));
  memo_.emplace(key, nf);
  return nf;
}

ExpansionReport Expander::expand_full(int g) {
  TautClass start = boundary_formula(g);
  try {
    TautClass nf = normalize(start);
    return analyze_expansion(nf, g, steps_, true);
  } catch (const ExpandBudgetExceeded& e) {
    ExpansionReport partial = analyze_expansion(e.partial, g, e.steps, false);
    return partial;
  }
}

ExpansionReport analyze_expansion(const TautClass& c, int genus, long steps,
                                  bool fixpoint) {
  ExpansionReport rep;
  rep.genus = genus;
  rep.steps = steps;
  rep.fixpoint = fixpoint;
  rep.normal_form = c;
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    StratumAnalysis a;
    a.coeff = t.coeff;
    a.automorphisms = t.automorphisms;
    a.vertices = static_cast<int>(t.stratum.vertices.size());
    a.edges = static_cast<int>(t.stratum.edges.size());
    int marked_leg = t.stratum.markings.at(1);
    int mv = t.stratum.vertex_of_leg(marked_leg);
    a.marked_vertex_genus = t.stratum.vertices[mv].genus;
    a.marked_on_genus0 = (a.marked_vertex_genus == 0);
    for (size_t v = 0; v < t.stratum.vertices.size(); ++v) {
      if (t.stratum.vertices[v].genus == 0) a.has_genus0_vertex = true;
      for (const auto& f : t.stratum.decorations[v]) {
        const auto* mf = std::get_if<MumfordFactor>(&f);
        if (mf && mf->degree >= t.stratum.vertices[v].genus) a.terminal_factors = false;
      }
    }
    a.integral_raw = t.coeff.is_integer();
    a.integral_aut = (t.coeff * Rational(t.automorphisms)).is_integer();
    std::ostringstream shape;
    for (size_t v = 0; v < t.stratum.vertices.size(); ++v) {
      if (v) shape << "-";
      shape << t.stratum.vertices[v].genus;
      if (static_cast<int>(v) == mv) shape << "*";
    }
    a.shape = shape.str();

    rep.strata.push_back(a);
    if (!a.integral_raw) ++rep.non_integral_raw;
    if (!a.integral_aut) ++rep.non_integral_aut;
    rep.all_marked_on_genus0 = rep.all_marked_on_genus0 && a.marked_on_genus0;
    rep.all_terminal_factors = rep.all_terminal_factors && a.terminal_factors;
    rep.all_have_genus0 = rep.all_have_genus0 && a.has_genus0_vertex;
    ++rep.shape_counts[a.shape];
  }
  return rep;
}

std::string summarize(const ExpansionReport& rep) {
  std::ostringstream os;
  os << "genus " << rep.genus << ": " << rep.strata.size() << " stratum(s), "
     << rep.steps << " step(s), " << (rep.fixpoint ? "normal form" : "BUDGET EXCEEDED")
     << "\n";
  os << "  marked point on genus-0 vertex in all strata: "
     << (rep.all_marked_on_genus0 ? "yes" : "no") << "\n";
  os << "  only terminal (degree < genus) factors:       "
     << (rep.all_terminal_factors ? "yes" : "no") << "\n";
  os << "  genus-0 vertex present in all strata:         "
     << (rep.all_have_genus0 ? "yes" : "no") << "\n";
  os << "  non-integer coefficients: " << rep.non_integral_raw << " raw, "
     << rep.non_integral_aut << " after absorbing |Aut|\n";
  for (const auto& [shape, count] : rep.shape_counts)
    os << "  shape " << shape << ": " << count << " stratum(s)\n";
  return os.str();
}

}  // namespace mumford
