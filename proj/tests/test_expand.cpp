#include <doctest.h>

#include "mumford/expand.hpp"
#include "mumford/tautops.hpp"

using namespace mumford;

namespace {

// The expected genus-2 normal form: genus-1 -- genus-0(marked) -- genus-1.
TautClass genus2_chain(const Rational& coeff) {
  TautClass c(Ambient{2, {1}});
  StratumBuilder b;
  int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(1);
  b.add_marking(m, 1);
  b.add_edge(l, m);
  b.add_edge(m, r);
  c.add(b.finish(2, {1}), coeff);
  return c;
}

}  // namespace

TEST_CASE("expand_step: the genus-1 Mumford class rewrites to zero") {
  Expander ex;
  auto [out, progressed] = ex.expand_step(mumford_lhs(1));
  CHECK(progressed);
  CHECK(out.is_zero());
  // A second step finds nothing.
  auto [out2, progressed2] = ex.expand_step(out);
  CHECK(!progressed2);
  CHECK(out2.is_zero());
}

TEST_CASE("expand_step: genus 2 reaches the chain in two steps") {
  Expander ex;
  TautClass c = boundary_formula(2);
  auto [s1, p1] = ex.expand_step(c);
  CHECK(p1);
  auto [s2, p2] = ex.expand_step(s1);
  CHECK(p2);
  auto [s3, p3] = ex.expand_step(s2);
  CHECK(!p3);
  CHECK(s3 == genus2_chain(Rational(1, 2)));
}

TEST_CASE("expand_full genus 1: empty normal form") {
  Expander ex;
  ExpansionReport rep = ex.expand_full(1);
  CHECK(rep.fixpoint);
  CHECK(rep.normal_form.is_zero());
  CHECK(rep.steps == 0);
}

TEST_CASE("expand_full genus 2: one chain stratum, coefficient 1/2, |Aut| 2") {
  Expander ex;
  ExpansionReport rep = ex.expand_full(2);
  CHECK(rep.fixpoint);
  CHECK(rep.normal_form == genus2_chain(Rational(1, 2)));
  REQUIRE(rep.strata.size() == 1);
  CHECK(rep.strata[0].coeff == Rational(1, 2));
  CHECK(rep.strata[0].automorphisms == 2);
  CHECK(rep.strata[0].marked_on_genus0);
  CHECK(rep.strata[0].terminal_factors);
  CHECK(!rep.strata[0].integral_raw);
  CHECK(rep.strata[0].integral_aut);  // (1/2) * 2 = 1
  CHECK(rep.all_marked_on_genus0);
}

TEST_CASE("expand_full genus 3: chain plus star, hand-checked coefficients") {
  Expander ex;
  ExpansionReport rep = ex.expand_full(3);
  CHECK(rep.fixpoint);
  CHECK(rep.all_marked_on_genus0);
  CHECK(rep.all_terminal_factors);
  CHECK(rep.all_have_genus0);
  REQUIRE(rep.strata.size() == 2);

  // Chain: genus-1 -- genus-0(marked) -- genus-2 with (psi - lambda1) at
  // the genus-2 node branch; coefficient 1 after the two tracks combine.
  TautClass chain(Ambient{3, {1}});
  {
    StratumBuilder b;
    int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(2);
    b.add_marking(m, 1);
    b.add_edge(l, m);
    auto [mid, on_r] = b.add_edge(m, r);
    (void)mid;
    b.decorate(r, MumfordFactor{on_r, 1});
    chain.add(b.finish(3, {1}), Rational(1));
  }
  // Star: marked genus-0 center with three genus-1 branches, coefficient 1/6.
  TautClass star(Ambient{3, {1}});
  {
    StratumBuilder b;
    int m = b.add_vertex(0);
    b.add_marking(m, 1);
    for (int i = 0; i < 3; ++i) {
      int leaf = b.add_vertex(1);
      b.add_edge(m, leaf);
    }
    star.add(b.finish(3, {1}), Rational(1, 6));
  }
  CHECK(rep.normal_form == chain + star);
  for (const auto& a : rep.strata) {
    if (a.shape == "0*-1-1-1") {
      CHECK(a.coeff == Rational(1, 6));
      CHECK(a.automorphisms == 6);
      CHECK(a.integral_aut);  // (1/6) * 6 = 1
    }
  }
}

TEST_CASE("expand_full genus 4: structural conformance") {
  Expander ex;
  ExpansionReport rep = ex.expand_full(4);
  CHECK(rep.fixpoint);
  CHECK(rep.all_marked_on_genus0);
  CHECK(rep.all_terminal_factors);
  CHECK(rep.all_have_genus0);
  CHECK(!rep.normal_form.is_zero());
  CHECK(rep.normal_form.homogeneous_codimension() == 4);
}

TEST_CASE("confluence: canonical and reverse site orders agree for g <= 3") {
  for (int g = 1; g <= 3; ++g) {
    Expander a(1000000, Expander::SiteOrder::Canonical);
    Expander b(1000000, Expander::SiteOrder::ReverseCanonical);
    CHECK(a.normalize(boundary_formula(g)) == b.normalize(boundary_formula(g)));
  }
}

TEST_CASE("idempotence: normal forms are fixed points") {
  Expander ex;
  TautClass nf = ex.normalize(boundary_formula(3));
  auto [again, progressed] = ex.expand_step(nf);
  CHECK(!progressed);
  CHECK(again == nf);
  CHECK(ex.normalize(nf) == nf);
}

TEST_CASE("budget exhaustion raises with partial state") {
  Expander ex(1);  // one step only
  CHECK_THROWS_AS(ex.normalize(boundary_formula(3)), ExpandBudgetExceeded);
  Expander ex2(2);
  try {
    ex2.normalize(boundary_formula(3));
    FAIL("expected budget exception");
  } catch (const ExpandBudgetExceeded& e) {
    CHECK(e.steps == 2);
    CHECK(!e.partial.is_zero());
  }
}

TEST_CASE("expansion preserves codimension homogeneity") {
  Expander ex;
  TautClass c = boundary_formula(3);
  bool progressed = true;
  while (progressed) {
    CHECK((c.is_zero() || c.homogeneous_codimension() == 3));
    std::tie(c, progressed) = ex.expand_step(c);
  }
}

TEST_CASE("interior Mumford classes rewrite to pure boundary") {
  // The expansion of psi^2 - lambda1 psi + lambda2 on the open part: every
  // normal-form stratum has at least one edge.
  Expander ex;
  TautClass nf = ex.normalize(mumford_lhs(2));
  CHECK(nf == genus2_chain(Rational(1, 2)));
}
