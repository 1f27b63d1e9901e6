// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// hard criterion fails. Criterion 7 is observational and never fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "mumford/expand.hpp"
#include "mumford/localization.hpp"
#include "mumford/serialize.hpp"
#include "mumford/tautops.hpp"
#include "fuzz_helpers.hpp"

using namespace mumford;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(clock::now()) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      details_.push_back(what);
    }
  }

  void note(const std::string& what) { notes_.push_back(what); }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_)
                  .count();
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << number_ << " [" << ms
              << " ms]: " << title_ << "\n";
    for (const auto& d : details_) std::cout << "       failed: " << d << "\n";
    for (const auto& n : notes_) std::cout << "       note: " << n << "\n";
    if (!ok_) ++failures;
  }

 private:
  using clock = std::chrono::steady_clock;
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
  clock::time_point start_;
};

}  // namespace

// 1. Degenerate base case: the genus-1 boundary formula is empty and the
//    relation renders as "psi - lambda1 = 0".
static void criterion1() {
  Criterion c(1, "genus-1 base case");
  c.require(boundary_formula(1).is_zero(), "boundary_formula(1) empty");
  c.require(Rational(1) - Rational(1, 1) == Rational(0), "weight 1 - h/g vanishes at h = g = 1");
  c.require(relation_to_text(mumford_lhs(1), boundary_formula(1)) == "ψ − λ1 = 0",
            "text rendering of the genus-1 relation");
}

// 2. Coefficient-extraction oracle at t^{-4} for every locus, g <= 6.
static void criterion2() {
  Criterion c(2, "t^{-4} coefficients equal c'_h and the F_0 closed form, g <= 6");
  for (int g = 1; g <= 6; ++g) {
    SymbolicPoly f0 = fixed_locus_contribution(FixedLocus{g, 0}).coefficient(-4);
    c.require(f0 == truncated_mumford_poly(Site::Infinity, g, g + 1).scaled(Rational(-1)),
              "F_0 closed form at g = " + std::to_string(g));
    for (int h = 1; h <= g; ++h)
      c.require(verify_cprime(g, h).ok,
                "c' at g = " + std::to_string(g) + ", h = " + std::to_string(h));
  }
}

// 3. String-lowering identity c = c' with psi_inf lowered, g <= 6.
static void criterion3() {
  Criterion c(3, "string lowering turns c' into c, g <= 6");
  for (int g = 1; g <= 6; ++g)
    for (int h = 1; h <= g; ++h)
      c.require(lower_psi_inf(pair_sum_poly(g, h, c_prime_terms(g, h, g))) ==
                    pair_sum_poly(g, h, c_terms(g, h, g)),
                "g = " + std::to_string(g) + ", h = " + std::to_string(h));
}

// 4. Derivation replay for g <= 6 with all intermediate checks.
static void criterion4() {
  Criterion c(4, "localization replay reproduces the recursive formula, g <= 6");
  for (int g = 1; g <= 6; ++g) {
    RelationReport rep = replay_derivation(g);
    c.require(rep.ok && rep.residual.is_zero(), "replay at g = " + std::to_string(g));
    if (!rep.ok)
      for (const auto& n : rep.notes)
        if (n.rfind("MISMATCH", 0) == 0) c.note("g=" + std::to_string(g) + " " + n);
  }
}

// 5. Higher-coefficient extraction, g <= 4, j <= 3; j = 1 replays criterion 4.
static void criterion5() {
  Criterion c(5, "t^{-3-j} extractions give the degree-(g+j-1) family, g <= 4, j <= 3");
  for (int g = 1; g <= 4; ++g) {
    for (int j = 1; j <= 3; ++j) {
      RelationReport rep = higher_coefficient_extract(g, j);
      c.require(rep.ok, "g = " + std::to_string(g) + ", j = " + std::to_string(j));
    }
    RelationReport base = replay_derivation(g);
    RelationReport j1 = higher_coefficient_extract(g, 1);
    c.require(j1.lhs == base.lhs && j1.rhs == base.rhs,
              "j = 1 coincides with the replay at g = " + std::to_string(g));
  }
}

// 6. Expansion: termination for g <= 5, structure for g <= 4, exact genus-2
//    normal form.
static void criterion6() {
  Criterion c(6, "recursive expansion terminates; g <= 4 normal forms are terminal");
  for (int g = 1; g <= 5; ++g) {
    Expander ex(1000000);
    ExpansionReport rep = ex.expand_full(g);
    c.require(rep.fixpoint, "fixpoint within budget at g = " + std::to_string(g));
    c.require(rep.all_terminal_factors,
              "no reducible factor in the normal form at g = " + std::to_string(g));
    if (g >= 2)
      c.require(rep.all_have_genus0,
                "genus-0 vertex in every stratum at g = " + std::to_string(g));
    if (g <= 4)
      c.require(rep.all_marked_on_genus0,
                "marked point on genus-0 at g = " + std::to_string(g));
    if (g == 2) {
      TautClass chain(Ambient{2, {1}});
      StratumBuilder b;
      int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(1);
      b.add_marking(m, 1);
      b.add_edge(l, m);
      b.add_edge(m, r);
      chain.add(b.finish(2, {1}), Rational(1, 2));
      c.require(rep.normal_form == chain,
                "genus-2 normal form is the 1-0-1 chain with coefficient 1/2");
      c.require(rep.strata.size() == 1 && rep.strata[0].automorphisms == 2,
                "genus-2 chain has automorphism order 2");
    }
  }
}

// 7. Genus-5 integrality observation: report only, never failing.
static void criterion7() {
  Criterion c(7, "genus-5 integrality summary (report-only)");
  Expander ex(1000000);
  ExpansionReport rep = ex.expand_full(5);
  c.require(rep.fixpoint, "genus-5 expansion terminates");
  std::ostringstream os;
  os << rep.strata.size() << " strata, " << rep.non_integral_raw
     << " non-integer raw coefficients, " << rep.non_integral_aut
     << " still non-integer after absorbing |Aut|";
  c.note(os.str());
  c.note(rep.non_integral_aut > 0
             ? "non-integer coefficients do appear at genus 5, as expected"
             : "no non-integer coefficients observed (recorded, not asserted)");
}

// 8. Kernel properties: canonicalization fuzz, degree laws, linearity,
//    projection-formula round trips, window stability, JSON round trips.
static void criterion8() {
  Criterion c(8, "kernel property batteries");

  // Canonicalization fuzz: 1000 random strata, each relabeled at random;
  // keys and automorphism counts must agree.
  {
    std::mt19937 rng(8675309);
    for (int iter = 0; iter < 1000; ++iter) {
      DecoratedStratum s = fuzz::random_stratum(rng);
      CanonicalForm a = canonical_form(s);
      CanonicalForm b = canonical_form(fuzz::shuffled_copy(s, rng));
      if (a.key != b.key || a.automorphisms != b.automorphisms) {
        c.require(false, "canonical fuzz instability at iteration " + std::to_string(iter));
        break;
      }
    }
    c.note("canonical fuzz on 1000 random relabeled strata");
  }

  // Degree laws on the glued builders.
  for (int g = 2; g <= 4; ++g)
    for (int h = 1; h <= g - 1; ++h) {
      TautClass glued = glue_c(g, h, g);
      c.require(glued.is_zero() || glued.homogeneous_codimension() == g,
                "glue degree law at g = " + std::to_string(g));
    }
  {
    TautClass base = boundary_formula(3);
    TautClass pulled = forget_pullback(base, 2);
    c.require(pulled.homogeneous_codimension() == 3, "pullback preserves degree");
    c.require(psi_multiply(pulled, 2).homogeneous_codimension() == 4,
              "psi multiplication raises degree by one");
    c.require(forget_pushforward(psi_multiply(pulled, 2), 2).homogeneous_codimension() == 3,
              "pushforward lowers degree by one");
  }

  // Projection-formula round trips, g <= 3.
  for (int g = 2; g <= 3; ++g) {
    TautClass base = boundary_formula(g);
    TautClass pulled = forget_pullback(base, 2);
    c.require(forget_pushforward(pulled, 2).is_zero(),
              "pi_* pi^* = 0 at g = " + std::to_string(g));
    TautClass weighted = forget_pushforward(psi_multiply(pulled, 2), 2);
    c.require(weighted == base.scaled(Rational(2 * g - 1)),
              "psi-weighted round trip at g = " + std::to_string(g));
  }

  // Laurent window enlargement stability.
  for (int g = 1; g <= 6; ++g)
    for (int h = 0; h <= g; ++h) {
      LaurentSeries narrow = fixed_locus_contribution(FixedLocus{g, h});
      LaurentSeries wide = fixed_locus_contribution(FixedLocus{g, h}, default_window_lo(g) - 8);
      bool stable = true;
      for (int k = narrow.lo(); k <= narrow.hi(); ++k)
        stable = stable && (narrow.coefficient(k) == wide.coefficient(k));
      c.require(stable, "window stability at g = " + std::to_string(g) +
                            ", locus " + std::to_string(h));
    }

  // JSON round trip on suite outputs.
  std::vector<TautClass> outputs;
  for (int g = 1; g <= 4; ++g) {
    outputs.push_back(boundary_formula(g));
    outputs.push_back(replay_derivation(g).lhs);
    Expander ex;
    outputs.push_back(ex.expand_full(g).normal_form);
  }
  outputs.push_back(kappa_relation(4).lhs);
  for (size_t i = 0; i < outputs.size(); ++i) {
    json j = class_to_json(outputs[i]);
    c.require(class_from_json(j) == outputs[i],
              "JSON round trip on output " + std::to_string(i));
    c.require(class_to_json(class_from_json(j)).dump() == j.dump(),
              "byte-stable serialization on output " + std::to_string(i));
  }
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
