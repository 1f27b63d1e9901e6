#include <doctest.h>

#include <random>

#include "mumford/symbolic.hpp"

using namespace mumford;

namespace {

SymbolicPoly psi0() { return SymbolicPoly::from_symbol(Symbol::psi(Site::Zero)); }
SymbolicPoly psiinf() { return SymbolicPoly::from_symbol(Symbol::psi(Site::Infinity)); }
SymbolicPoly lam0(int j) { return SymbolicPoly::from_symbol(Symbol::lambda(Site::Zero, j)); }
SymbolicPoly laminf(int j) { return SymbolicPoly::from_symbol(Symbol::lambda(Site::Infinity, j)); }

SymbolicPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(1, 3), coeff(-3, 3), pick(0, 3);
  SymbolicPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    int nf = pick(rng);
    for (int f = 0; f < nf; ++f) {
      switch (pick(rng)) {
        case 0: m[Symbol::psi(Site::Zero)] += exp(rng); break;
        case 1: m[Symbol::psi(Site::Infinity)] += exp(rng); break;
        case 2: m[Symbol::lambda(Site::Zero, exp(rng))] += 1; break;
        default: m[Symbol::lambda(Site::Infinity, exp(rng))] += 1; break;
      }
    }
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("basic polynomial identities") {
  SymbolicPoly a = psi0() - lam0(1);
  CHECK(a * SymbolicPoly::one() == a);
  SymbolicPoly b = psiinf() - laminf(1);
  CHECK((b + b.scaled(Rational(-1))).is_zero());
  // Distributivity on a concrete product.
  CHECK(psi0() * (psiinf() - laminf(1)) == psi0() * psiinf() - psi0() * laminf(1));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    SymbolicPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("power lowering with the psi^{-1} = 0 convention") {
  Symbol pi = Symbol::psi(Site::Infinity);
  // psi_inf^2 - lambda1 psi_inf + lambda2  ->  psi_inf - lambda1
  SymbolicPoly p = psiinf() * psiinf() - laminf(1) * psiinf() + laminf(2);
  CHECK(p.lower_power(pi) == psiinf() - laminf(1));
  // Lowering twice kills the lambda tail entirely.
  CHECK(p.lower_power(pi).lower_power(pi) == SymbolicPoly::one());
  CHECK(p.lower_power(pi).lower_power(pi).lower_power(pi).is_zero());
}

TEST_CASE("truncated Mumford sums") {
  // genus 1, degree 1: psi - lambda1.
  CHECK(truncated_mumford_poly(Site::Infinity, 1, 1) == psiinf() - laminf(1));
  // genus 1, degree 2: psi^2 - lambda1 psi (the lambda2 term does not exist).
  CHECK(truncated_mumford_poly(Site::Infinity, 1, 2) ==
        psiinf() * psiinf() - laminf(1) * psiinf());
  // genus 2, degree 1: psi - lambda1 (lambda2 psi^{-1} dropped).
  CHECK(truncated_mumford_poly(Site::Zero, 2, 1) == psi0() - lam0(1));
  // genus 0: pure psi power.
  CHECK(truncated_mumford_poly(Site::Zero, 0, 3) == psi0() * psi0() * psi0());
  // degree 0: the unit.
  CHECK(truncated_mumford_poly(Site::Zero, 2, 0) == SymbolicPoly::one());
}

TEST_CASE("monomial order is deterministic") {
  SymbolicPoly p = laminf(2) + psi0() + lam0(1);
  SymbolicPoly q = lam0(1) + laminf(2) + psi0();
  CHECK(p == q);
  CHECK(p.to_string() == q.to_string());
}
