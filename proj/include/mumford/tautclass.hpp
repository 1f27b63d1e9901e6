#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mumford/canonical.hpp"
#include "mumford/rational.hpp"
#include "mumford/strata.hpp"

namespace mumford {

// The ambient moduli space: genus and marking labels.
struct Ambient {
  int genus = 0;
  std::vector<int> markings;

  bool operator==(const Ambient&) const = default;
  std::string to_string() const;
};

/*
 * A formal Rational-linear combination of canonicalized decorated strata in
 * a fixed ambient space. Terms are collected by canonical key; zero
 * coefficients and dimension-vanishing strata are dropped on insertion, so
 * equality of classes is equality of the stored maps.
 *
 * Coefficients do not absorb automorphism factors; pushforwards act
 * multiplicatively on coefficients, and canonical_form reports automorphism
 * orders separately.
 */
class TautClass {
 public:
  struct Term {
    DecoratedStratum stratum;  // canonical representative
    Rational coeff;
    long automorphisms = 1;
  };

  TautClass() = default;
  explicit TautClass(const Ambient& a) : ambient_(a) {}

  static TautClass zero(const Ambient& a) { return TautClass(a); }

  const Ambient& ambient() const { return ambient_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Validates the stratum against the ambient, canonicalizes, and
  // accumulates. Dimension-vanishing strata insert nothing.
  void add(const DecoratedStratum& s, const Rational& c);

  // Adds an already validated + canonicalized term (internal fast path).
  void add_canonical(const CanonicalForm& cf, const Rational& c);

  TautClass operator+(const TautClass& o) const;
  TautClass operator-(const TautClass& o) const;
  TautClass scaled(const Rational& c) const;

  bool operator==(const TautClass& o) const;
  bool operator!=(const TautClass& o) const { return !(*this == o); }

  // All terms share one codimension; returns it (-1 for the empty class).
  // Throws if the class is inhomogeneous.
  int homogeneous_codimension() const;

  // Rewrites every truncated Mumford factor into its psi/lambda expansion.
  // Two classes built through different factorizations compare equal after
  // this normalization.
  TautClass expand_mumford_factors() const;

  // Applies fn to every term and collects the resulting classes.
  TautClass map_terms(const std::function<TautClass(const Term&)>& fn) const;

  std::string debug_string() const;

 private:
  Ambient ambient_;
  std::map<std::string, Term> terms_;
};

// coeff_a * a + coeff_b * b; ambients must agree.
TautClass class_combine(const TautClass& a, const TautClass& b, const Rational& coeff_a,
                        const Rational& coeff_b);

}  // namespace mumford
