#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mumford/rational.hpp"

namespace mumford {

// Which side of a glued node a class lives on. The two branches of a node
// carry independent psi classes, and the two components carry independent
// Hodge bundles, so every symbol is tagged with its side.
enum class Site : std::uint8_t { Zero = 0, Infinity = 1 };

inline std::string site_suffix(Site s) { return s == Site::Zero ? "0" : "inf"; }

/*
 * One generator of the symbolic polynomial algebra: psi_0, psi_inf, or a
 * lambda class lambda^site_j. psi symbols carry no index; lambda indices
 * start at 1.
 */
struct Symbol {
  enum class Kind : std::uint8_t { Psi = 0, Lambda = 1 };

  Kind kind = Kind::Psi;
  Site site = Site::Zero;
  int index = 0;  // lambda subscript, 0 for psi

  static Symbol psi(Site s) { return Symbol{Kind::Psi, s, 0}; }
  static Symbol lambda(Site s, int j) { return Symbol{Kind::Lambda, s, j}; }

  // Lexicographic on (kind, site, index): the canonical monomial order.
  auto operator<=>(const Symbol&) const = default;

  std::string to_string() const {
    if (kind == Kind::Psi) return "psi_" + site_suffix(site);
    return "lambda_" + site_suffix(site) + "_" + std::to_string(index);
  }
};

// Exponent map, sorted by the symbol order so equal monomials have identical
// representations. Exponents are always >= 1.
using Monomial = std::map<Symbol, int>;

int monomial_degree(const Monomial& m);
std::string monomial_to_string(const Monomial& m);

/*
 * Multivariate polynomial over the psi/lambda alphabet with Rational
 * coefficients. Zero coefficients are never stored, so equality is
 * representation equality.
 */
class SymbolicPoly {
 public:
  SymbolicPoly() = default;
  explicit SymbolicPoly(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  static SymbolicPoly one() { return SymbolicPoly(Rational(1)); }
  static SymbolicPoly from_symbol(const Symbol& s, int exp = 1);
  static SymbolicPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  SymbolicPoly operator+(const SymbolicPoly& o) const;
  SymbolicPoly operator-(const SymbolicPoly& o) const;
  SymbolicPoly operator*(const SymbolicPoly& o) const;
  SymbolicPoly operator-() const { return scaled(Rational(-1)); }
  SymbolicPoly scaled(const Rational& c) const;

  bool operator==(const SymbolicPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymbolicPoly& o) const { return !(*this == o); }

  // Lowers every power of `s` by one; monomials not containing `s` are
  // dropped (the psi^{-1} = 0 convention).
  SymbolicPoly lower_power(const Symbol& s) const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

// Sum_{j=0}^{min(genus, degree)} (-1)^j lambda^site_j psi_site^{degree-j},
// with negative psi powers dropped. This is the truncated Mumford sum that
// appears in every bracketed factor of the boundary formulas.
SymbolicPoly truncated_mumford_poly(Site site, int genus, int degree);

}  // namespace mumford
