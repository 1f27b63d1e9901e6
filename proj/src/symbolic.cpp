#include "mumford/symbolic.hpp"

#include <sstream>

namespace mumford {

int monomial_degree(const Monomial& m) {
  // psi contributes exp, lambda_j contributes j*exp.
  int d = 0;
  for (const auto& [sym, exp] : m)
    d += exp * (sym.kind == Symbol::Kind::Psi ? 1 : sym.index);
  return d;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, exp] : m) {
    if (!first) os << "*";
    first = false;
    os << sym.to_string();
    if (exp != 1) os << "^" << exp;
  }
  return os.str();
}

SymbolicPoly SymbolicPoly::from_symbol(const Symbol& s, int exp) {
  SymbolicPoly p;
  if (exp == 0) return one();
  Monomial m;
  m[s] = exp;
  p.terms_[m] = Rational(1);
  return p;
}

SymbolicPoly SymbolicPoly::term(const Rational& c, const Monomial& m) {
  SymbolicPoly p;
  if (!c.is_zero()) p.terms_[m] = c;
  return p;
}

void SymbolicPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicPoly SymbolicPoly::operator+(const SymbolicPoly& o) const {
  SymbolicPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SymbolicPoly SymbolicPoly::operator-(const SymbolicPoly& o) const {
  SymbolicPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SymbolicPoly SymbolicPoly::operator*(const SymbolicPoly& o) const {
  SymbolicPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [sym, exp] : mb) m[sym] += exp;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SymbolicPoly SymbolicPoly::scaled(const Rational& c) const {
  SymbolicPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

SymbolicPoly SymbolicPoly::lower_power(const Symbol& s) const {
  SymbolicPoly r;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(s);
    if (it == m.end()) continue;  // power 0 lowers to zero
    Monomial lowered = m;
    if (it->second == 1)
      lowered.erase(s);
    else
      lowered[s] = it->second - 1;
    r.add_term(lowered, c);
  }
  return r;
}

std::string SymbolicPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    if (first) {
      first = false;
      if (cs == "1" && !m.empty())
        ;
      else if (cs == "-1" && !m.empty())
        os << "-";
      else
        os << cs << (m.empty() ? "" : "*");
    } else {
      if (cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
      if (cs == "1" && !m.empty())
        ;
      else
        os << cs << (m.empty() ? "" : "*");
    }
    if (!m.empty()) os << monomial_to_string(m);
  }
  return os.str();
}

SymbolicPoly truncated_mumford_poly(Site site, int genus, int degree) {
  SymbolicPoly p;
  for (int j = 0; j <= genus && j <= degree; ++j) {
    Monomial m;
    if (j >= 1) m[Symbol::lambda(site, j)] = 1;
    if (degree - j >= 1) m[Symbol::psi(site)] = degree - j;
    p.add_term(m, Rational(j % 2 == 0 ? 1 : -1));
  }
  return p;
}

}  // namespace mumford
