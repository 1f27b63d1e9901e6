#include "mumford/tautclass.hpp"

#include <sstream>
#include <stdexcept>

namespace mumford {

std::string Ambient::to_string() const {
  std::ostringstream os;
  os << "(g=" << genus << "; p";
  for (size_t i = 0; i < markings.size(); ++i) os << (i ? "," : "") << markings[i];
  os << ")";
  return os.str();
}

void TautClass::add(const DecoratedStratum& s, const Rational& c) {
  if (c.is_zero()) return;
  DecoratedStratum v = validate_stratum(s, ambient_.genus, ambient_.markings);
  if (v.dimension_vanishes()) return;
  add_canonical(canonical_form(v), c);
}

void TautClass::add_canonical(const CanonicalForm& cf, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(cf.key);
  if (it == terms_.end()) {
    terms_.emplace(cf.key, Term{cf.representative, c, cf.automorphisms});
  } else {
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }
}

TautClass TautClass::operator+(const TautClass& o) const {
  return class_combine(*this, o, Rational(1), Rational(1));
}

TautClass TautClass::operator-(const TautClass& o) const {
  return class_combine(*this, o, Rational(1), Rational(-1));
}

TautClass TautClass::scaled(const Rational& c) const {
  TautClass r(ambient_);
  if (c.is_zero()) return r;
  for (const auto& [k, t] : terms_) {
    Term nt = t;
    nt.coeff = t.coeff * c;
    r.terms_.emplace(k, nt);
  }
  return r;
}

bool TautClass::operator==(const TautClass& o) const {
  if (!(ambient_ == o.ambient_) || terms_.size() != o.terms_.size()) return false;
  for (const auto& [k, t] : terms_) {
    auto it = o.terms_.find(k);
    if (it == o.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

int TautClass::homogeneous_codimension() const {
  int codim = -1;
  for (const auto& [k, t] : terms_) {
    (void)k;
    int c = t.stratum.codimension();
    if (codim == -1)
      codim = c;
    else if (codim != c)
      throw std::logic_error("TautClass: inhomogeneous class (codim " + std::to_string(codim) +
                             " vs " + std::to_string(c) + ")");
  }
  return codim;
}

TautClass TautClass::expand_mumford_factors() const {
  TautClass r(ambient_);
  for (const auto& [key, term] : terms_) {
    (void)key;
    // Expand one vertex factor at a time until none are left.
    std::vector<std::pair<DecoratedStratum, Rational>> work = {{term.stratum, term.coeff}};
    std::vector<std::pair<DecoratedStratum, Rational>> done;
    while (!work.empty()) {
      auto [s, c] = work.back();
      work.pop_back();
      bool found = false;
      for (size_t v = 0; v < s.vertices.size() && !found; ++v) {
        for (size_t fi = 0; fi < s.decorations[v].size() && !found; ++fi) {
          const auto* mf = std::get_if<MumfordFactor>(&s.decorations[v][fi]);
          if (!mf) continue;
          found = true;
          int genus = s.vertices[v].genus;
          int leg = mf->leg, degree = mf->degree;
          DecoratedStratum base = s;
          base.decorations[v].erase(base.decorations[v].begin() + fi);
          for (int j = 0; j <= genus && j <= degree; ++j) {
            DecoratedStratum t = base;
            if (degree - j >= 1) t.decorations[v].push_back(PsiPow{leg, degree - j});
            if (j >= 1) t.decorations[v].push_back(LambdaPow{j, 1});
            work.push_back({t, c * Rational(j % 2 == 0 ? 1 : -1)});
          }
        }
      }
      if (!found) done.push_back({s, c});
    }
    for (const auto& [s, c] : done) r.add(s, c);
  }
  return r;
}

TautClass TautClass::map_terms(const std::function<TautClass(const Term&)>& fn) const {
  TautClass r;
  bool first = true;
  for (const auto& [key, term] : terms_) {
    (void)key;
    TautClass piece = fn(term);
    if (first) {
      r = piece;
      first = false;
    } else {
      r = class_combine(r, piece, Rational(1), Rational(1));
    }
  }
  if (first) return TautClass(ambient_);  // empty input: ambient preserved
  return r;
}

std::string TautClass::debug_string() const {
  std::ostringstream os;
  os << "TautClass " << ambient_.to_string() << " with " << terms_.size() << " term(s)\n";
  for (const auto& [k, t] : terms_) {
    (void)k;
    os << "  " << t.coeff.to_string() << " * [" << t.stratum.debug_string()
       << "]  |Aut|=" << t.automorphisms << "\n";
  }
  return os.str();
}

TautClass class_combine(const TautClass& a, const TautClass& b, const Rational& coeff_a,
                        const Rational& coeff_b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("class_combine: ambient mismatch " + a.ambient().to_string() +
                                " vs " + b.ambient().to_string());
  TautClass r = a.scaled(coeff_a);
  for (const auto& [k, t] : b.terms())
    r.add_canonical(CanonicalForm{k, t.automorphisms, t.stratum}, t.coeff * coeff_b);
  return r;
}

}  // namespace mumford
