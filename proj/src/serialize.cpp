#include "mumford/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace mumford {

namespace {

json factor_to_json(const DecorationFactor& f) {
  json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>)
          out = json{{"type", "psi"}, {"leg", v.leg}, {"exp", v.exp}};
        if constexpr (std::is_same_v<T, LambdaPow>)
          out = json{{"type", "lambda"}, {"index", v.index}, {"exp", v.exp}};
        if constexpr (std::is_same_v<T, KappaPow>)
          out = json{{"type", "kappa"}, {"index", v.index}, {"exp", v.exp}};
        if constexpr (std::is_same_v<T, MumfordFactor>)
          out = json{{"type", "mumford"}, {"leg", v.leg}, {"degree", v.degree}};
      },
      f);
  return out;
}

DecorationFactor factor_from_json(const json& j) {
  std::string type = j.at("type");
  if (type == "psi") return PsiPow{j.at("leg"), j.at("exp")};
  if (type == "lambda") return LambdaPow{j.at("index"), j.at("exp")};
  if (type == "kappa") return KappaPow{j.at("index"), j.at("exp")};
  if (type == "mumford") return MumfordFactor{j.at("leg"), j.at("degree")};
  throw std::invalid_argument("unknown decoration factor type '" + type + "'");
}

}  // namespace

json class_to_json(const TautClass& c) {
  json out;
  out["ambient"] = {{"genus", c.ambient().genus}, {"markings", c.ambient().markings}};
  out["terms"] = json::array();
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    json graph;
    graph["vertices"] = json::array();
    for (size_t v = 0; v < t.stratum.vertices.size(); ++v) {
      json legs = json::array();
      for (int l : t.stratum.vertices[v].legs) {
        json leg{{"id", l}};
        if (auto m = t.stratum.marking_of_leg(l)) leg["marking"] = *m;
        legs.push_back(leg);
      }
      graph["vertices"].push_back(
          {{"genus", t.stratum.vertices[v].genus}, {"legs", legs}});
    }
    graph["edges"] = json::array();
    for (const auto& [a, b] : t.stratum.edges) graph["edges"].push_back({a, b});
    graph["decorations"] = json::array();
    for (size_t v = 0; v < t.stratum.decorations.size(); ++v)
      for (const auto& f : t.stratum.decorations[v])
        graph["decorations"].push_back(
            {{"vertex", static_cast<int>(v)}, {"factor", factor_to_json(f)}});
    out["terms"].push_back({{"coeff", t.coeff.to_string()},
                            {"automorphisms", t.automorphisms},
                            {"graph", graph}});
  }
  return out;
}

TautClass class_from_json(const json& j) {
  Ambient amb;
  amb.genus = j.at("ambient").at("genus");
  amb.markings = j.at("ambient").at("markings").get<std::vector<int>>();
  TautClass c(amb);
  for (const auto& term : j.at("terms")) {
    DecoratedStratum s;
    for (const auto& vj : term.at("graph").at("vertices")) {
      Vertex v;
      v.genus = vj.at("genus");
      for (const auto& leg : vj.at("legs")) {
        int id = leg.at("id");
        v.legs.push_back(id);
        if (leg.contains("marking")) s.markings[leg.at("marking")] = id;
      }
      s.vertices.push_back(v);
      s.decorations.emplace_back();
    }
    for (const auto& e : term.at("graph").at("edges"))
      s.edges.emplace_back(e.at(0), e.at(1));
    for (const auto& d : term.at("graph").at("decorations"))
      s.decorations.at(d.at("vertex")).push_back(factor_from_json(d.at("factor")));
    c.add(s, Rational::from_string(term.at("coeff").get<std::string>()));
  }
  return c;
}

json relation_report_to_json(const RelationReport& r) {
  return json{{"variant", r.variant}, {"genus", r.genus},     {"h", r.h},
              {"j", r.j},             {"checked", r.checked}, {"ok", r.ok},
              {"notes", r.notes},     {"lhs", class_to_json(r.lhs)},
              {"rhs", class_to_json(r.rhs)}, {"residual", class_to_json(r.residual)}};
}

json expansion_report_to_json(const ExpansionReport& r) {
  json strata = json::array();
  for (const auto& a : r.strata)
    strata.push_back({{"coeff", a.coeff.to_string()},
                      {"automorphisms", a.automorphisms},
                      {"marked_vertex_genus", a.marked_vertex_genus},
                      {"marked_on_genus0", a.marked_on_genus0},
                      {"has_genus0_vertex", a.has_genus0_vertex},
                      {"terminal_factors", a.terminal_factors},
                      {"integral_raw", a.integral_raw},
                      {"integral_times_aut", a.integral_aut},
                      {"vertices", a.vertices},
                      {"edges", a.edges},
                      {"shape", a.shape}});
  return json{{"genus", r.genus},
              {"steps", r.steps},
              {"fixpoint", r.fixpoint},
              {"normal_form", class_to_json(r.normal_form)},
              {"strata", strata},
              {"summary",
               {{"non_integral_raw", r.non_integral_raw},
                {"non_integral_times_aut", r.non_integral_aut},
                {"all_marked_on_genus0", r.all_marked_on_genus0},
                {"all_terminal_factors", r.all_terminal_factors},
                {"all_have_genus0", r.all_have_genus0},
                {"shape_counts", r.shape_counts}}}};
}

namespace {

// Names a leg for rendering: markings as p<label>, node legs as e<index>.
std::string leg_name(const DecoratedStratum& s, int leg) {
  if (auto m = s.marking_of_leg(leg)) return "p" + std::to_string(*m);
  for (size_t e = 0; e < s.edges.size(); ++e)
    if (s.edges[e].first == leg || s.edges[e].second == leg)
      return "e" + std::to_string(e);
  return "l" + std::to_string(leg);
}

std::string superscript(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

// The Mumford-type polynomial a factor stands for, e.g. "ψ^2 − λ1·ψ + λ2".
std::string mumford_poly_text(int genus, int degree, const std::string& psi) {
  std::ostringstream os;
  for (int j = 0; j <= genus && j <= degree; ++j) {
    if (j > 0) os << ((j % 2 == 0) ? " + " : " − ");
    int e = degree - j;
    if (j == 0) {
      os << psi << superscript(e);
    } else {
      os << "λ" << j;
      if (e >= 1) os << "·" << psi << superscript(e);
    }
  }
  return os.str();
}

std::string factor_text(const DecoratedStratum& s, int vertex, const DecorationFactor& f,
                        bool bare_psi) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>) {
          os << "ψ";
          if (!bare_psi) os << "_" << leg_name(s, v.leg);
          os << superscript(v.exp);
        }
        if constexpr (std::is_same_v<T, LambdaPow>) {
          os << "λ" << v.index << superscript(v.exp);
        }
        if constexpr (std::is_same_v<T, KappaPow>) {
          os << "κ" << v.index << superscript(v.exp);
        }
        if constexpr (std::is_same_v<T, MumfordFactor>) {
          std::string psi = bare_psi ? "ψ" : ("ψ_" + leg_name(s, v.leg));
          os << "(" << mumford_poly_text(s.vertices[vertex].genus, v.degree, psi) << ")";
        }
      },
      f);
  return os.str();
}

std::string vertex_decorations_text(const DecoratedStratum& s, int vertex, bool bare_psi) {
  std::ostringstream os;
  for (size_t i = 0; i < s.decorations[vertex].size(); ++i) {
    if (i) os << "·";
    os << factor_text(s, vertex, s.decorations[vertex][i], bare_psi);
  }
  return os.str();
}

std::string stratum_text(const DecoratedStratum& s) {
  // Single vertex: just the decoration product (the interior class). A lone
  // Mumford factor prints without parentheses.
  if (s.vertices.size() == 1) {
    bool bare = s.vertices[0].legs.size() == 1;
    if (s.decorations[0].size() == 1) {
      if (const auto* m = std::get_if<MumfordFactor>(&s.decorations[0][0])) {
        std::string psi = bare ? "ψ" : ("ψ_" + leg_name(s, m->leg));
        return mumford_poly_text(s.vertices[0].genus, m->degree, psi);
      }
    }
    std::string d = vertex_decorations_text(s, 0, bare);
    return d.empty() ? "[g" + std::to_string(s.vertices[0].genus) + "]" : d;
  }
  std::ostringstream os;
  os << "[";
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    if (v) os << " ";
    os << "g" << s.vertices[v].genus << "(";
    bool first = true;
    for (int l : s.vertices[v].legs) {
      if (!first) os << ",";
      first = false;
      os << leg_name(s, l);
    }
    os << ")";
    std::string d = vertex_decorations_text(s, static_cast<int>(v), false);
    if (!d.empty()) os << "{" << d << "}";
  }
  os << "]";
  return os.str();
}

std::string coeff_prefix(const Rational& c, bool first) {
  std::string cs = c.to_string();
  std::string sign = first ? (cs[0] == '-' ? "−" : "") : (cs[0] == '-' ? " − " : " + ");
  if (cs[0] == '-') cs = cs.substr(1);
  if (cs == "1") return sign;
  return sign + cs + "·";
}

}  // namespace

std::string class_to_text(const TautClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    os << coeff_prefix(t.coeff, first);
    first = false;
    os << stratum_text(t.stratum);
  }
  return os.str();
}

std::string relation_to_text(const TautClass& lhs, const TautClass& rhs) {
  return class_to_text(lhs) + " = " + class_to_text(rhs);
}

namespace {

std::string latex_rational(const Rational& c) {
  std::string s = c.to_string();
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s = s.substr(1);
  auto slash = s.find('/');
  std::string body =
      (slash == std::string::npos)
          ? s
          : "\\tfrac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}";
  return (neg ? "-" : "") + body;
}

std::string latex_mumford_poly(int genus, int degree, const std::string& psi) {
  std::ostringstream os;
  for (int j = 0; j <= genus && j <= degree; ++j) {
    if (j > 0) os << ((j % 2 == 0) ? "+" : "-");
    int e = degree - j;
    if (j == 0) {
      os << psi;
      if (e != 1) os << "^{" << e << "}";
    } else {
      os << "\\lambda_{" << j << "}";
      if (e >= 1) {
        os << psi;
        if (e != 1) os << "^{" << e << "}";
      }
    }
  }
  return os.str();
}

std::string latex_leg(const DecoratedStratum& s, int leg) {
  if (auto m = s.marking_of_leg(leg)) return "p_{" + std::to_string(*m) + "}";
  for (size_t e = 0; e < s.edges.size(); ++e)
    if (s.edges[e].first == leg || s.edges[e].second == leg)
      return "e_{" + std::to_string(e) + "}";
  return "l_{" + std::to_string(leg) + "}";
}

std::string latex_factor(const DecoratedStratum& s, int vertex, const DecorationFactor& f,
                         bool bare) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>) {
          os << "\\psi";
          if (!bare) os << "_{" << latex_leg(s, v.leg) << "}";
          if (v.exp != 1) os << "^{" << v.exp << "}";
        }
        if constexpr (std::is_same_v<T, LambdaPow>) {
          os << "\\lambda_{" << v.index << "}";
          if (v.exp != 1) os << "^{" << v.exp << "}";
        }
        if constexpr (std::is_same_v<T, KappaPow>) {
          os << "\\kappa_{" << v.index << "}";
          if (v.exp != 1) os << "^{" << v.exp << "}";
        }
        if constexpr (std::is_same_v<T, MumfordFactor>) {
          std::string psi =
              bare ? "\\psi" : "\\psi_{" + latex_leg(s, v.leg) + "}";
          os << "\\bigl(" << latex_mumford_poly(s.vertices[vertex].genus, v.degree, psi)
             << "\\bigr)";
        }
      },
      f);
  return os.str();
}

// Nested bracket rendering rooted at the marked vertex: each vertex prints
// as g_{genus} with a bullet for the marked point and its decoration
// product, followed by its subtrees in parentheses.
std::string latex_subtree(const DecoratedStratum& s, int vertex, int from_leg) {
  std::ostringstream os;
  os << "g_{" << s.vertices[vertex].genus << "}";
  std::vector<std::string> sup;
  for (int l : s.vertices[vertex].legs)
    if (auto m = s.marking_of_leg(l)) sup.push_back("\\bullet_{" + std::to_string(*m) + "}");
  bool bare = s.vertices.size() == 1 && s.vertices[vertex].legs.size() == 1;
  std::string dec;
  for (size_t i = 0; i < s.decorations[vertex].size(); ++i) {
    if (i) dec += "\\,";
    dec += latex_factor(s, vertex, s.decorations[vertex][i], bare);
  }
  if (!dec.empty()) sup.push_back(dec);
  if (!sup.empty()) {
    os << "^{";
    for (size_t i = 0; i < sup.size(); ++i) os << (i ? "\\," : "") << sup[i];
    os << "}";
  }
  // Children: edges leaving this vertex other than the one we came from.
  std::vector<std::string> children;
  for (int l : s.vertices[vertex].legs) {
    if (l == from_leg) continue;
    for (const auto& [a, b] : s.edges) {
      if (a == l) children.push_back(latex_subtree(s, s.vertex_of_leg(b), b));
      if (b == l) children.push_back(latex_subtree(s, s.vertex_of_leg(a), a));
    }
  }
  if (!children.empty()) {
    os << "\\bigl(";
    for (size_t i = 0; i < children.size(); ++i) os << (i ? ",\\," : "") << children[i];
    os << "\\bigr)";
  }
  return os.str();
}

}  // namespace

std::string class_to_latex(const TautClass& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    std::string cs = latex_rational(t.coeff);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (cs != "1") os << cs << "\\,";
    int root = 0;
    if (t.stratum.markings.count(1))
      root = t.stratum.vertex_of_leg(t.stratum.markings.at(1));
    if (t.stratum.vertices.size() == 1 && !t.stratum.decorations[0].empty()) {
      // Interior classes print as bare polynomials.
      bool bare = t.stratum.vertices[0].legs.size() == 1;
      const auto& dec = t.stratum.decorations[0];
      if (dec.size() == 1 && std::holds_alternative<MumfordFactor>(dec[0])) {
        const auto& m = std::get<MumfordFactor>(dec[0]);
        std::string psi =
            bare ? "\\psi" : "\\psi_{" + latex_leg(t.stratum, m.leg) + "}";
        os << latex_mumford_poly(t.stratum.vertices[0].genus, m.degree, psi);
      } else {
        for (size_t i = 0; i < dec.size(); ++i) {
          if (i) os << "\\,";
          os << latex_factor(t.stratum, 0, dec[i], bare);
        }
      }
    } else {
      os << "\\Bigl[" << latex_subtree(t.stratum, root, -1) << "\\Bigr]";
    }
  }
  return os.str();
}

}  // namespace mumford
