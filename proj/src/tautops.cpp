#include "mumford/tautops.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mumford {

namespace {

int fresh_leg(const DecoratedStratum& s) {
  int m = 0;
  for (const auto& v : s.vertices)
    for (int l : v.legs) m = std::max(m, l + 1);
  return m;
}

void erase_leg_from_vertex(DecoratedStratum& s, int vertex, int leg) {
  auto& legs = s.vertices[vertex].legs;
  legs.erase(std::remove(legs.begin(), legs.end(), leg), legs.end());
}

// Moves legs p and q off the vertex onto a fresh genus-0 bubble attached by
// a new edge. Returns the new node leg on the original vertex.
int bubble_off(DecoratedStratum& s, int vertex, int leg_p, int leg_q) {
  int next = fresh_leg(s);
  int c_on_vertex = next++;
  int c_on_bubble = next++;
  erase_leg_from_vertex(s, vertex, leg_p);
  erase_leg_from_vertex(s, vertex, leg_q);
  s.vertices[vertex].legs.push_back(c_on_vertex);
  s.vertices.push_back(Vertex{0, {leg_p, leg_q, c_on_bubble}});
  s.decorations.emplace_back();
  s.edges.emplace_back(c_on_vertex, c_on_bubble);
  return c_on_vertex;
}

DecoratedStratum offset_legs(const DecoratedStratum& s, int offset) {
  DecoratedStratum r = s;
  for (auto& v : r.vertices)
    for (auto& l : v.legs) l += offset;
  for (auto& [a, b] : r.edges) {
    a += offset;
    b += offset;
  }
  for (auto& [label, leg] : r.markings) leg += offset;
  for (auto& dec : r.decorations)
    for (auto& f : dec) {
      if (auto* p = std::get_if<PsiPow>(&f)) p->leg += offset;
      if (auto* m = std::get_if<MumfordFactor>(&f)) m->leg += offset;
    }
  return r;
}

std::vector<int> markings_without(const std::vector<int>& markings, int p) {
  std::vector<int> r;
  for (int m : markings)
    if (m != p) r.push_back(m);
  return r;
}

}  // namespace

TautClass glue_pushforward(const TautClass& left, int left_node_marking,
                           const TautClass& right, int right_node_marking,
                           const Ambient& target) {
  if (left.ambient().genus + right.ambient().genus != target.genus)
    throw std::invalid_argument("glue_pushforward: genus mismatch");
  TautClass result(target);
  for (const auto& [lk, lt] : left.terms()) {
    (void)lk;
    for (const auto& [rk, rt] : right.terms()) {
      (void)rk;
      const DecoratedStratum& ls = lt.stratum;
      DecoratedStratum rs = offset_legs(rt.stratum, fresh_leg(ls));

      auto lit = ls.markings.find(left_node_marking);
      auto rit = rs.markings.find(right_node_marking);
      if (lit == ls.markings.end() || rit == rs.markings.end())
        throw std::invalid_argument("glue_pushforward: designated node leg absent");
      int lleg = lit->second, rleg = rit->second;

      DecoratedStratum merged = ls;
      merged.markings.erase(left_node_marking);
      for (const auto& v : rs.vertices) merged.vertices.push_back(v);
      for (const auto& d : rs.decorations) merged.decorations.push_back(d);
      for (const auto& e : rs.edges) merged.edges.push_back(e);
      for (const auto& [label, leg] : rs.markings)
        if (label != right_node_marking) merged.markings[label] = leg;
      merged.edges.emplace_back(lleg, rleg);

      int before = ls.codimension() + rt.stratum.codimension();
      if (merged.codimension() != before + 1)
        throw std::logic_error("glue_pushforward: codimension law violated");
      result.add(merged, lt.coeff * rt.coeff);
    }
  }
  return result;
}

TautClass psi_multiply(const TautClass& c, int marking) {
  TautClass result(c.ambient());
  for (const auto& [k, t] : c.terms()) {
    (void)k;
    DecoratedStratum s = t.stratum;
    auto it = s.markings.find(marking);
    if (it == s.markings.end())
      throw std::invalid_argument("psi_multiply: marking absent from ambient");
    int v = s.vertex_of_leg(it->second);
    s.decorations[v].push_back(PsiPow{it->second, 1});
    result.add(s, t.coeff);  // dimension rule kills genus-0 three-legged hosts
  }
  return result;
}

TautClass forget_pushforward(const TautClass& c, int marking) {
  Ambient target{c.ambient().genus, markings_without(c.ambient().markings, marking)};
  TautClass result(target);

  for (const auto& [key, t] : c.terms()) {
    (void)key;
    const DecoratedStratum& s = t.stratum;
    int lp = s.markings.at(marking);
    int v = s.vertex_of_leg(lp);
    const Vertex& vert = s.vertices[v];
    int codim_in = s.codimension();

    // Shape analysis of the forgotten point's vertex.
    int psi_p = 0;
    bool other_psi_or_mumford = false;
    for (const auto& f : s.decorations[v]) {
      if (const auto* p = std::get_if<PsiPow>(&f)) {
        if (p->leg == lp)
          psi_p = p->exp;
        else
          other_psi_or_mumford = true;
      } else if (const auto* m = std::get_if<MumfordFactor>(&f)) {
        if (m->leg == lp)
          throw std::invalid_argument(
              "unsupported pushforward shape: Mumford factor at the forgotten point");
        other_psi_or_mumford = true;
      } else if (std::holds_alternative<KappaPow>(f)) {
        throw std::invalid_argument(
            "unsupported pushforward shape: kappa on the forgotten point's vertex");
      }
    }

    auto emit = [&](DecoratedStratum out, Rational coeff) {
      if (coeff.is_zero()) return;
      if (out.codimension() != codim_in - 1)
        throw std::logic_error("forget_pushforward: codimension law violated");
      result.add(out, coeff);
    };

    if (vert.genus == 0 && vert.legs.size() == 3) {
      // The vertex destabilizes; the map contracts the bubble isomorphically.
      assert(s.decorations[v].empty());  // decorated (0,3) vertices are the zero class
      std::vector<int> rest;
      for (int l : vert.legs)
        if (l != lp) rest.push_back(l);
      int x = rest[0], y = rest[1];
      auto partner = [&](int leg) -> int {
        for (const auto& [a, b] : s.edges) {
          if (a == leg) return b;
          if (b == leg) return a;
        }
        return -1;
      };
      int px = partner(x), py = partner(y);

      DecoratedStratum out = s;
      out.markings.erase(marking);
      auto drop_edge_of = [&](int leg) {
        out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                       [&](const std::pair<int, int>& e) {
                                         return e.first == leg || e.second == leg;
                                       }),
                        out.edges.end());
      };
      if (px != -1 && py != -1) {
        drop_edge_of(x);
        drop_edge_of(y);
        out.edges.emplace_back(px, py);
      } else if (px != -1 || py != -1) {
        int node = (px != -1) ? x : y;
        int partner_leg = (px != -1) ? px : py;
        int marked = (px != -1) ? y : x;
        int label = *s.marking_of_leg(marked);
        (void)node;
        drop_edge_of(node);
        out.markings[label] = partner_leg;
      } else {
        throw std::invalid_argument(
            "unsupported pushforward shape: contraction to a 2-pointed genus-0 curve");
      }
      out.vertices.erase(out.vertices.begin() + v);
      out.decorations.erase(out.decorations.begin() + v);
      emit(out, t.coeff);
      continue;
    }

    DecoratedStratum base = s;
    base.markings.erase(marking);
    erase_leg_from_vertex(base, v, lp);
    base.decorations[v].erase(
        std::remove_if(base.decorations[v].begin(), base.decorations[v].end(),
                       [&](const DecorationFactor& f) {
                         const auto* p = std::get_if<PsiPow>(&f);
                         return p && p->leg == lp;
                       }),
        base.decorations[v].end());

    if (psi_p == 0) {
      // String: lower each psi power / Mumford factor on the vertex by one.
      for (size_t fi = 0; fi < base.decorations[v].size(); ++fi) {
        DecoratedStratum out = base;
        auto& f = out.decorations[v][fi];
        if (auto* p = std::get_if<PsiPow>(&f)) {
          if (p->exp == 1)
            out.decorations[v].erase(out.decorations[v].begin() + fi);
          else
            p->exp -= 1;
          emit(out, t.coeff);
        } else if (auto* m = std::get_if<MumfordFactor>(&f)) {
          if (m->degree == 1)
            out.decorations[v].erase(out.decorations[v].begin() + fi);
          else
            m->degree -= 1;
          emit(out, t.coeff);
        }
        // Lambda factors are pulled back; they produce nothing here.
      }
    } else if (psi_p == 1) {
      // Dilaton: scalar 2g - 2 + n with n the legs remaining on the vertex.
      int n = static_cast<int>(base.vertices[v].legs.size());
      emit(base, t.coeff * Rational(2 * vert.genus - 2 + n));
    } else {
      if (other_psi_or_mumford)
        throw std::invalid_argument(
            "unsupported pushforward shape: psi^b (b>=2) with psi elsewhere on the vertex");
      base.decorations[v].push_back(KappaPow{psi_p - 1, 1});
      emit(base, t.coeff);
    }
  }
  return result;
}

TautClass forget_pullback(const TautClass& c, int new_marking) {
  std::vector<int> markings = c.ambient().markings;
  markings.push_back(new_marking);
  std::sort(markings.begin(), markings.end());
  Ambient target{c.ambient().genus, markings};
  TautClass result(target);

  for (const auto& [key, t] : c.terms()) {
    (void)key;
    const DecoratedStratum& s = t.stratum;
    for (const auto& dec : s.decorations)
      for (const auto& f : dec)
        if (std::holds_alternative<KappaPow>(f))
          throw std::invalid_argument("forget_pullback: kappa decorations unsupported");

    for (size_t v = 0; v < s.vertices.size(); ++v) {
      // Main term: the new point lands on vertex v.
      {
        DecoratedStratum out = s;
        int leg = fresh_leg(out);
        out.vertices[v].legs.push_back(leg);
        out.markings[new_marking] = leg;
        result.add(out, t.coeff);
      }
      // One bubble correction per psi-bearing factor on the receiving
      // vertex; corrections at distinct legs never multiply.
      for (size_t fi = 0; fi < s.decorations[v].size(); ++fi) {
        const auto& f = s.decorations[v][fi];
        int leg_r = -1, lowered = 0;
        bool is_mumford = false;
        if (const auto* p = std::get_if<PsiPow>(&f)) {
          leg_r = p->leg;
          lowered = p->exp - 1;
        } else if (const auto* m = std::get_if<MumfordFactor>(&f)) {
          leg_r = m->leg;
          lowered = m->degree - 1;
          is_mumford = true;
        } else {
          continue;
        }
        DecoratedStratum out = s;
        out.decorations[v].erase(out.decorations[v].begin() + fi);
        int new_leg = fresh_leg(out);
        out.vertices[v].legs.push_back(new_leg);
        out.markings[new_marking] = new_leg;
        int c_on_vertex = bubble_off(out, static_cast<int>(v), new_leg, leg_r);
        if (lowered >= 1) {
          if (is_mumford)
            out.decorations[v].push_back(MumfordFactor{c_on_vertex, lowered});
          else
            out.decorations[v].push_back(PsiPow{c_on_vertex, lowered});
        }
        result.add(out, -t.coeff);
      }
    }
  }
  return result;
}

CorrectionAudit audit_pushforward_corrections(const TautClass& c, int marking) {
  CorrectionAudit audit;
  for (const auto& [key, t] : c.terms()) {
    (void)key;
    const DecoratedStratum& s = t.stratum;
    int lp = s.markings.at(marking);
    int v = s.vertex_of_leg(lp);
    int psi_p = 0;
    for (const auto& f : s.decorations[v])
      if (const auto* p = std::get_if<PsiPow>(&f))
        if (p->leg == lp) psi_p = p->exp;
    if (psi_p == 0) continue;  // the string rule is the corrected computation

    for (const auto& f : s.decorations[v]) {
      int leg_r = -1, lowered = 0;
      bool is_mumford = false;
      if (const auto* p = std::get_if<PsiPow>(&f)) {
        if (p->leg == lp) continue;
        leg_r = p->leg;
        lowered = p->exp - 1;
      } else if (const auto* m = std::get_if<MumfordFactor>(&f)) {
        leg_r = m->leg;
        lowered = m->degree - 1;
        is_mumford = true;
      } else {
        continue;
      }
      // Materialize psi_r^m = pullback + psi_c^{m-1} D_{pr}: the correction
      // stratum keeps psi_p^b, now at a marked point of the bubble.
      DecoratedStratum corr = s;
      corr.decorations[v].erase(
          std::remove_if(corr.decorations[v].begin(), corr.decorations[v].end(),
                         [&](const DecorationFactor& g) {
                           if (const auto* p = std::get_if<PsiPow>(&g))
                             return (!is_mumford && p->leg == leg_r) || p->leg == lp;
                           if (const auto* m = std::get_if<MumfordFactor>(&g))
                             return is_mumford && m->leg == leg_r;
                           return false;
                         }),
          corr.decorations[v].end());
      int c_on_vertex = bubble_off(corr, v, lp, leg_r);
      if (lowered >= 1) {
        if (is_mumford)
          corr.decorations[v].push_back(MumfordFactor{c_on_vertex, lowered});
        else
          corr.decorations[v].push_back(PsiPow{c_on_vertex, lowered});
      }
      // psi_p travels with its leg onto the bubble.
      corr.decorations.back().push_back(PsiPow{lp, psi_p});
      ++audit.generated;
      if (corr.dimension_vanishes()) ++audit.vanished;
    }
  }
  return audit;
}

TautClass splice_vertex(const Ambient& ambient, const DecoratedStratum& host,
                        const Rational& coeff, int vertex,
                        const std::map<int, int>& local_marking_to_host_leg,
                        const TautClass& local) {
  if (!host.decorations[vertex].empty())
    throw std::logic_error("splice_vertex: host vertex decorations not consumed");
  if (local.ambient().genus != host.vertices[vertex].genus)
    throw std::logic_error("splice_vertex: genus mismatch");

  TautClass result(ambient);
  for (const auto& [key, lt] : local.terms()) {
    (void)key;
    DecoratedStratum ls = offset_legs(lt.stratum, fresh_leg(host));
    // Map each local marked leg back to the host leg it stands for.
    std::map<int, int> leg_map;
    for (const auto& [label, host_leg] : local_marking_to_host_leg) {
      auto it = ls.markings.find(label);
      if (it == ls.markings.end())
        throw std::logic_error("splice_vertex: local marking missing");
      leg_map[it->second] = host_leg;
    }
    auto mapped = [&](int leg) {
      auto it = leg_map.find(leg);
      return it == leg_map.end() ? leg : it->second;
    };

    DecoratedStratum out = host;
    out.vertices.erase(out.vertices.begin() + vertex);
    out.decorations.erase(out.decorations.begin() + vertex);
    for (const auto& v : ls.vertices) {
      Vertex nv{v.genus, {}};
      for (int l : v.legs) nv.legs.push_back(mapped(l));
      out.vertices.push_back(nv);
    }
    for (auto dec : ls.decorations) {
      for (auto& f : dec) {
        if (auto* p = std::get_if<PsiPow>(&f)) p->leg = mapped(p->leg);
        if (auto* m = std::get_if<MumfordFactor>(&f)) m->leg = mapped(m->leg);
      }
      out.decorations.push_back(dec);
    }
    for (auto [a, b] : ls.edges) out.edges.emplace_back(mapped(a), mapped(b));
    result.add(out, coeff * lt.coeff);
  }
  return result;
}

TautClass comparison_rewrite(const Ambient& ambient, const DecoratedStratum& host,
                             const Rational& coeff, int vertex, int leg_p, int leg_q,
                             int degree, int psi_p_exp,
                             const TautClass& one_legged_expansion) {
  int genus = host.vertices[vertex].genus;
  if (genus < 1 || degree < genus)
    throw std::invalid_argument("comparison_rewrite: factor is not reducible");
  if (host.vertices[vertex].legs.size() != 2)
    throw std::invalid_argument("comparison_rewrite: vertex is not two-legged");
  if (!one_legged_expansion.is_zero() &&
      one_legged_expansion.homogeneous_codimension() != degree)
    throw std::logic_error("comparison_rewrite: expansion has wrong codimension");

  // Pullback part: add p back to the one-legged expansion, restore the psi
  // power at p, splice over the host vertex. The expansion lives on the
  // 1-pointed space with marking 1 standing for q; the added point is 2.
  TautClass local = forget_pullback(one_legged_expansion, 2);
  for (int i = 0; i < psi_p_exp; ++i) local = psi_multiply(local, 2);

  DecoratedStratum stripped = host;
  stripped.decorations[vertex].clear();
  TautClass result =
      splice_vertex(ambient, stripped, coeff, vertex, {{1, leg_q}, {2, leg_p}}, local);

  // Bubble part: dies when a psi power rides at p, since psi_p restricts to
  // zero on the bubble.
  if (psi_p_exp == 0) {
    DecoratedStratum bub = stripped;
    int c_on_vertex = bubble_off(bub, vertex, leg_p, leg_q);
    if (degree - 1 >= 1)
      bub.decorations[vertex].push_back(MumfordFactor{c_on_vertex, degree - 1});
    TautClass bubble_class(ambient);
    bubble_class.add(bub, coeff);
    result = class_combine(result, bubble_class, Rational(1), Rational(1));
  }
  return result;
}

}  // namespace mumford
