#include "mumford/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mumford {

int factor_degree(const DecorationFactor& f) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>) return v.exp;
        if constexpr (std::is_same_v<T, LambdaPow>) return v.index * v.exp;
        if constexpr (std::is_same_v<T, KappaPow>) return v.index * v.exp;
        if constexpr (std::is_same_v<T, MumfordFactor>) return v.degree;
      },
      f);
}

namespace {

// (kind rank, a, b) tuple for deterministic ordering of stored decorations.
std::array<int, 3> factor_rank(const DecorationFactor& f) {
  return std::visit(
      [](const auto& v) -> std::array<int, 3> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>) return {0, v.leg, v.exp};
        if constexpr (std::is_same_v<T, LambdaPow>) return {1, v.index, v.exp};
        if constexpr (std::is_same_v<T, KappaPow>) return {2, v.index, v.exp};
        if constexpr (std::is_same_v<T, MumfordFactor>) return {3, v.leg, v.degree};
      },
      f);
}

}  // namespace

bool factor_less(const DecorationFactor& a, const DecorationFactor& b) {
  return factor_rank(a) < factor_rank(b);
}

std::string factor_to_string(const DecorationFactor& f) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PsiPow>) {
          os << "psi[" << v.leg << "]";
          if (v.exp != 1) os << "^" << v.exp;
        }
        if constexpr (std::is_same_v<T, LambdaPow>) {
          os << "lambda" << v.index;
          if (v.exp != 1) os << "^" << v.exp;
        }
        if constexpr (std::is_same_v<T, KappaPow>) {
          os << "kappa" << v.index;
          if (v.exp != 1) os << "^" << v.exp;
        }
        if constexpr (std::is_same_v<T, MumfordFactor>) {
          os << "M[" << v.leg << "," << v.degree << "]";
        }
      },
      f);
  return os.str();
}

int DecoratedStratum::vertex_of_leg(int leg) const {
  for (size_t v = 0; v < vertices.size(); ++v)
    for (int l : vertices[v].legs)
      if (l == leg) return static_cast<int>(v);
  return -1;
}

std::optional<int> DecoratedStratum::marking_of_leg(int leg) const {
  for (const auto& [label, l] : markings)
    if (l == leg) return label;
  return std::nullopt;
}

bool DecoratedStratum::leg_is_node(int leg) const {
  for (const auto& [a, b] : edges)
    if (a == leg || b == leg) return true;
  return false;
}

int DecoratedStratum::total_genus() const {
  int g = 0;
  for (const auto& v : vertices) g += v.genus;
  return g;
}

int DecoratedStratum::vertex_decoration_degree(int vertex) const {
  int d = 0;
  for (const auto& f : decorations[vertex]) d += factor_degree(f);
  return d;
}

int DecoratedStratum::codimension() const {
  int c = static_cast<int>(edges.size());
  for (size_t v = 0; v < vertices.size(); ++v) c += vertex_decoration_degree(v);
  return c;
}

bool DecoratedStratum::dimension_vanishes() const {
  for (size_t v = 0; v < vertices.size(); ++v) {
    int dim = 3 * vertices[v].genus - 3 + num_legs(static_cast<int>(v));
    if (vertex_decoration_degree(static_cast<int>(v)) > dim) return true;
  }
  return false;
}

std::string DecoratedStratum::debug_string() const {
  std::ostringstream os;
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (v) os << "  ";
    os << "v" << v << "(g=" << vertices[v].genus << "; legs";
    for (int l : vertices[v].legs) {
      os << " " << l;
      if (auto m = marking_of_leg(l)) os << "=p" << *m;
    }
    os << ")";
    if (!decorations[v].empty()) {
      os << "{";
      for (size_t i = 0; i < decorations[v].size(); ++i) {
        if (i) os << " ";
        os << factor_to_string(decorations[v][i]);
      }
      os << "}";
    }
  }
  os << " |E:";
  for (const auto& [a, b] : edges) os << " (" << a << "," << b << ")";
  return os.str();
}

int StratumBuilder::add_vertex(int genus) {
  s_.vertices.push_back(Vertex{genus, {}});
  s_.decorations.emplace_back();
  return static_cast<int>(s_.vertices.size()) - 1;
}

int StratumBuilder::add_leg(int vertex) {
  int id = next_leg_++;
  s_.vertices.at(vertex).legs.push_back(id);
  return id;
}

int StratumBuilder::add_marking(int vertex, int label) {
  int id = add_leg(vertex);
  if (s_.markings.count(label))
    throw std::invalid_argument("StratumBuilder: marking repeated");
  s_.markings[label] = id;
  return id;
}

std::pair<int, int> StratumBuilder::add_edge(int v1, int v2) {
  int a = add_leg(v1);
  int b = add_leg(v2);
  s_.edges.emplace_back(a, b);
  return {a, b};
}

void StratumBuilder::connect(int leg1, int leg2) { s_.edges.emplace_back(leg1, leg2); }

void StratumBuilder::decorate(int vertex, const DecorationFactor& f) {
  s_.decorations.at(vertex).push_back(f);
}

DecoratedStratum StratumBuilder::finish(int ambient_genus,
                                        const std::vector<int>& ambient_markings) const {
  return validate_stratum(s_, ambient_genus, ambient_markings);
}

namespace {

void normalize_decorations(DecoratedStratum& s) {
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    int genus = s.vertices[v].genus;
    std::map<int, int> psi;                 // leg -> exp
    std::map<int, int> lambda;              // index -> exp
    std::map<int, int> kappa;               // index -> exp
    std::vector<MumfordFactor> mumford;
    for (const auto& f : s.decorations[v]) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PsiPow>) {
              if (x.exp < 0) throw std::invalid_argument("negative psi exponent");
              psi[x.leg] += x.exp;
            }
            if constexpr (std::is_same_v<T, LambdaPow>) {
              if (x.index < 1) throw std::invalid_argument("lambda index < 1");
              if (x.index > genus)
                throw std::invalid_argument("lambda index exceeds vertex genus");
              if (x.exp < 0) throw std::invalid_argument("negative lambda exponent");
              lambda[x.index] += x.exp;
            }
            if constexpr (std::is_same_v<T, KappaPow>) {
              if (x.index < 1) throw std::invalid_argument("kappa index < 1");
              if (x.exp < 0) throw std::invalid_argument("negative kappa exponent");
              kappa[x.index] += x.exp;
            }
            if constexpr (std::is_same_v<T, MumfordFactor>) {
              if (x.degree < 0) throw std::invalid_argument("negative Mumford degree");
              if (x.degree == 0) return;  // the unit factor
              if (genus == 0)
                psi[x.leg] += x.degree;   // no lambdas on a genus-0 vertex
              else
                mumford.push_back(x);
            }
          },
          f);
    }
    std::vector<DecorationFactor> out;
    for (const auto& [leg, exp] : psi)
      if (exp > 0) out.push_back(PsiPow{leg, exp});
    for (const auto& [idx, exp] : lambda)
      if (exp > 0) out.push_back(LambdaPow{idx, exp});
    for (const auto& [idx, exp] : kappa)
      if (exp > 0) out.push_back(KappaPow{idx, exp});
    for (const auto& m : mumford) out.push_back(m);
    std::sort(out.begin(), out.end(), factor_less);
    s.decorations[v] = std::move(out);
  }
}

}  // namespace

DecoratedStratum validate_stratum(const DecoratedStratum& input, int ambient_genus,
                                  const std::vector<int>& ambient_markings) {
  DecoratedStratum s = input;
  if (s.decorations.size() != s.vertices.size())
    throw std::invalid_argument("stratum: decoration list size mismatch");

  // Leg bookkeeping: each leg on exactly one vertex.
  std::map<int, int> leg_vertex;
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    auto& legs = s.vertices[v].legs;
    std::sort(legs.begin(), legs.end());
    for (int l : legs) {
      if (leg_vertex.count(l)) throw std::invalid_argument("stratum: duplicated leg id");
      leg_vertex[l] = static_cast<int>(v);
    }
  }

  // Edges: two distinct legs, each leg in at most one edge; normalize pair order.
  std::set<int> node_legs;
  for (auto& [a, b] : s.edges) {
    if (a == b) throw std::invalid_argument("stratum: edge joins a leg to itself");
    if (!leg_vertex.count(a) || !leg_vertex.count(b))
      throw std::invalid_argument("stratum: edge references unknown leg");
    if (node_legs.count(a) || node_legs.count(b))
      throw std::invalid_argument("stratum: leg used by two edges");
    node_legs.insert(a);
    node_legs.insert(b);
    if (a > b) std::swap(a, b);
  }
  std::sort(s.edges.begin(), s.edges.end());

  // Markings: exactly the ambient set, each on an un-edged leg.
  std::set<int> expected(ambient_markings.begin(), ambient_markings.end());
  if (expected.size() != ambient_markings.size())
    throw std::invalid_argument("ambient markings repeated");
  std::set<int> marked_legs;
  for (const auto& [label, leg] : s.markings) {
    if (!expected.count(label))
      throw std::invalid_argument("stratum: marking not in ambient set");
    if (!leg_vertex.count(leg))
      throw std::invalid_argument("stratum: marking on unknown leg");
    if (node_legs.count(leg))
      throw std::invalid_argument("stratum: marking on a node leg");
    if (!marked_legs.insert(leg).second)
      throw std::invalid_argument("stratum: marking repeated");
  }
  if (s.markings.size() != expected.size())
    throw std::invalid_argument("stratum: missing ambient marking");

  // Every leg is marked xor node.
  for (const auto& [leg, v] : leg_vertex) {
    (void)v;
    if (node_legs.count(leg) == marked_legs.count(leg))
      throw std::invalid_argument("stratum: leg neither marked nor node (or both)");
  }

  // Stability of every vertex.
  for (const auto& v : s.vertices)
    if (2 * v.genus - 2 + static_cast<int>(v.legs.size()) <= 0)
      throw std::invalid_argument("stratum: unstable vertex");

  // Genus adds up.
  if (s.total_genus() != ambient_genus)
    throw std::invalid_argument("stratum: vertex genera do not sum to ambient genus");

  // Tree: V-1 edges and connected.
  size_t V = s.vertices.size();
  if (s.edges.size() != V - 1)
    throw std::invalid_argument("stratum: not a tree (edge count)");
  std::vector<int> comp(V, -1);
  std::vector<size_t> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : s.edges) {
      int va = leg_vertex[a], vb = leg_vertex[b];
      if (static_cast<size_t>(va) == v && comp[vb] == -1) {
        comp[vb] = 0;
        stack.push_back(vb);
      }
      if (static_cast<size_t>(vb) == v && comp[va] == -1) {
        comp[va] = 0;
        stack.push_back(va);
      }
    }
  }
  for (int c : comp)
    if (c == -1) throw std::invalid_argument("stratum: disconnected graph");

  // Decoration legs live on their vertex.
  for (size_t v = 0; v < V; ++v) {
    for (const auto& f : s.decorations[v]) {
      int leg = -1;
      if (const auto* p = std::get_if<PsiPow>(&f)) leg = p->leg;
      if (const auto* m = std::get_if<MumfordFactor>(&f)) leg = m->leg;
      if (leg != -1 && (!leg_vertex.count(leg) || leg_vertex[leg] != static_cast<int>(v)))
        throw std::invalid_argument("stratum: decoration references foreign leg");
    }
  }

  normalize_decorations(s);
  return s;
}

}  // namespace mumford
