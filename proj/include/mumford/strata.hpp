#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mumford/rational.hpp"

namespace mumford {

// One component of a stable curve: genus plus the legs (half-edges) attached
// to it. Legs are ids that are unique within a stratum; their role (marked
// point or node branch) is recorded at the stratum level.
struct Vertex {
  int genus = 0;
  std::vector<int> legs;  // sorted
};

// psi_leg^exp
struct PsiPow {
  int leg = 0;
  int exp = 1;
};

// lambda_index^exp on the host vertex (index <= vertex genus)
struct LambdaPow {
  int index = 1;
  int exp = 1;
};

// kappa_index^exp on the host vertex
struct KappaPow {
  int index = 1;
  int exp = 1;
};

// sum_{j=0}^{genus} (-1)^j lambda_j psi_leg^{degree-j}, negative psi powers
// dropped. Kept unexpanded: it is the label the low-genus pictures carry
// ("psi - lambda_1", "psi^2 - lambda_1 psi + lambda_2"), and reducibility
// (degree >= host genus) stays a syntactic check.
struct MumfordFactor {
  int leg = 0;
  int degree = 1;
};

using DecorationFactor = std::variant<PsiPow, LambdaPow, KappaPow, MumfordFactor>;

int factor_degree(const DecorationFactor& f);
bool factor_less(const DecorationFactor& a, const DecorationFactor& b);
std::string factor_to_string(const DecorationFactor& f);

/*
 * A boundary-stratum class: a stable tree of components with genera, marked
 * points, node edges, and a multiset of decoration factors per vertex.
 * Only compact type (trees) is representable.
 */
struct DecoratedStratum {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;        // leg id pairs, each leg in one edge
  std::map<int, int> markings;                   // marking label -> leg id
  std::vector<std::vector<DecorationFactor>> decorations;  // indexed by vertex

  int vertex_of_leg(int leg) const;              // -1 if absent
  std::optional<int> marking_of_leg(int leg) const;
  bool leg_is_node(int leg) const;
  int total_genus() const;
  int num_legs(int vertex) const { return static_cast<int>(vertices[vertex].legs.size()); }

  // Total decoration degree sitting on one vertex.
  int vertex_decoration_degree(int vertex) const;

  // #edges + total decoration degree.
  int codimension() const;

  // True if some vertex carries more decoration degree than the dimension
  // 3g - 3 + n of its moduli factor; such a stratum is the zero class.
  bool dimension_vanishes() const;

  std::string debug_string() const;
};

/*
 * Small helper for assembling strata; hands out fresh leg ids and keeps the
 * bookkeeping in one place. Call finish() to validate and normalize.
 */
class StratumBuilder {
 public:
  int add_vertex(int genus);
  int add_marking(int vertex, int label);          // returns the new leg id
  std::pair<int, int> add_edge(int v1, int v2);    // returns the two leg ids
  int add_leg(int vertex);                         // raw leg, must be wired by caller
  void connect(int leg1, int leg2);                // edge between existing legs
  void decorate(int vertex, const DecorationFactor& f);

  // Validates against the ambient (genus, markings) and returns the
  // normalized stratum. Throws std::invalid_argument on violations.
  DecoratedStratum finish(int ambient_genus, const std::vector<int>& ambient_markings) const;

  const DecoratedStratum& raw() const { return s_; }

 private:
  DecoratedStratum s_;
  int next_leg_ = 0;
};

// Validates and normalizes an assembled stratum: stability of every vertex,
// tree shape, marking consistency, decoration legality. Decoration
// normalization merges repeated factors and rewrites genus-0 Mumford factors
// as plain psi powers.
DecoratedStratum validate_stratum(const DecoratedStratum& s, int ambient_genus,
                                  const std::vector<int>& ambient_markings);

}  // namespace mumford
