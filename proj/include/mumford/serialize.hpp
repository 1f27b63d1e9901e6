#pragma once

#include <json.hpp>
#include <string>

#include "mumford/builders.hpp"
#include "mumford/expand.hpp"
#include "mumford/tautclass.hpp"

namespace mumford {

using json = nlohmann::ordered_json;

/*
 * JSON interchange schema for classes:
 *   {"ambient": {"genus": g, "markings": [..]},
 *    "terms": [{"coeff": "p/q", "automorphisms": n,
 *               "graph": {"vertices": [{"genus": g, "legs": [{"id": i,
 *                         "marking": m?}, ..]}],
 *                         "edges": [[i, j], ..],
 *                         "decorations": [{"vertex": v, "factor": {..}}, ..]}}]}
 * Coefficients travel as strings to stay exact. Serialization reads the
 * canonical representatives in key order, so equal classes produce
 * byte-identical documents.
 */
json class_to_json(const TautClass& c);
TautClass class_from_json(const json& j);

json relation_report_to_json(const RelationReport& r);
json expansion_report_to_json(const ExpansionReport& r);

// Human-readable renderings. Classes print as sums of bracketed strata;
// single-vertex classes with Mumford factors print as the polynomial they
// stand for (e.g. "ψ − λ1").
std::string class_to_text(const TautClass& c);
std::string relation_to_text(const TautClass& lhs, const TautClass& rhs);

// Plain math-mode LaTeX; trees render in nested bracket notation rooted at
// the marked vertex.
std::string class_to_latex(const TautClass& c);

}  // namespace mumford
