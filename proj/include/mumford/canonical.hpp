#pragma once

#include <string>

#include "mumford/strata.hpp"

namespace mumford {

struct CanonicalForm {
  std::string key;              // identical for isomorphic strata
  long automorphisms = 1;       // order of the automorphism group
  DecoratedStratum representative;  // relabeled to the canonical ordering
};

/*
 * Canonical labeling by brute-force minimum over vertex orderings, with
 * permutations restricted to vertices of equal invariant. Strata here have
 * at most a handful of vertices, so exhaustive search is the right tool.
 * Results are memoized; the memo supports concurrent callers.
 *
 * Isomorphisms must respect genera, markings, edges, and decorations. In a
 * tree no two edges join the same vertex pair, so every automorphism is
 * determined by its action on vertices; the automorphism count is the number
 * of vertex orderings realizing the canonical encoding.
 */
CanonicalForm canonical_form(const DecoratedStratum& s);

}  // namespace mumford
