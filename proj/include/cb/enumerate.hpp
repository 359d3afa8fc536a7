#pragma once
/*
 * Canonical forms and isomorph-free enumeration.
 *
 * canonical_form: lexicographically minimal encoding of the adjacency
 * structure (loops included) over all vertex orderings, found by a pruned
 * permutation search.  Two graphs get the same string iff they are
 * isomorphic.  Bipartition metadata is deliberately ignored: it is a
 * view on the graph, not part of the structure.
 *
 * bipartite_canonical_key: canonical form of a bipartite graph under row
 * permutations, column permutations and class swap, computed per connected
 * component (a class swap of a single component is an isomorphism even when
 * a global transpose is not, so component-wise treatment is what matches
 * graph isomorphism).  Works well past the 10-vertex limit of the general
 * search because each component's class size stays small.
 *
 * The enumerators return one representative per isomorphism class in a
 * deterministic order (sorted by canonical key).
 */

#include "cb/graph.hpp"

#include <string>
#include <vector>

namespace cb {

std::string canonical_form(const Graph &g);        // n <= caps().canon_n
bool isomorphic(const Graph &a, const Graph &b);   // via canonical_form

// All adjacency- and loop-preserving vertex permutations; n <= caps().canon_n.
std::vector<std::vector<int>> automorphisms(const Graph &g);

// Canonical key for a graph with a declared (equal-size-class per component)
// bipartition; loop-free.
std::string bipartite_canonical_key(const Graph &g);

// Every d-regular simple graph on n vertices, one per isomorphism class
// (disconnected graphs included).  Requires nd even, 0 <= d < n.
std::vector<Graph> enumerate_regular(int n, int d);

// Every d-regular bipartite graph with classes of size half_n, one per
// isomorphism class, bipartition metadata attached.  Requires 1 <= d <= half_n.
std::vector<Graph> enumerate_bipartite_regular(int half_n, int d);

// Every simple graph on n vertices, one per isomorphism class.
std::vector<Graph> enumerate_all(int n);
std::vector<Graph> enumerate_connected(int n);

} // namespace cb
