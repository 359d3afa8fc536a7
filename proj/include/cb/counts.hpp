#pragma once
/*
 * Exact counters.  Every function returns the exact integer answer (no
 * floating point anywhere) together with a short description of what was
 * counted and a fingerprint of the input.
 *
 * Counting recursions branch on the lowest-indexed live vertex and memoize
 * on the live-vertex bitmask, so disjoint unions factor automatically and
 * the supported sizes stay fast.  The permanent uses the transposition-walk
 * inclusion–exclusion formula with running row sums.
 */

#include "cb/bigint.hpp"
#include "cb/graph.hpp"

#include <utility>
#include <vector>

namespace cb {

struct CountResult {
    Int value;
    std::string meta;        // what was counted
    std::uint64_t input_hash; // fingerprint of the serialized input
};

// Permanent of a 0/1 matrix, order <= caps().permanent_n.
CountResult permanent(const ZeroOneMatrix &a);

// Perfect matchings of a loop-free graph (0 when n is odd).
CountResult perfect_matchings(const Graph &g);
// Coefficients of the matching polynomial: [t] = #matchings with t edges.
std::vector<Int> matching_polynomial(const Graph &g);
CountResult matchings_of_size(const Graph &g, int t);
CountResult matchings_total(const Graph &g);

// Matchings of the disjoint union of n/d complete-bipartite blocks, by the
// per-block closed form sum_a C(d,a)^2 a! x^a convolved across blocks.
std::vector<Int> matchings_union_polynomial(int n, int d); // requires d | n
CountResult matchings_union_formula(int n, int d, int t);

// Independent sets (a looped vertex can never be selected).
std::vector<Int> independence_polynomial(const Graph &g);
CountResult independent_sets_of_size(const Graph &g, int t);
CountResult independent_sets_total(const Graph &g);

// Proper q-colorings (0 if the graph has a loop).
CountResult colorings(const Graph &g, int q);

// Homomorphisms g -> h; g loop-free, h may have loops.
CountResult hom_count(const Graph &g, const Graph &h);
// Injective homomorphisms (embeddings) of pattern h into g; both loop-free.
CountResult embed_count(const Graph &h, const Graph &g);

// hom(K_{d,d}, h) by the profile sum: over multiplicity profiles c on V(h)
// with sum d, multinomial(d;c) * (#common neighbours of supp c)^d.
CountResult hom_kdd_closed(const Graph &h, int d);
// Proper q-colorings of K_{d,d} by the surjection sum.
CountResult colorings_kdd_closed(int q, int d);

// Cycle covers: partitions of V into isolated edges and vertex-disjoint
// cycles of length >= 3 using edges of g.  Returns (allSum, evenSum):
//   allSum  = sum over all covers of 2^{#cycles of length >= 3}
//   evenSum = same sum restricted to covers whose cycles are all even.
std::pair<CountResult, CountResult> cycle_cover_sums(const Graph &g);

// Multiset de-duplicated restriction of a set family to F.
SetFamily trace(const SetFamily &a, std::uint32_t F);
// Does the family separate all 2^n subsets by intersection sizes?
bool is_distinguishing(const SetFamily &d);
// Least family size that distinguishes [n] (exhaustive; n <= caps().mindist_n).
CountResult min_distinguishing(int n);

// |B| and the (n-1)-dimensional shadow sizes of a lattice body.
std::pair<CountResult, std::vector<CountResult>>
body_volume_and_projections(const LatticeBody &b);

// Largest family of graphs on n labeled vertices any two of which share a
// triangle (n in {3,4}); exact via max clique on the compatibility graph.
CountResult max_triangle_intersecting(int n);

} // namespace cb
