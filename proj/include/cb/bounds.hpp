// Root-product bounds and their exact comparison against counts.
//
// Every inequality this project checks has a right-hand side of the form
//     scalar * prod_i a_i^(1/m_i)
// with integer bases a_i >= 1 and integer root denominators m_i >= 1.  Such a
// bound can be compared against an integer count c exactly: raise both sides
// to M = lcm(m_i) and compare
//     c^M * den(scalar)^M   vs   num(scalar)^M * prod_i a_i^(M/m_i)
// in arbitrary-precision integers.  No floating point sits on the decision
// path; log2 values are computed only for reporting slack.  M is capped so a
// degenerate mix of root denominators fails loudly instead of allocating
// astronomic integers -- the verification families are built to stay far
// below the cap.
//
// The fractional cover / independence weights come from the exact-rational
// simplex in lp.hpp, so LP objectives are exact rationals too and the duality
// identity (cover optimum == independence optimum) can be asserted with `==`.
#pragma once

#include "cb/bigint.hpp"
#include "cb/counts.hpp"
#include "cb/graph.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cb {

enum class Verdict { BelowStrict, Equal, AboveStrict };
std::string verdict_name(Verdict v);

struct RootProductBound {
    std::vector<std::pair<Int, long>> factors; // (base >= 1, root denominator >= 1)
    Rat scalar = 1;                            // positive rational multiplier

    void validate() const;
    double log2_value() const;
    void push(Int base, long root); // validates the single factor
};

struct CompareResult {
    Verdict verdict = Verdict::Equal;
    double count_log2 = 0.0; // -inf for count 0
    double bound_log2 = 0.0;
    double slack_log2() const { return bound_log2 - count_log2; }
};

CompareResult compare_exact(const Int &count, const RootProductBound &bound);
CompareResult compare_exact(const CountResult &count, const RootProductBound &bound);
// Exact three-way comparison of two bounds (same mechanism, both sides raised
// to the common exponent).
Verdict compare_bounds(const RootProductBound &a, const RootProductBound &b);

nlohmann::ordered_json bound_to_json(const RootProductBound &b);
RootProductBound bound_from_json(const nlohmann::json &j);

// prod_i (d_i!)^(1/d_i) over row sums, resp. prod_i (d_i!)^(1/2d_i) over
// degrees.  A zero entry contributes the neutral factor (1,1); the caller is
// responsible for noticing that a zero row forces the count itself to 0.
RootProductBound bregman_bound(const std::vector<int> &row_sums);
RootProductBound kahn_lovasz_bound(const std::vector<int> &degrees);

// sum_{i <= alpha*n} C(n,i)  vs  2^(H(alpha)*n), 0 < alpha <= 1/2.  The cutoff
// index is computed from the exact rational alpha; the transcendental right
// side is evaluated in floating point with a symmetric certainty band, so
// AboveStrict is only ever reported when the violation is real.
struct BinomSumResult {
    Verdict verdict = Verdict::Equal; // Equal here means "within the band"
    Int lhs = 0;
    double lhs_log2 = 0.0;
    double rhs_log2 = 0.0; // H(alpha)*n
};
BinomSumResult binom_sum_bound(int n, const Rat &alpha);

// Lower bounds for the minimum size of a distinguishing family on n elements:
// simple = n / log2(n+1); refined = n / (log2(n)/2 + C) with the pinned
// constant below (the refinement only asserts existence of some constant; the
// pin is validated empirically in the test suite).
inline constexpr double kCoinRefinedC = 1.2;
struct CoinBounds {
    double simple = 0.0;
    double refined = 0.0;
};
CoinBounds coin_lower_bounds(long n);

// |B| vs prod_j |proj_j(B)|^(1/(dim-1)), compared exactly.
CompareResult loomis_whitney_check(const LatticeBody &b);

// Exact-rational LP optima for the two covering/packing relaxations.
struct FractionalWeights {
    bool on_edges = false;                  // true: weight per edge, false: per vertex
    std::vector<std::pair<int, int>> edges; // edge list (u < v, ascending) when on_edges
    std::vector<Rat> weights;
    Rat objective = 0;
};
// minimize sum_e w_e  s.t.  sum_{e : v in e} w_e >= 1 for all v, 0 <= w <= 1
FractionalWeights fractional_cover(const Graph &h);
// maximize sum_v x_v  s.t.  x_u + x_v <= 1 for all edges uv, 0 <= x <= 1
FractionalWeights fractional_independence(const Graph &h);

// (2*ell)^(cover optimum), the injective-copies bound for an ell-edge host.
RootProductBound embed_upper_bound(const Graph &h, long ell);

// Blow-up of h with class sizes floor((ell/|E(h)|)^(psi_v)) where psi is an
// optimal fractional independence weighting averaged over the automorphism
// group of h (the average of optima is optimal, and symmetry keeps the class
// sizes canonical).  Guarantees |E| <= ell; `guaranteed` = prod of class
// sizes, a lower bound on the number of injective copies of h.
struct BlowUp {
    Graph graph;
    std::vector<int> class_of;   // blow-up vertex -> pattern vertex
    std::vector<long> class_size; // per pattern vertex
    CountResult guaranteed;
};
BlowUp hstar_build(const Graph &h, long ell);

// Bounds on counts over n-vertex d-regular graphs in terms of the complete
// bipartite base case: base^(n/2d) with the base computed by the closed-form
// counters.  The exponent n/2d is reduced before encoding.
RootProductBound colorings_bip_bound(long n, int d, int q);
RootProductBound homs_bip_bound(long n, int d, const Graph &h);

// prod_v hom(K_{p(v),p(v)}, h)^(1/d) where p(v) counts neighbours of v that
// come earlier in `order`.  hom(K_{0,0}, h) = 1 by the empty-product
// convention.  When h = K_3 the relaxed form prod (6*2^p(v))^(1/d) is
// asserted against its closed form 2^(n/2) * 6^(n/d), which holds because
// sum_v p(v) = |E|.
RootProductBound nonbip_order_bound(const Graph &g, const std::vector<int> &order,
                                    const Graph &h);

// n * (alpha*log2(d) + 2H(alpha) + alpha*log2(alpha/e)); reference value for
// gap reports against exact log2 of the matching counts, never a verdict.
double matching_asymptotic_reference(long n, int d, double alpha);

} // namespace cb
