/*
 * Exact LP tests.
 *
 * The simplex solver is checked on tiny hand-solvable programs, and the two
 * graph relaxations are checked by self-certification: the returned weights
 * are verified feasible for their own LP, and the two objectives are checked
 * equal.  Since the fractional edge cover (minimize) and fractional vertex
 * packing (maximize) are LP duals, a feasible pair with equal objectives
 * certifies both optima by weak duality -- no external solver needed.
 */

#include "cb/bounds.hpp"
#include "cb/counts.hpp"
#include "cb/enumerate.hpp"
#include "cb/lp.hpp"
#include "cb/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace cb;

namespace {

// largest index with a nonzero coefficient (independence/matching number)
int poly_degree(const std::vector<Int> &poly) {
    int deg = 0;
    for (std::size_t t = 0; t < poly.size(); ++t)
        if (poly[t] != 0) deg = int(t);
    return deg;
}

// check the returned weights satisfy their own constraints exactly
void certify_pair(const Graph &g) {
    FractionalWeights cov = fractional_cover(g);
    FractionalWeights ind = fractional_independence(g);

    REQUIRE(cov.on_edges);
    REQUIRE_FALSE(ind.on_edges);
    REQUIRE(cov.weights.size() == cov.edges.size());
    REQUIRE(int(ind.weights.size()) == g.n);

    Rat cov_sum = 0;
    for (const Rat &w : cov.weights) {
        CHECK(w >= 0);
        CHECK(w <= 1);
        cov_sum += w;
    }
    CHECK(cov_sum == cov.objective);
    for (int v = 0; v < g.n; ++v) {
        Rat at_v = 0;
        for (std::size_t e = 0; e < cov.edges.size(); ++e)
            if (cov.edges[e].first == v || cov.edges[e].second == v)
                at_v += cov.weights[e];
        CHECK(at_v >= 1);
    }

    Rat ind_sum = 0;
    for (const Rat &x : ind.weights) {
        CHECK(x >= 0);
        CHECK(x <= 1);
        ind_sum += x;
    }
    CHECK(ind_sum == ind.objective);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v))
                CHECK(ind.weights[std::size_t(u)] + ind.weights[std::size_t(v)] <= 1);

    // weak duality: equal objectives certify both LPs optimal
    CHECK(cov.objective == ind.objective);

    // sandwich against the integral invariants:
    // independence number <= fractional optimum <= n - matching number
    int alpha = poly_degree(independence_polynomial(g));
    int nu = poly_degree(matching_polynomial(g));
    CHECK(Rat(alpha) <= ind.objective);
    CHECK(cov.objective <= Rat(g.n - nu));
}

}  // namespace

TEST_CASE("simplex on hand-solved programs") {
    SUBCASE("bounded maximum at an interior vertex") {
        // max x+y s.t. x+2y <= 4, 3x+y <= 6  ->  (8/5, 6/5), value 14/5
        LinearProgram lp;
        lp.nvars = 2;
        lp.objective = {Rat(1), Rat(1)};
        lp.add_row({Rat(1), Rat(2)}, Rel::LessEq, Rat(4));
        lp.add_row({Rat(3), Rat(1)}, Rel::LessEq, Rat(6));
        LpSolution s = solve_lp(lp);
        REQUIRE(s.feasible);
        REQUIRE(s.bounded);
        CHECK(s.value == Rat(14) / 5);
        CHECK(s.x[0] == Rat(8) / 5);
        CHECK(s.x[1] == Rat(6) / 5);
    }
    SUBCASE("infeasible program") {
        LinearProgram lp;
        lp.nvars = 1;
        lp.objective = {Rat(1)};
        lp.add_row({Rat(1)}, Rel::LessEq, Rat(-1));  // x <= -1 with x >= 0
        LpSolution s = solve_lp(lp);
        CHECK_FALSE(s.feasible);
    }
    SUBCASE("unbounded program") {
        // max x s.t. x - y <= 1: push x and y up together forever
        LinearProgram lp;
        lp.nvars = 2;
        lp.objective = {Rat(1), Rat(0)};
        lp.add_row({Rat(1), Rat(-1)}, Rel::LessEq, Rat(1));
        LpSolution s = solve_lp(lp);
        REQUIRE(s.feasible);
        CHECK_FALSE(s.bounded);
    }
    SUBCASE("equality and lower-bound rows") {
        // max x s.t. x + y == 2, y <= 1/2  ->  x = 2 at y = 0
        LinearProgram lp;
        lp.nvars = 2;
        lp.objective = {Rat(1), Rat(0)};
        lp.add_row({Rat(1), Rat(1)}, Rel::Eq, Rat(2));
        lp.add_row({Rat(0), Rat(1)}, Rel::LessEq, Rat(1) / 2);
        LpSolution s = solve_lp(lp);
        REQUIRE(s.feasible);
        REQUIRE(s.bounded);
        CHECK(s.value == 2);

        // minimize x+y s.t. x+y >= 3, via negated objective
        LinearProgram lp2;
        lp2.nvars = 2;
        lp2.objective = {Rat(-1), Rat(-1)};
        lp2.add_row({Rat(1), Rat(1)}, Rel::GreaterEq, Rat(3));
        LpSolution s2 = solve_lp(lp2);
        REQUIRE(s2.feasible);
        REQUIRE(s2.bounded);
        CHECK(s2.value == -3);
    }
}

TEST_CASE("pinned fractional optima for the named graphs") {
    CHECK(fractional_cover(make_complete(3)).objective == Rat(3) / 2);
    CHECK(fractional_independence(make_cycle(5)).objective == Rat(5) / 2);
    CHECK(fractional_cover(make_cycle(5)).objective == Rat(5) / 2);
    CHECK(fractional_cover(make_kdd(3)).objective == 3);
    CHECK(fractional_independence(make_kdd(3)).objective == 3);
    CHECK(fractional_cover(make_path(4)).objective == 2);
    CHECK(fractional_independence(make_path(4)).objective == 2);
    // K3 cover weights: 1/2 on every edge
    FractionalWeights k3 = fractional_cover(make_complete(3));
    REQUIRE(k3.edges.size() == 3);
    for (const Rat &w : k3.weights) CHECK(w == Rat(1) / 2);
}

TEST_CASE("self-certified optimality on all small connected graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph &g : enumerate_connected(n)) certify_pair(g);
}

TEST_CASE("self-certified optimality on random graphs without isolated vertices") {
    Rng rng(4242);
    int done = 0;
    for (int it = 0; done < 25; ++it) {
        REQUIRE(it < 400);
        Rng fork = rng.fork(std::uint64_t(it));
        int n = 2 + int(fork.below(6));
        Graph g = Graph::empty(n, false);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (fork.below(8) < 4) g.add_edge(u, v);
        bool isolated = false;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0) isolated = true;
        if (isolated) continue;  // the edge-cover LP is infeasible there
        certify_pair(g);
        ++done;
    }
}
