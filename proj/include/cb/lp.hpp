// Exact linear programming over the rationals.
//
// A small dense two-phase simplex, pivoting by Bland's rule.  With exact
// rational arithmetic Bland's rule guarantees termination, and the optima
// we extract are exact vertices of the feasible polytope -- no tolerances
// anywhere.  The LPs in this project are tiny (graphs with at most a few
// dozen vertices and edges), so a dense tableau is entirely adequate.
//
// Conventions: maximize c.x subject to row constraints A_i.x REL_i b_i with
// REL in {<=, ==, >=} and x >= 0.  Minimization is done by negating c.
#pragma once

#include "cb/bigint.hpp"

#include <vector>

namespace cb {

enum class Rel { LessEq, Eq, GreaterEq };

struct LinearProgram {
    int nvars = 0;
    std::vector<std::vector<Rat>> rows; // each of length nvars
    std::vector<Rat> rhs;
    std::vector<Rel> rel;
    std::vector<Rat> objective; // length nvars, maximized

    void add_row(std::vector<Rat> a, Rel r, Rat b);
    void validate() const;
};

struct LpSolution {
    bool feasible = false;
    bool bounded = false;
    Rat value = 0;          // objective at the optimum (if feasible && bounded)
    std::vector<Rat> x;     // an optimal vertex
};

LpSolution solve_lp(const LinearProgram &lp);

} // namespace cb
