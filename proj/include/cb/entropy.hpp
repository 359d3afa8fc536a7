#pragma once
/*
 * Base-2 entropy calculus over exact-rational distributions, plus property
 * checkers used by the randomized verification sweeps.
 *
 * Conventions: all logs are base 2, 0*log(0) = 0, and conditional entropy
 * H(X_A | X_B) is evaluated by the expectation formula (the average over
 * conditioning outcomes b with p(b) > 0 of the entropy of the conditional
 * table), not by the chain-rule difference -- the chain rule is one of the
 * identities under test, so it must not be baked into the evaluator.
 *
 * Probabilities stay exact rationals throughout; floating point enters only
 * at the final log2, so checker tolerances (default 1e-9) are honest slack
 * on the inequality side rather than accumulated arithmetic fuzz.
 */

#include "cb/distribution.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cb {

inline constexpr double kDefaultTol = 1e-9;

double entropy(const FiniteDistribution &d);
double entropy(const JointDistribution &j);                   // H(X_1..X_n)
double entropy_marginal(const JointDistribution &j, std::uint32_t mask);
double binary_entropy(double p);                              // H(p), p in [0,1]
// H(X_A | X_B); A and B are disjoint coordinate masks, B may be empty.
double conditional_entropy(const JointDistribution &j, std::uint32_t A,
                           std::uint32_t B);

// Outcome of one property check: ok iff the worst signed violation is within
// tolerance.  `max_violation` is the worst value of (lhs - rhs) for
// inequalities lhs <= rhs, or |lhs - rhs| for identities.
struct CheckResult {
    bool ok = true;
    double max_violation = 0.0;
    std::string detail;
};

// H(X) = sum_i H(X_i | X_1..X_{i-1})
CheckResult check_chain_rule(const JointDistribution &j, double tol = kDefaultTol);
// H(X) <= sum_i H(X_i)
CheckResult check_subadditivity(const JointDistribution &j, double tol = kDefaultTol);
// H(X_A | X_B, X_C) <= H(X_A | X_B) over all disjoint A,B,C (A,C nonempty);
// B empty covers the unconditioned form H(X_A | X_C) <= H(X_A).
CheckResult check_dropping(const JointDistribution &j, double tol = kDefaultTol);
// Conditional variants, same machinery with an extra conditioning mask Z:
// conditional maximality, conditional chain rule, conditional subadditivity.
CheckResult check_conditional_variants(const JointDistribution &j,
                                       double tol = kDefaultTol);
// H(X) <= (1/t) * sum_F H(X_F) where t = F.depth() (rejects t == 0).
CheckResult check_shearer(const JointDistribution &j, const CoverFamily &F,
                          double tol = kDefaultTol);
// H(X) <= (1/t) * sum_F H(X_F | X_{<F}) where <F is the set of coordinates
// strictly below every member of F in the partial order.
CheckResult check_conditional_shearer(const JointDistribution &j,
                                      const CoverFamily &F, const PartialOrder &ord,
                                      double tol = kDefaultTol);

// Entropy of Binomial(m, 1/2), from exact binomial probabilities.
double binomial_half_entropy(unsigned m);

// Exact tail bound check: Pr(|X - n/2| >= c*sqrt(n)/2) <= 2^(1 - c^2/2)
// with X ~ Binomial(n, 1/2); the tail is summed exactly.
CheckResult chernoff_tail_check(unsigned n, double c, double tol = kDefaultTol);

// Surprise axioms for S(p) = -log2 p on a sample of probabilities in (0,1]:
// S(1) = 0, S(1/2) = 1, antitone in p, additive over products.
CheckResult check_surprise_axioms(const std::vector<double> &sample,
                                  double tol = 1e-12);

} // namespace cb
