/*
 * Entropy module tests.
 *
 * Reference values are computed from the definition H = -sum p log2 p by
 * hand or via an independent summation in the test itself, never by calling
 * the function under test twice.
 */

#include "cb/entropy.hpp"
#include "cb/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace cb;

namespace {

// Independent H computation straight from the table.
double oracle_entropy(const JointDistribution &j) {
    double h = 0.0;
    for (const Rat &p : j.table) {
        if (p == 0) continue;
        double pd = rat_to_double(p);
        h -= pd * std::log2(pd);
    }
    return h;
}

JointDistribution pair_joint(const std::vector<long> &w, int r0, int r1) {
    return JointDistribution::from_weights({r0, r1}, w);
}

}  // namespace

TEST_CASE("entropy of basic distributions") {
    CHECK(entropy(FiniteDistribution::uniform(1)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(entropy(FiniteDistribution::uniform(2)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entropy(FiniteDistribution::uniform(8)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(entropy(FiniteDistribution::uniform(6)) ==
          doctest::Approx(std::log2(6.0)).epsilon(1e-14));
    // point mass: zero surprise
    CHECK(entropy(FiniteDistribution::bernoulli(Rat(0))) == doctest::Approx(0.0));
    CHECK(entropy(FiniteDistribution::bernoulli(Rat(1))) == doctest::Approx(0.0));
    // H(1/4) = 2 - (3/4)log2(3)
    double hq = 2.0 - 0.75 * std::log2(3.0);
    CHECK(entropy(FiniteDistribution::bernoulli(Rat(1, 4))) ==
          doctest::Approx(hq).epsilon(1e-14));
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
    CHECK(binary_entropy(1.0) == doctest::Approx(0.0));
    CHECK(binary_entropy(0.25) == doctest::Approx(hq).epsilon(1e-14));
    CHECK(binary_entropy(0.25) == doctest::Approx(binary_entropy(0.75)).epsilon(1e-14));
}

TEST_CASE("joint entropy, marginals, zero cells") {
    // uniform 2x3: H = log2 6, marginals log2 2 and log2 3
    JointDistribution u = JointDistribution::uniform({2, 3});
    CHECK(entropy(u) == doctest::Approx(std::log2(6.0)).epsilon(1e-14));
    CHECK(entropy_marginal(u, 0b01) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(entropy_marginal(u, 0b10) == doctest::Approx(std::log2(3.0)).epsilon(1e-14));
    CHECK(entropy_marginal(u, 0) == doctest::Approx(0.0));

    // zero-probability cells contribute nothing (0 log 0 = 0)
    JointDistribution z = pair_joint({1, 0, 0, 1}, 2, 2);
    CHECK(entropy(z) == doctest::Approx(1.0).epsilon(1e-14));

    // weights are normalized: (1,1,2) -> (1/4,1/4,1/2)
    JointDistribution w = JointDistribution::from_weights({3}, {1, 1, 2});
    CHECK(w.table[0] == Rat(1, 4));
    CHECK(w.table[2] == Rat(1, 2));
    CHECK(entropy(w) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(entropy(w) == doctest::Approx(oracle_entropy(w)).epsilon(1e-14));
}

TEST_CASE("conditional entropy: correlated, independent, and invalid masks") {
    // perfectly correlated pair: H(X|Y) = 0, H(X,Y) = H(X) = 1
    JointDistribution corr = pair_joint({1, 0, 0, 1}, 2, 2);
    CHECK(conditional_entropy(corr, 0b01, 0b10) == doctest::Approx(0.0).epsilon(1e-12));

    // independent pair: H(X|Y) = H(X)
    JointDistribution ind = pair_joint({1, 1, 1, 1}, 2, 2);
    CHECK(conditional_entropy(ind, 0b01, 0b10) == doctest::Approx(1.0).epsilon(1e-12));
    // conditioning on nothing gives the plain entropy
    CHECK(conditional_entropy(ind, 0b11, 0) == doctest::Approx(2.0).epsilon(1e-12));

    // a noisy channel: X uniform bit, Y = X with prob 3/4
    JointDistribution noisy = pair_joint({3, 1, 1, 3}, 2, 2);
    double hxy = oracle_entropy(noisy);
    double hy = entropy_marginal(noisy, 0b10);
    CHECK(conditional_entropy(noisy, 0b01, 0b10) ==
          doctest::Approx(hxy - hy).epsilon(1e-12));

    // overlapping masks are a caller bug, not a value
    CHECK_THROWS_AS((void)conditional_entropy(ind, 0b01, 0b01), std::invalid_argument);
    CHECK_THROWS_AS((void)conditional_entropy(ind, 0b11, 0b10), std::invalid_argument);
}

TEST_CASE("property checkers accept random joints and reject nothing valid") {
    Rng rng(987654321);
    for (int it = 0; it < 200; ++it) {
        Rng fork = rng.fork(std::uint64_t(it));
        int arity = 1 + int(fork.below(4));
        std::vector<int> ranges(static_cast<std::size_t>(arity));
        std::size_t cells = 1;
        for (int &x : ranges) {
            x = 1 + int(fork.below(4));
            cells *= std::size_t(x);
        }
        std::vector<long> weights(cells);
        long tot = 0;
        for (long &v : weights) {
            v = long(fork.below(9));
            tot += v;
        }
        if (!tot) weights[0] = 1;
        JointDistribution j = JointDistribution::from_weights(ranges, weights);
        CHECK(check_chain_rule(j).ok);
        CHECK(check_subadditivity(j).ok);
        CHECK(check_dropping(j).ok);
        CHECK(check_conditional_variants(j).ok);
        CHECK(entropy(j) == doctest::Approx(oracle_entropy(j)).epsilon(1e-10));
    }
}

TEST_CASE("covering inequality: equality and strictness cases") {
    // independent uniform bits, partition cover {X},{Y}: exact equality
    JointDistribution ind = pair_joint({1, 1, 1, 1}, 2, 2);
    CoverFamily part;
    part.n = 2;
    part.members = {0b01, 0b10};
    CheckResult c = check_shearer(ind, part);
    CHECK(c.ok);
    CHECK(std::fabs(c.max_violation) < 1e-12);

    // Han family on a correlated triple
    JointDistribution tri = JointDistribution::from_weights(
        {2, 2, 2}, {3, 1, 1, 2, 2, 1, 1, 3});
    CoverFamily han;
    han.n = 3;
    han.members = {0b110, 0b101, 0b011};
    CHECK(check_shearer(tri, han).ok);

    // cover with depth 0 must be rejected
    CoverFamily bad;
    bad.n = 2;
    bad.members = {0b01};
    CHECK_THROWS_AS((void)check_shearer(ind, bad), std::invalid_argument);

    // conditional version along a chain order
    PartialOrder chain = PartialOrder::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(check_conditional_shearer(tri, han, chain).ok);
    PartialOrder empty_ord = PartialOrder::from_pairs(3, {});
    CHECK(check_conditional_shearer(tri, han, empty_ord).ok);
}

TEST_CASE("partial order construction") {
    PartialOrder p = PartialOrder::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(p.pred[0] == 0);
    CHECK(p.pred[1] == 0b001);
    CHECK(p.pred[2] == 0b011);  // transitive closure pulls 0 below 2
    CHECK(p.common_pred(0b110) == 0b001);
    CHECK_THROWS_AS(PartialOrder::from_pairs(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("binomial tail helpers") {
    // H-sum identity behind the tail bound: log2 C(2m,m) <= 2m H(1/2) = 2m
    CHECK(binomial_half_entropy(4) <= 8.0 + 1e-12);
    for (unsigned n : {16u, 64u}) {
        for (int c = 0; c <= 3; ++c) CHECK(chernoff_tail_check(n, double(c)).ok);
    }
}

TEST_CASE("surprise axioms on a sample") {
    CHECK(check_surprise_axioms({0.5, 0.25, 0.125, 1.0, 0.75}).ok);
}

TEST_CASE("joint distribution I/O round trip is byte stable") {
    JointDistribution j = JointDistribution::from_weights({2, 3}, {1, 0, 2, 3, 0, 4});
    std::string text = format_joint(j);
    JointDistribution back = parse_joint(text);
    CHECK(back.arity == j.arity);
    CHECK(back.ranges == j.ranges);
    CHECK(back.table == j.table);
    CHECK(format_joint(back) == text);
    // rationals render reduced
    CHECK(format_rational(Rat(2, 4)) == "1/2");
    CHECK(parse_rational("3/9") == Rat(1, 3));
}
