/*
 * Bound-side tests: exact comparison of integer counts against
 * scalar * prod a_i^(1/m_i) bounds, the named bound constructors, and the
 * blow-up construction.  Expected verdicts are worked out by hand in the
 * comments; everything on the decision path is integer arithmetic, so the
 * checks are equality-exact.
 */

#include "cb/bounds.hpp"
#include "cb/counts.hpp"
#include "cb/graph.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace cb;

TEST_CASE("compare_exact decides by integer arithmetic") {
    RootProductBound sqrt24;
    sqrt24.push(Int(24), 2);
    CHECK(compare_exact(Int(5), sqrt24).verdict == Verdict::AboveStrict);  // 25 > 24
    CHECK(compare_exact(Int(4), sqrt24).verdict == Verdict::BelowStrict);  // 16 < 24

    RootProductBound sqrt25;
    sqrt25.push(Int(25), 2);
    CHECK(compare_exact(Int(5), sqrt25).verdict == Verdict::Equal);

    // count 0 is below any positive bound, with -inf reported log
    CompareResult zero = compare_exact(Int(0), sqrt24);
    CHECK(zero.verdict == Verdict::BelowStrict);
    CHECK(std::isinf(zero.count_log2));
    CHECK(zero.count_log2 < 0);

    // scalar multipliers participate: (1/2) * 100^(1/2) = 5
    RootProductBound half_root;
    half_root.push(Int(100), 2);
    half_root.scalar = Rat(1) / 2;
    CHECK(compare_exact(Int(5), half_root).verdict == Verdict::Equal);
    CHECK(compare_exact(Int(6), half_root).verdict == Verdict::AboveStrict);

    // the CountResult overload agrees with the raw-integer one
    CountResult pm = perfect_matchings(make_kdd(3));
    RootProductBound six;
    six.push(Int(216), 3);  // 216^(1/3) = 6
    CHECK(compare_exact(pm, six).verdict == Verdict::Equal);

    // slack_log2 is bound minus count
    CompareResult r = compare_exact(Int(4), sqrt24);
    CHECK(r.slack_log2() == doctest::Approx(std::log2(24.0) / 2 - 2.0).epsilon(1e-12));
}

TEST_CASE("compare_bounds and validation") {
    RootProductBound a;  // 8^(1/3) = 2
    a.push(Int(8), 3);
    RootProductBound b;
    b.push(Int(2), 1);
    CHECK(compare_bounds(a, b) == Verdict::Equal);
    RootProductBound c;
    c.push(Int(9), 3);
    CHECK(compare_bounds(a, c) == Verdict::BelowStrict);
    CHECK(compare_bounds(c, a) == Verdict::AboveStrict);

    RootProductBound bad;
    CHECK_THROWS(bad.push(Int(0), 2));   // base must be >= 1
    CHECK_THROWS(bad.push(Int(2), 0));   // root must be >= 1
    RootProductBound neg;
    neg.scalar = Rat(-1);
    CHECK_THROWS(neg.validate());

    CHECK(a.log2_value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("permanent bound from row sums") {
    // rows (1,2,3): 1 * 2^(1/2) * 6^(1/3)
    RootProductBound got = bregman_bound({1, 2, 3});
    RootProductBound want;
    want.push(Int(1), 1);
    want.push(Int(2), 2);
    want.push(Int(6), 3);
    CHECK(compare_bounds(got, want) == Verdict::Equal);

    // all-ones matrices meet the bound exactly
    for (int n = 2; n <= 4; ++n) {
        ZeroOneMatrix ones = ZeroOneMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ones.set(i, j, true);
        CompareResult r = compare_exact(permanent(ones), bregman_bound(ones.row_sums()));
        CHECK(r.verdict == Verdict::Equal);
    }

    // a zero row contributes the neutral factor; the count itself is 0
    ZeroOneMatrix withzero = ZeroOneMatrix::zero(2);
    withzero.set(1, 0, true);
    withzero.set(1, 1, true);
    CHECK(compare_exact(permanent(withzero), bregman_bound(withzero.row_sums())).verdict ==
          Verdict::BelowStrict);
}

TEST_CASE("perfect-matching bound from degrees") {
    // complete bipartite: pm(K33) = 6 = (3!)^(6/6), tight
    Graph k33 = make_kdd(3);
    std::vector<int> degs(std::size_t(k33.n));
    for (int v = 0; v < k33.n; ++v) degs[std::size_t(v)] = k33.degree(v);
    CHECK(compare_exact(perfect_matchings(k33), kahn_lovasz_bound(degs)).verdict ==
          Verdict::Equal);

    // K4 is strictly below: pm = 3 < (3!)^(4/6) = 6^(2/3)
    Graph k4 = make_complete(4);
    std::vector<int> d4(4, 3);
    CHECK(compare_exact(perfect_matchings(k4), kahn_lovasz_bound(d4)).verdict ==
          Verdict::BelowStrict);
}

TEST_CASE("binomial prefix sums against the entropy exponential") {
    // n=10, alpha=1/2: lhs = sum_{i<=5} C(10,i) = 638 < 2^10
    BinomSumResult r = binom_sum_bound(10, Rat(1) / 2);
    CHECK(r.lhs == 638);
    CHECK(r.verdict == Verdict::BelowStrict);
    CHECK(r.rhs_log2 == doctest::Approx(10.0).epsilon(1e-12));

    // alpha out of range
    CHECK_THROWS((void)binom_sum_bound(10, Rat(2) / 3));
    CHECK_THROWS((void)binom_sum_bound(10, Rat(0)));
}

TEST_CASE("coin-weighing lower bounds") {
    CoinBounds cb8 = coin_lower_bounds(8);
    CHECK(cb8.simple == doctest::Approx(8.0 / std::log2(9.0)).epsilon(1e-12));
    CHECK(cb8.refined ==
          doctest::Approx(8.0 / (std::log2(8.0) / 2 + kCoinRefinedC)).epsilon(1e-12));
    // for large n the refined bound overtakes the simple one
    CoinBounds big = coin_lower_bounds(1 << 20);
    CHECK(big.refined > big.simple);
    CHECK_THROWS((void)coin_lower_bounds(1));
}

TEST_CASE("projection bound on lattice bodies") {
    // 2x3x4 box: 24 = (6*8*12)^(1/2), tight
    LatticeBody box;
    box.dim = 3;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 4; ++z) box.cells.insert({x, y, z});
    CHECK(loomis_whitney_check(box).verdict == Verdict::Equal);

    // 2D L-shape: 3 cells, both shadows have size 2, bound 4
    LatticeBody ell;
    ell.dim = 2;
    ell.cells.insert({0, 0});
    ell.cells.insert({1, 0});
    ell.cells.insert({0, 1});
    CompareResult r = loomis_whitney_check(ell);
    CHECK(r.verdict == Verdict::BelowStrict);
    CHECK(r.count_log2 == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(r.bound_log2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("injective-copies upper bound via the fractional cover") {
    // single edge: cover optimum 1, bound (2*5)^1 = 10 = labeled edges of C5
    RootProductBound b = embed_upper_bound(make_complete(2), 5);
    CHECK(compare_exact(embed_count(make_complete(2), make_cycle(5)), b).verdict ==
          Verdict::Equal);

    // triangle: cover optimum 3/2, bound (2*ell)^(3/2); at ell=3 the host K3
    // holds 6 labeled copies, strictly below 6^(3/2)
    RootProductBound tri = embed_upper_bound(make_complete(3), 3);
    CHECK(tri.log2_value() == doctest::Approx(1.5 * std::log2(6.0)).epsilon(1e-12));
    CHECK(compare_exact(embed_count(make_complete(3), make_complete(3)), tri).verdict ==
          Verdict::BelowStrict);
}

TEST_CASE("blow-up construction stays within the edge budget") {
    // triangle at ell=48: class sizes floor(sqrt(16)) = 4, edges 3*16 = 48
    BlowUp bu = hstar_build(make_complete(3), 48);
    CHECK(bu.graph.edge_count() <= 48);
    REQUIRE(bu.class_size.size() == 3);
    for (long s : bu.class_size) CHECK(s == 4);
    CHECK(bu.guaranteed.value == 64);
    // class_of is consistent with the sizes
    std::vector<long> tally(3, 0);
    for (int c : bu.class_of) ++tally[std::size_t(c)];
    for (int v = 0; v < 3; ++v) CHECK(tally[std::size_t(v)] == bu.class_size[std::size_t(v)]);
    // the guarantee is honest: at least that many injective copies exist
    CHECK(embed_count(make_complete(3), bu.graph).value >= bu.guaranteed.value);

    // a path pattern, asymmetric: the averaged weighting keeps ends symmetric
    BlowUp pu = hstar_build(make_path(3), 20);
    CHECK(pu.graph.edge_count() <= 20);
    CHECK(pu.class_size[0] == pu.class_size[2]);
    CHECK(embed_count(make_path(3), pu.graph).value >= pu.guaranteed.value);
}

TEST_CASE("bipartite base-case bounds") {
    // n=6, d=3: exponent 1, bound = base itself; K33 meets both exactly
    CHECK(compare_exact(colorings(make_kdd(3), 3), colorings_bip_bound(6, 3, 3)).verdict ==
          Verdict::Equal);
    CHECK(compare_exact(independent_sets_total(make_kdd(3)),
                        homs_bip_bound(6, 3, make_h_ind()))
              .verdict == Verdict::Equal);
    // n=12: two disjoint K33 blocks still meet it
    CHECK(compare_exact(colorings(make_knd(6, 3), 3), colorings_bip_bound(12, 3, 3)).verdict ==
          Verdict::Equal);
    // the 3-cube, the other 3-regular bipartite graph on 8 vertices, is below
    Graph q3 = Graph::empty(8, false);
    for (int u = 0; u < 8; ++u)
        for (int bit = 0; bit < 3; ++bit)
            if (u < (u ^ (1 << bit))) q3.add_edge(u, u ^ (1 << bit));
    CHECK(compare_exact(colorings(q3, 3), colorings_bip_bound(8, 3, 3)).verdict ==
          Verdict::BelowStrict);
}

TEST_CASE("vertex-ordered bound for non-bipartite hosts") {
    // K4 into K3: count is 0 (K4 is not 3-colorable), bound is positive
    Graph k4 = make_complete(4);
    std::vector<int> order = {0, 1, 2, 3};
    RootProductBound b = nonbip_order_bound(k4, order, make_complete(3));
    CompareResult r = compare_exact(hom_count(k4, make_complete(3)), b);
    CHECK(r.verdict == Verdict::BelowStrict);
    CHECK(std::isinf(r.count_log2));
    // back-degrees under the identity order are 0,1,2,3:
    // bound^3 = 1 * 6 * 18 * 42
    RootProductBound want;
    want.push(Int(1) * 6 * 18 * 42, 3);
    CHECK(compare_bounds(b, want) == Verdict::Equal);

    // irregular hosts and non-permutations are rejected
    CHECK_THROWS((void)nonbip_order_bound(make_path(4), order, make_complete(3)));
    std::vector<int> notperm = {0, 0, 1, 2};
    CHECK_THROWS((void)nonbip_order_bound(k4, notperm, make_complete(3)));
}

TEST_CASE("asymptotic matching reference value") {
    // n(alpha log2 d + 2H(alpha) + alpha log2(alpha/e)) at n=12, d=3, alpha=1/2:
    // H(1/2)=1, so 12*(log2(3)/2 + 2 - 1/2 - log2(e)/2)
    double want = 12.0 * (std::log2(3.0) / 2 + 1.5 - std::log2(std::exp(1.0)) / 2);
    CHECK(matching_asymptotic_reference(12, 3, 0.5) == doctest::Approx(want).epsilon(1e-12));
    CHECK_THROWS((void)matching_asymptotic_reference(12, 3, 0.0));
    CHECK_THROWS((void)matching_asymptotic_reference(12, 1, 0.5));
}

TEST_CASE("bound JSON round trip") {
    RootProductBound b;
    b.push(Int(24), 2);
    b.push(Int(6), 3);
    b.scalar = Rat(3) / 7;
    nlohmann::ordered_json j = bound_to_json(b);
    RootProductBound back = bound_from_json(j);
    REQUIRE(back.factors.size() == 2);
    CHECK(back.factors[0].first == 24);
    CHECK(back.factors[0].second == 2);
    CHECK(back.factors[1].first == 6);
    CHECK(back.factors[1].second == 3);
    CHECK(back.scalar == Rat(3) / 7);
    CHECK(compare_bounds(b, back) == Verdict::Equal);
}
