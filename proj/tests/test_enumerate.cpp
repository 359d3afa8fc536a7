/*
 * Enumeration module tests.
 *
 * The key cross-check is an independent brute-force isomorphism oracle for
 * small n: enumerate every labeled graph, deduplicate by trying all vertex
 * permutations, and compare class counts with the library enumerators.
 * Known sequence values for loop-free simple graphs (classes up to
 * isomorphism): 1, 2, 4, 11, 34, 156 for n = 1..6; connected classes:
 * 1, 1, 2, 6, 21, 112.
 */

#include "cb/caps.hpp"
#include "cb/enumerate.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

using namespace cb;

namespace {

// Labeled adjacency bitmask over vertex pairs (i<j), n <= 6.
int pair_index(int i, int j, int n) {
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == i && b == j) return idx;
            ++idx;
        }
    return -1;
}

Graph graph_of_mask(std::uint32_t mask, int n) {
    Graph g = Graph::empty(n, false);
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (mask >> idx & 1) g.add_edge(a, b);
            ++idx;
        }
    return g;
}

// Minimal mask over all relabelings: an isomorphism invariant computed
// without touching the library's canonical form.
std::uint32_t min_relabeling(std::uint32_t mask, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    std::uint32_t best = mask;
    do {
        std::uint32_t imask = 0;
        int idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int pa = perm[std::size_t(a)], pb = perm[std::size_t(b)];
                if (pa > pb) std::swap(pa, pb);
                if (mask >> pair_index(pa, pb, n) & 1) imask |= std::uint32_t(1) << idx;
                ++idx;
            }
        best = std::min(best, imask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("class counts match the brute-force oracle for n <= 5") {
    const long expected_all[] = {1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        std::set<std::uint32_t> classes;
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs); ++mask)
            classes.insert(min_relabeling(mask, n));
        CHECK(long(classes.size()) == expected_all[n - 1]);
        CHECK(long(enumerate_all(n).size()) == long(classes.size()));
    }
}

TEST_CASE("frozen class counts at larger sizes") {
    CHECK(enumerate_all(6).size() == 156);
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
}

TEST_CASE("regular enumeration: known families") {
    CHECK(enumerate_regular(4, 3).size() == 1);   // K4
    CHECK(enumerate_regular(5, 2).size() == 1);   // C5
    CHECK(enumerate_regular(6, 2).size() == 2);   // C6 and C3+C3
    CHECK(enumerate_regular(6, 3).size() == 2);   // K33 and the prism
    CHECK(enumerate_regular(8, 3).size() == 6);   // 5 connected cubics + K4+K4
    CHECK(enumerate_regular(5, 0).size() == 1);   // empty graph
    // nd odd is a parity error, not an empty family
    CHECK_THROWS_AS((void)enumerate_regular(5, 3), std::invalid_argument);
    for (const Graph &g : enumerate_regular(8, 3)) {
        int d = 0;
        CHECK(g.is_regular(&d));
        CHECK(d == 3);
        CHECK(g.n == 8);
    }
    // K4 + K4 (disconnected) really is in the list
    bool has_disconnected = false;
    for (const Graph &g : enumerate_regular(8, 3))
        if (!g.is_connected()) has_disconnected = true;
    CHECK(has_disconnected);
}

TEST_CASE("labeled-count identity: sum over classes of n!/|Aut| ") {
    // the number of labeled cubic graphs on 8 vertices is 19355
    Int total = 0;
    for (const Graph &g : enumerate_regular(8, 3))
        total += factorial(8) / Int(automorphisms(g).size());
    CHECK(total == 19355);
}

TEST_CASE("bipartite regular enumeration") {
    CHECK(enumerate_bipartite_regular(3, 3).size() == 1);  // K33 only
    CHECK(enumerate_bipartite_regular(2, 2).size() == 1);  // K22 only
    CHECK(enumerate_bipartite_regular(4, 1).size() == 1);  // perfect matching
    for (const Graph &g : enumerate_bipartite_regular(4, 2)) {
        int d = 0;
        CHECK(g.is_regular(&d));
        CHECK(d == 2);
        CHECK(g.n == 8);
        CHECK(g.bipartition.has_value());
    }
    // 2-regular bipartite on 4+4: C8 and C4+C4
    CHECK(enumerate_bipartite_regular(4, 2).size() == 2);
    // keys are distinct and stable
    std::set<std::string> keys;
    for (const Graph &g : enumerate_bipartite_regular(4, 3))
        keys.insert(bipartite_canonical_key(g));
    CHECK(keys.size() == enumerate_bipartite_regular(4, 3).size());
}

TEST_CASE("canonical form: relabeling invariance and discrimination") {
    Graph c6 = make_cycle(6);
    // relabel C6 by an arbitrary permutation
    int perm[6] = {3, 0, 5, 1, 4, 2};
    Graph relabeled = Graph::empty(6, false);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (c6.has_edge(u, v)) relabeled.add_edge(perm[u], perm[v]);
    CHECK(canonical_form(c6) == canonical_form(relabeled));
    CHECK(isomorphic(c6, relabeled));

    Graph two_c3 = Graph::empty(6, false);
    for (int base : {0, 3}) {
        two_c3.add_edge(base, base + 1);
        two_c3.add_edge(base + 1, base + 2);
        two_c3.add_edge(base, base + 2);
    }
    CHECK_FALSE(isomorphic(c6, two_c3));          // same degree sequence, different graphs

    // K33 and the prism are the two cubic classes on 6 vertices
    std::vector<Graph> cubic6 = enumerate_regular(6, 3);
    int k33_hits = 0;
    for (const Graph &g : cubic6)
        if (isomorphic(g, make_kdd(3))) ++k33_hits;
    CHECK(k33_hits == 1);
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms(make_complete(4)).size() == 24);
    CHECK(automorphisms(make_cycle(5)).size() == 10);
    CHECK(automorphisms(make_kdd(3)).size() == 72);   // (3!)^2 * 2
    CHECK(automorphisms(make_path(4)).size() == 2);
    CHECK(automorphisms(make_empty_graph(4)).size() == 24);
    // the fully looped path 0-1-2 keeps only the end swap
    CHECK(automorphisms(make_h_wr()).size() == 2);
}

TEST_CASE("enumerators reject out-of-cap sizes") {
    CHECK_THROWS_AS((void)enumerate_all(caps().enum_all_n + 1), std::invalid_argument);
    CHECK_THROWS_AS((void)canonical_form(Graph::empty(caps().canon_n + 1, false)),
                    std::invalid_argument);
}
