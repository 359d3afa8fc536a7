#include "cb/enumerate.hpp"

#include "cb/caps.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace cb {

/*
 * Minimal-encoding search.  Position k of an ordering contributes the code
 * (adjacency bits towards positions 0..k-1) | (loop bit << k); the encoding
 * of an ordering is the sequence of codes.  We search all orderings with the
 * classic prune: a branch survives only while its code sequence is <= the
 * best sequence found so far, and on a strict improvement the best suffix is
 * reset.  Ties must be explored, so highly symmetric graphs cost about
 * |Aut(G)| full descents -- fine at the supported sizes.
 */
std::string canonical_form(const Graph &g) {
    g.validate();
    const int n = g.n;
    if (n > caps().canon_n)
        throw std::invalid_argument("canonical_form: graph larger than supported cap");
    std::ostringstream os;
    os << 'g' << n << ':';
    if (n == 0) return os.str();

    std::vector<std::uint32_t> best(static_cast<std::size_t>(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    auto code_of = [&](int k, int v) {
        std::uint32_t code = 0;
        for (int i = 0; i < k; ++i)
            if (g.has_edge(perm[std::size_t(i)], v)) code |= std::uint32_t(1) << i;
        if (g.has_loop(v)) code |= std::uint32_t(1) << k;
        return code;
    };
    for (int k = 0; k < n; ++k) { // seed with the identity ordering
        perm[std::size_t(k)] = k;
        best[std::size_t(k)] = code_of(k, k);
    }

    std::vector<char> used(std::size_t(n), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) return;
        for (int v = 0; v < n; ++v) {
            if (used[std::size_t(v)]) continue;
            std::uint32_t code = code_of(k, v);
            if (code > best[std::size_t(k)]) continue;
            if (code < best[std::size_t(k)]) {
                best[std::size_t(k)] = code;
                for (int i = k + 1; i < n; ++i) best[std::size_t(i)] = ~std::uint32_t(0);
            }
            perm[std::size_t(k)] = v;
            used[std::size_t(v)] = 1;
            rec(k + 1);
            used[std::size_t(v)] = 0;
        }
    };
    rec(0);

    for (int k = 0; k < n; ++k) os << best[std::size_t(k)] << (k + 1 < n ? "," : "");
    return os.str();
}

bool isomorphic(const Graph &a, const Graph &b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const Graph &g) {
    g.validate();
    const int n = g.n;
    if (n > caps().canon_n)
        throw std::invalid_argument("automorphisms: graph larger than supported cap");
    std::vector<std::vector<int>> out;
    std::vector<int> perm(std::size_t(n), -1);
    std::vector<char> used(std::size_t(n), 0);
    // map vertex k -> perm[k], checking adjacency and loops against 0..k-1
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(perm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[std::size_t(v)]) continue;
            if (g.has_loop(k) != g.has_loop(v)) continue;
            if (g.degree(k) != g.degree(v)) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (g.has_edge(i, k) != g.has_edge(perm[std::size_t(i)], v)) ok = false;
            if (!ok) continue;
            perm[std::size_t(k)] = v;
            used[std::size_t(v)] = 1;
            rec(k + 1);
            used[std::size_t(v)] = 0;
        }
    };
    rec(0);
    return out;
}

/*
 * Canonical key of one bipartite component given as a 0/1 block (rows x cols,
 * equal sizes): minimum over all column permutations of the row-sorted byte
 * encoding, then the minimum of that value for the block and its transpose
 * (= swapping the two classes).  Row sorting absorbs row permutations, so
 * the scan over column permutations is exhaustive over the whole group.
 */
static std::string block_canonical(const std::vector<std::uint32_t> &rows, int k) {
    std::vector<int> colperm(static_cast<std::size_t>(k));
    auto scan = [&](const std::vector<std::uint32_t> &rr) {
        std::vector<std::uint32_t> bestv;
        for (int i = 0; i < k; ++i) colperm[std::size_t(i)] = i;
        do {
            std::vector<std::uint32_t> cand(rr.size());
            for (std::size_t r = 0; r < rr.size(); ++r) {
                std::uint32_t v = 0;
                for (int c = 0; c < k; ++c)
                    if (rr[r] >> colperm[std::size_t(c)] & 1) v |= std::uint32_t(1) << c;
                cand[r] = v;
            }
            std::sort(cand.begin(), cand.end());
            if (bestv.empty() || cand < bestv) bestv = cand;
        } while (std::next_permutation(colperm.begin(), colperm.end()));
        return bestv;
    };
    std::vector<std::uint32_t> direct = scan(rows);
    std::vector<std::uint32_t> transp_rows(std::size_t(k), 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (rows[std::size_t(r)] >> c & 1) transp_rows[std::size_t(c)] |= std::uint32_t(1) << r;
    std::vector<std::uint32_t> flipped = scan(transp_rows);
    const std::vector<std::uint32_t> &win = flipped < direct ? flipped : direct;
    std::ostringstream os;
    os << k << '[';
    for (std::uint32_t v : win) os << v << ' ';
    os << ']';
    return os.str();
}

std::string bipartite_canonical_key(const Graph &g) {
    g.validate();
    if (!g.bipartition) throw std::invalid_argument("bipartite_canonical_key: no bipartition");
    if (!g.loop_free()) throw std::invalid_argument("bipartite_canonical_key: loops present");

    // connected components, then per-component left/right index lists
    std::vector<int> comp(std::size_t(g.n), -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[std::size_t(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[std::size_t(s)] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u)
                if ((g.adj[std::size_t(v)] >> u & 1) && comp[std::size_t(u)] < 0) {
                    comp[std::size_t(u)] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> keys;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> left, right;
        for (int v = 0; v < g.n; ++v) {
            if (comp[std::size_t(v)] != c) continue;
            (*g.bipartition >> v & 1 ? left : right).push_back(v);
        }
        if (left.size() != right.size())
            throw std::invalid_argument("bipartite_canonical_key: component classes differ in size");
        const int k = int(left.size());
        if (k > 32) throw std::invalid_argument("bipartite_canonical_key: component too large");
        if (k == 0) continue; // no vertices in this component? cannot happen
        std::vector<std::uint32_t> rows(std::size_t(k), 0);
        for (int i = 0; i < k; ++i)
            for (int jj = 0; jj < k; ++jj)
                if (g.has_edge(left[std::size_t(i)], right[std::size_t(jj)]))
                    rows[std::size_t(i)] |= std::uint32_t(1) << jj;
        keys.push_back(block_canonical(rows, k));
    }
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    os << 'b' << g.n << ':';
    for (const auto &k : keys) os << k << ';';
    return os.str();
}

std::vector<Graph> enumerate_regular(int n, int d) {
    if (n < 1 || n > caps().enum_regular_n)
        throw std::invalid_argument("enumerate_regular: n out of range");
    if (d < 0 || d >= n) throw std::invalid_argument("enumerate_regular: d out of range");
    if ((n * d) % 2 != 0) throw std::invalid_argument("enumerate_regular: nd must be even");

    std::map<std::string, Graph> classes;
    std::vector<int> deg(std::size_t(n), 0);
    Graph g = Graph::empty(n);

    // fill in the neighbours of v among {v+1..n-1}; earlier vertices done
    std::function<void(int)> per_vertex = [&](int v) {
        if (v == n) {
            std::string key = canonical_form(g);
            classes.emplace(key, g);
            return;
        }
        const int need = d - deg[std::size_t(v)];
        if (need < 0) return;
        std::vector<int> cand;
        for (int u = v + 1; u < n; ++u)
            if (deg[std::size_t(u)] < d) cand.push_back(u);
        // choose `need` of cand (combinations, lexicographic)
        std::vector<int> chosen;
        std::function<void(std::size_t)> pick = [&](std::size_t from) {
            if (int(chosen.size()) == need) {
                // capacity prune for the rest: every later vertex must still
                // be able to reach degree d using vertices after it
                per_vertex(v + 1);
                return;
            }
            std::size_t still = std::size_t(need) - chosen.size();
            for (std::size_t i = from; i + still <= cand.size(); ++i) {
                int u = cand[i];
                g.add_edge(v, u);
                ++deg[std::size_t(v)];
                ++deg[std::size_t(u)];
                chosen.push_back(u);
                pick(i + 1);
                chosen.pop_back();
                --deg[std::size_t(u)];
                --deg[std::size_t(v)];
                g.adj[std::size_t(v)] &= ~(std::uint64_t(1) << u);
                g.adj[std::size_t(u)] &= ~(std::uint64_t(1) << v);
            }
        };
        pick(0);
    };
    per_vertex(0);

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto &[key, rep] : classes) out.push_back(rep);
    return out;
}

std::vector<Graph> enumerate_bipartite_regular(int half_n, int d) {
    if (half_n < 1 || half_n > caps().enum_bip_half)
        throw std::invalid_argument("enumerate_bipartite_regular: class size out of range");
    if (d < 1 || d > half_n)
        throw std::invalid_argument("enumerate_bipartite_regular: d out of range");

    std::map<std::string, Graph> classes;
    const int k = half_n;
    std::vector<std::uint32_t> rows;
    std::vector<int> colsum(std::size_t(k), 0);

    // all d-subsets of [k] as masks, ascending; rows are chosen non-decreasing
    std::vector<std::uint32_t> dmasks;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << k); ++m)
        if (std::popcount(m) == d) dmasks.push_back(m);

    auto emit = [&]() {
        Graph g = Graph::empty(2 * k);
        for (int i = 0; i < k; ++i)
            for (int jj = 0; jj < k; ++jj)
                if (rows[std::size_t(i)] >> jj & 1) g.add_edge(i, k + jj);
        g.bipartition = (std::uint64_t(1) << k) - 1;
        classes.emplace(bipartite_canonical_key(g), g);
    };

    std::function<void(int, std::size_t)> rec = [&](int r, std::size_t from) {
        if (r == k) {
            emit();
            return;
        }
        const int rows_left = k - r;
        for (std::size_t mi = from; mi < dmasks.size(); ++mi) {
            std::uint32_t m = dmasks[mi];
            bool ok = true;
            for (int jj = 0; jj < k && ok; ++jj) {
                int cs = colsum[std::size_t(jj)] + int(m >> jj & 1);
                if (cs > d) ok = false;
                // each remaining row adds at most 1 to a column
                if (d - cs > rows_left - 1) ok = false;
            }
            if (!ok) continue;
            rows.push_back(m);
            for (int jj = 0; jj < k; ++jj) colsum[std::size_t(jj)] += int(m >> jj & 1);
            rec(r + 1, mi); // non-decreasing rows; duplicates allowed
            for (int jj = 0; jj < k; ++jj) colsum[std::size_t(jj)] -= int(m >> jj & 1);
            rows.pop_back();
        }
    };
    rec(0, 0);

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto &[key, rep] : classes) out.push_back(rep);
    return out;
}

std::vector<Graph> enumerate_all(int n) {
    if (n < 1 || n > caps().enum_all_n)
        throw std::invalid_argument("enumerate_all: n out of range");
    std::map<std::string, Graph> cur;
    Graph k1 = Graph::empty(1);
    cur.emplace(canonical_form(k1), k1);
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto &[key, g] : cur) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (k - 1)); ++mask) {
                Graph h = Graph::empty(k);
                for (int v = 0; v < k - 1; ++v) h.adj[std::size_t(v)] = g.adj[std::size_t(v)];
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1) h.add_edge(v, k - 1);
                next.emplace(canonical_form(h), h);
            }
        }
        cur = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(cur.size());
    for (auto &[key, rep] : cur) out.push_back(rep);
    return out;
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> all = enumerate_all(n);
    std::vector<Graph> out;
    for (auto &g : all)
        if (g.is_connected()) out.push_back(g);
    return out;
}

} // namespace cb
