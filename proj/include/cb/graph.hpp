#pragma once
/*
 * Small-graph and combinatorial-object types.
 *
 * Graph: at most 64 vertices, adjacency stored as one uint64 bitset row per
 * vertex.  Loops are kept in a separate bitset (a loop adds 1 to the degree).
 * An optional bipartition mask (bit set = left class) travels with the graph
 * purely as metadata; isomorphism utilities ignore it.
 *
 * ZeroOneMatrix: square 0/1 matrix, one uint64 bitset per row (order <= 64).
 * LatticeBody:   finite set of integer points in Z^k.
 * SetFamily:     subsets of a ground set [n], n <= 30, as uint32 masks.
 */

#include "cb/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cb {

struct Graph {
    int n = 0;
    bool loops_allowed = false;
    std::vector<std::uint64_t> adj;          // adj[v] has no diagonal bit
    std::uint64_t loops = 0;                 // bitset of looped vertices
    std::optional<std::uint64_t> bipartition; // left-class mask, if declared

    static Graph empty(int n, bool loops_allowed = false);

    void add_edge(int u, int v);             // u != v
    void add_loop(int v);
    bool has_edge(int u, int v) const { return adj[std::size_t(u)] >> v & 1; }
    bool has_loop(int v) const { return loops >> v & 1; }
    int degree(int v) const;                 // a loop counts once
    long edge_count() const;                 // loops included
    bool is_regular(int *d_out = nullptr) const;
    bool is_connected() const;               // true for n <= 1
    bool loop_free() const { return loops == 0; }
    void validate() const;
};

// K_{d,d} with left class {0..d-1}; d = 0 is the empty graph.
Graph make_kdd(int d);
// Disjoint union of n/d copies of K_{d,d} (2n vertices, nd edges); d | n.
Graph make_knd(int n, int d);
Graph make_complete(int q);                 // K_q
Graph make_h_ind();                         // edge 0-1, loop at 1 only
Graph make_h_wr();                          // path 0-1-2 with loops at all three
Graph make_cycle(int k);                    // k >= 3
Graph make_path(int k);                     // k >= 1 vertices
Graph make_empty_graph(int n);

// Named dispatch used by the CLI shorthand parser: "k_dd", "knd", "kn",
// "h_ind", "h_wr", "cycle", "path", "empty" with numeric params.
Graph make_named(const std::string &name, const std::vector<long> &params);
// Shorthand strings: k_dd:3  knd:12,3  kn:5  h_ind  h_wr  cycle:6  path:4
// empty:3  file:PATH
Graph parse_graph_spec(const std::string &spec);

struct ZeroOneMatrix {
    int n = 0;
    std::vector<std::uint64_t> rows;

    static ZeroOneMatrix zero(int n);
    bool get(int i, int j) const { return rows[std::size_t(i)] >> j & 1; }
    void set(int i, int j, bool v);
    std::vector<int> row_sums() const;
    void validate() const;
};

// Adjacency matrix of a loop-free graph (diagonal zero).
ZeroOneMatrix adjacency_matrix(const Graph &g);
// Half matrix of a bipartite graph with equal class sizes: rows = left
// vertices ascending, columns = right vertices ascending.
ZeroOneMatrix bipartite_half_matrix(const Graph &g);

struct LatticeBody {
    int dim = 0;
    std::set<std::vector<int>> cells;

    void validate() const; // dim >= 2, all cells of size dim, |coord| <= 1e6
};

struct SetFamily {
    int n = 0;                         // ground set size, n <= 30
    std::vector<std::uint32_t> members;

    void validate() const;
};

/*
 * Graph text format:
 *   graph <n> loops=<0|1> bipartition=<decimal-mask|none>
 *   <u> <v>        (one edge per line, 0-based, u <= v; "u u" is a loop)
 *
 * Matrix text format:
 *   matrix <n>
 *   <n lines of n characters from {0,1}>
 */
Graph read_graph(std::istream &in);
void write_graph(std::ostream &out, const Graph &g);
Graph parse_graph(const std::string &text);
std::string format_graph(const Graph &g);

ZeroOneMatrix read_matrix(std::istream &in);
void write_matrix(std::ostream &out, const ZeroOneMatrix &m);
ZeroOneMatrix parse_matrix(const std::string &text);
std::string format_matrix(const ZeroOneMatrix &m);

// Body text format:  body <dim>  then one cell per line (<dim> integers).
LatticeBody read_body(std::istream &in);
void write_body(std::ostream &out, const LatticeBody &b);
LatticeBody parse_body(const std::string &text);
std::string format_body(const LatticeBody &b);

} // namespace cb
