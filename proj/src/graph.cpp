#include "cb/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cb {

Graph Graph::empty(int n, bool loops_allowed) {
    if (n < 0 || n > 64) throw std::invalid_argument("Graph: vertex count out of range");
    Graph g;
    g.n = n;
    g.loops_allowed = loops_allowed;
    g.adj.assign(std::size_t(n), 0);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: use add_loop for loops");
    adj[std::size_t(u)] |= std::uint64_t(1) << v;
    adj[std::size_t(v)] |= std::uint64_t(1) << u;
}

void Graph::add_loop(int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("add_loop: vertex out of range");
    if (!loops_allowed) throw std::invalid_argument("add_loop: loops not allowed here");
    loops |= std::uint64_t(1) << v;
}

int Graph::degree(int v) const {
    return std::popcount(adj[std::size_t(v)]) + int(loops >> v & 1);
}

long Graph::edge_count() const {
    long e = 0;
    for (int v = 0; v < n; ++v) e += std::popcount(adj[std::size_t(v)]);
    return e / 2 + std::popcount(loops);
}

bool Graph::is_regular(int *d_out) const {
    if (n == 0) {
        if (d_out) *d_out = 0;
        return true;
    }
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return false;
    if (d_out) *d_out = d;
    return true;
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[std::size_t(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n;
}

void Graph::validate() const {
    if (n < 0 || n > 64 || int(adj.size()) != n)
        throw std::invalid_argument("Graph: bad adjacency size");
    const std::uint64_t allowed = n == 64 ? ~std::uint64_t(0)
                                          : (std::uint64_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) {
        if (adj[std::size_t(v)] & ~allowed)
            throw std::invalid_argument("Graph: adjacency bit out of range");
        if (adj[std::size_t(v)] >> v & 1)
            throw std::invalid_argument("Graph: diagonal bit in adjacency");
        for (int u = v + 1; u < n; ++u)
            if ((adj[std::size_t(v)] >> u & 1) != (adj[std::size_t(u)] >> v & 1))
                throw std::invalid_argument("Graph: adjacency not symmetric");
    }
    if (loops & ~allowed) throw std::invalid_argument("Graph: loop bit out of range");
    if (loops && !loops_allowed)
        throw std::invalid_argument("Graph: loops present but not allowed");
    if (bipartition) {
        if (*bipartition & ~allowed)
            throw std::invalid_argument("Graph: bipartition mask out of range");
        if (loops) throw std::invalid_argument("Graph: bipartite graph cannot have loops");
        for (int v = 0; v < n; ++v) {
            bool left = *bipartition >> v & 1;
            std::uint64_t same = left ? *bipartition : (allowed & ~*bipartition);
            if (adj[std::size_t(v)] & same)
                throw std::invalid_argument("Graph: edge inside a bipartition class");
        }
    }
}

Graph make_kdd(int d) {
    if (d < 0 || 2 * d > 64) throw std::invalid_argument("make_kdd: d out of range");
    Graph g = Graph::empty(2 * d);
    for (int i = 0; i < d; ++i)
        for (int jj = 0; jj < d; ++jj) g.add_edge(i, d + jj);
    g.bipartition = d == 0 ? 0 : (std::uint64_t(1) << d) - 1;
    g.validate();
    return g;
}

Graph make_knd(int n, int d) {
    if (d < 1 || n < 1 || n % d != 0)
        throw std::invalid_argument("make_knd: requires d >= 1 and d | n");
    if (2 * n > 64) throw std::invalid_argument("make_knd: too many vertices");
    const int copies = n / d;
    Graph g = Graph::empty(2 * n);
    std::uint64_t left = 0;
    for (int c = 0; c < copies; ++c) {
        const int base = 2 * d * c;
        for (int i = 0; i < d; ++i) {
            left |= std::uint64_t(1) << (base + i);
            for (int jj = 0; jj < d; ++jj) g.add_edge(base + i, base + d + jj);
        }
    }
    g.bipartition = left;
    g.validate();
    return g;
}

Graph make_complete(int q) {
    if (q < 0 || q > 64) throw std::invalid_argument("make_complete: q out of range");
    Graph g = Graph::empty(q);
    for (int i = 0; i < q; ++i)
        for (int jj = i + 1; jj < q; ++jj) g.add_edge(i, jj);
    return g;
}

Graph make_h_ind() {
    Graph g = Graph::empty(2, true);
    g.add_edge(0, 1);
    g.add_loop(1); // vertex 0 is the "selected" state: no loop there
    return g;
}

Graph make_h_wr() {
    Graph g = Graph::empty(3, true);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int v = 0; v < 3; ++v) g.add_loop(v);
    return g;
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("make_cycle: need k >= 3");
    Graph g = Graph::empty(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("make_path: need k >= 1");
    Graph g = Graph::empty(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_empty_graph(int n) { return Graph::empty(n); }

Graph make_named(const std::string &name, const std::vector<long> &params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("make_named: '" + name + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "k_dd") { want(1); return make_kdd(int(params[0])); }
    if (name == "knd")  { want(2); return make_knd(int(params[0]), int(params[1])); }
    if (name == "kn")   { want(1); return make_complete(int(params[0])); }
    if (name == "h_ind"){ want(0); return make_h_ind(); }
    if (name == "h_wr") { want(0); return make_h_wr(); }
    if (name == "cycle"){ want(1); return make_cycle(int(params[0])); }
    if (name == "path") { want(1); return make_path(int(params[0])); }
    if (name == "empty"){ want(1); return make_empty_graph(int(params[0])); }
    throw std::invalid_argument("make_named: unknown graph name '" + name + "'");
}

Graph parse_graph_spec(const std::string &spec) {
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("parse_graph_spec: cannot open " + spec.substr(5));
        return read_graph(in);
    }
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<long> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream rs(rest);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            try {
                params.push_back(std::stol(tok));
            } catch (const std::exception &) {
                throw std::invalid_argument("parse_graph_spec: bad parameter '" + tok + "'");
            }
        }
    }
    return make_named(name, params);
}

ZeroOneMatrix ZeroOneMatrix::zero(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("ZeroOneMatrix: order out of range");
    ZeroOneMatrix m;
    m.n = n;
    m.rows.assign(std::size_t(n), 0);
    return m;
}

void ZeroOneMatrix::set(int i, int j, bool v) {
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("ZeroOneMatrix: index out of range");
    if (v) rows[std::size_t(i)] |= std::uint64_t(1) << j;
    else rows[std::size_t(i)] &= ~(std::uint64_t(1) << j);
}

std::vector<int> ZeroOneMatrix::row_sums() const {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[std::size_t(i)] = std::popcount(rows[std::size_t(i)]);
    return s;
}

void ZeroOneMatrix::validate() const {
    if (n < 0 || n > 64 || int(rows.size()) != n)
        throw std::invalid_argument("ZeroOneMatrix: bad size");
    const std::uint64_t allowed = n == 64 ? ~std::uint64_t(0)
                                          : (std::uint64_t(1) << n) - 1;
    for (const std::uint64_t r : rows)
        if (r & ~allowed) throw std::invalid_argument("ZeroOneMatrix: bit out of range");
}

ZeroOneMatrix adjacency_matrix(const Graph &g) {
    if (!g.loop_free()) throw std::invalid_argument("adjacency_matrix: graph has loops");
    ZeroOneMatrix m = ZeroOneMatrix::zero(g.n);
    m.rows = g.adj;
    return m;
}

ZeroOneMatrix bipartite_half_matrix(const Graph &g) {
    if (!g.bipartition) throw std::invalid_argument("bipartite_half_matrix: no bipartition");
    std::vector<int> left, right;
    for (int v = 0; v < g.n; ++v)
        (*g.bipartition >> v & 1 ? left : right).push_back(v);
    if (left.size() != right.size())
        throw std::invalid_argument("bipartite_half_matrix: classes of unequal size");
    ZeroOneMatrix m = ZeroOneMatrix::zero(int(left.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t jj = 0; jj < right.size(); ++jj)
            if (g.has_edge(left[i], right[jj])) m.set(int(i), int(jj), true);
    return m;
}

void LatticeBody::validate() const {
    if (dim < 2) throw std::invalid_argument("LatticeBody: dimension must be >= 2");
    for (const auto &c : cells) {
        if (int(c.size()) != dim)
            throw std::invalid_argument("LatticeBody: cell dimension mismatch");
        for (int x : c)
            if (x < -1000000 || x > 1000000)
                throw std::invalid_argument("LatticeBody: coordinate out of range");
    }
}

void SetFamily::validate() const {
    if (n < 0 || n > 30) throw std::invalid_argument("SetFamily: ground size out of range");
    for (std::uint32_t m : members)
        if (m >> n) throw std::invalid_argument("SetFamily: member outside ground set");
}

Graph read_graph(std::istream &in) {
    std::string line;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        if (!have_header) {
            if (first != "graph") throw std::invalid_argument("read_graph: malformed header");
            int n;
            std::string ltok, btok;
            if (!(ls >> n >> ltok >> btok) || n < 0 || n > 64)
                throw std::invalid_argument("read_graph: malformed header");
            bool la;
            if (ltok == "loops=0") la = false;
            else if (ltok == "loops=1") la = true;
            else throw std::invalid_argument("read_graph: malformed loops field");
            g = Graph::empty(n, la);
            if (btok.rfind("bipartition=", 0) != 0)
                throw std::invalid_argument("read_graph: malformed bipartition field");
            std::string bval = btok.substr(12);
            if (bval != "none") {
                try {
                    g.bipartition = std::stoull(bval);
                } catch (const std::exception &) {
                    throw std::invalid_argument("read_graph: malformed bipartition mask");
                }
            }
            have_header = true;
            continue;
        }
        int u, v;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw std::invalid_argument("read_graph: malformed edge line");
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw std::invalid_argument("read_graph: vertex out of range");
        if (u > v)
            throw std::invalid_argument("read_graph: edge endpoints out of order (want u <= v)");
        if (u == v) g.add_loop(u);
        else {
            if (g.has_edge(u, v)) throw std::invalid_argument("read_graph: duplicate edge");
            g.add_edge(u, v);
        }
    }
    if (!have_header) throw std::invalid_argument("read_graph: empty input");
    g.validate();
    return g;
}

void write_graph(std::ostream &out, const Graph &g) {
    out << "graph " << g.n << " loops=" << (g.loops_allowed ? 1 : 0) << " bipartition=";
    if (g.bipartition) out << *g.bipartition;
    else out << "none";
    out << '\n';
    for (int u = 0; u < g.n; ++u) {
        if (g.has_loop(u)) out << u << ' ' << u << '\n';
        std::uint64_t higher = g.adj[std::size_t(u)] >> (u + 1);
        for (int v = u + 1; v < g.n; ++v)
            if (higher >> (v - u - 1) & 1) out << u << ' ' << v << '\n';
    }
}

Graph parse_graph(const std::string &text) {
    std::istringstream is(text);
    return read_graph(is);
}

std::string format_graph(const Graph &g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

ZeroOneMatrix read_matrix(std::istream &in) {
    std::string line;
    ZeroOneMatrix m;
    bool have_header = false;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!have_header) {
            std::istringstream ls(line);
            std::string first;
            int n;
            if (!(ls >> first >> n) || first != "matrix" || n < 0 || n > 64)
                throw std::invalid_argument("read_matrix: malformed header");
            m = ZeroOneMatrix::zero(n);
            have_header = true;
            continue;
        }
        if (row >= m.n) throw std::invalid_argument("read_matrix: too many rows");
        if (int(line.size()) != m.n)
            throw std::invalid_argument("read_matrix: row length mismatch");
        for (int jj = 0; jj < m.n; ++jj) {
            if (line[std::size_t(jj)] == '1') m.set(row, jj, true);
            else if (line[std::size_t(jj)] != '0')
                throw std::invalid_argument("read_matrix: entries must be 0 or 1");
        }
        ++row;
    }
    if (!have_header || row != m.n)
        throw std::invalid_argument("read_matrix: wrong number of rows");
    return m;
}

void write_matrix(std::ostream &out, const ZeroOneMatrix &m) {
    out << "matrix " << m.n << '\n';
    for (int i = 0; i < m.n; ++i) {
        for (int jj = 0; jj < m.n; ++jj) out << (m.get(i, jj) ? '1' : '0');
        out << '\n';
    }
}

ZeroOneMatrix parse_matrix(const std::string &text) {
    std::istringstream is(text);
    return read_matrix(is);
}

std::string format_matrix(const ZeroOneMatrix &m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

LatticeBody read_body(std::istream &in) {
    std::string line;
    LatticeBody b;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!have_header) {
            if (first != "body") throw std::invalid_argument("read_body: malformed header");
            if (!(ls >> b.dim)) throw std::invalid_argument("read_body: malformed header");
            have_header = true;
            continue;
        }
        std::istringstream es(line);
        std::vector<int> cell(std::size_t(b.dim));
        for (int i = 0; i < b.dim; ++i)
            if (!(es >> cell[std::size_t(i)]))
                throw std::invalid_argument("read_body: truncated cell line");
        b.cells.insert(cell);
    }
    if (!have_header) throw std::invalid_argument("read_body: empty input");
    b.validate();
    return b;
}

void write_body(std::ostream &out, const LatticeBody &b) {
    out << "body " << b.dim << '\n';
    for (const auto &c : b.cells) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? " " : "") << c[i];
        out << '\n';
    }
}

LatticeBody parse_body(const std::string &text) {
    std::istringstream is(text);
    return read_body(is);
}

std::string format_body(const LatticeBody &b) {
    std::ostringstream os;
    write_body(os, b);
    return os.str();
}

} // namespace cb
