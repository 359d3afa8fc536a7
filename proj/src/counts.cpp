#include "cb/counts.hpp"

#include "cb/caps.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cb {

static Int int128_to_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    Int r = std::uint64_t(u >> 64);
    r <<= 64;
    r += std::uint64_t(u);
    return neg ? Int(-r) : r;
}

static CountResult result(Int value, const std::string &meta, const std::string &input) {
    return CountResult{std::move(value), meta, fnv1a(input)};
}

CountResult permanent(const ZeroOneMatrix &a) {
    a.validate();
    const int n = a.n;
    if (n > caps().permanent_n)
        throw std::invalid_argument("permanent: order above supported cap");
    if (n == 0) return result(1, "permanent", format_matrix(a));

    // inclusion-exclusion over column subsets with Gray-code updates:
    // perm = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i (row i restricted to S)
    std::vector<std::vector<int>> colrows(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (a.get(i, j)) colrows[std::size_t(j)].push_back(i);

    std::vector<int> rowsum(std::size_t(n), 0);
    int zero_rows = n;
    Int total = 0;
    __int128 block = 0;
    int block_fill = 0;
    std::uint64_t gray_prev = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
        std::uint64_t gray = s ^ (s >> 1);
        int j = std::countr_zero(gray ^ gray_prev);
        int delta = (gray >> j & 1) ? 1 : -1;
        gray_prev = gray;
        for (int i : colrows[std::size_t(j)]) {
            int old = rowsum[std::size_t(i)];
            rowsum[std::size_t(i)] += delta;
            zero_rows += int(rowsum[std::size_t(i)] == 0) - int(old == 0);
        }
        if (zero_rows > 0) continue;
        __int128 prod = 1;
        for (int i = 0; i < n; ++i) prod *= rowsum[std::size_t(i)];
        if (std::popcount(gray) & 1) block -= prod;
        else block += prod;
        if (++block_fill == 1024) { // keep the 128-bit accumulator far from overflow
            total += int128_to_int(block);
            block = 0;
            block_fill = 0;
        }
    }
    total += int128_to_int(block);
    if (n & 1) total = -total;
    return result(total, "permanent", format_matrix(a));
}

// ---- matchings ------------------------------------------------------------

static void check_matching_pre(const Graph &g, const char *who) {
    g.validate();
    if (!g.loop_free()) throw std::invalid_argument(std::string(who) + ": loops present");
    if (g.n > caps().matching_n)
        throw std::invalid_argument(std::string(who) + ": graph above supported cap");
}

std::vector<Int> matching_polynomial(const Graph &g) {
    check_matching_pre(g, "matching_polynomial");
    std::unordered_map<std::uint64_t, std::vector<Int>> memo;
    std::function<const std::vector<Int> &(std::uint64_t)> rec =
        [&](std::uint64_t S) -> const std::vector<Int> & {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        std::vector<Int> res;
        if (S == 0) {
            res = {Int(1)};
        } else {
            int v = std::countr_zero(S);
            res = rec(S & ~(std::uint64_t(1) << v)); // leave v unmatched
            std::uint64_t nb = g.adj[std::size_t(v)] & S;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                const std::vector<Int> &sub =
                    rec(S & ~(std::uint64_t(1) << v) & ~(std::uint64_t(1) << u));
                if (res.size() < sub.size() + 1) res.resize(sub.size() + 1, Int(0));
                for (std::size_t t = 0; t < sub.size(); ++t) res[t + 1] += sub[t];
            }
        }
        return memo.emplace(S, std::move(res)).first->second;
    };
    std::uint64_t full = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    std::vector<Int> poly = rec(full);
    poly.resize(std::size_t(g.n / 2) + 1, Int(0));
    return poly;
}

CountResult perfect_matchings(const Graph &g) {
    check_matching_pre(g, "perfect_matchings");
    if (g.n % 2 != 0) return result(0, "perfect_matchings", format_graph(g));
    std::unordered_map<std::uint64_t, Int> memo;
    std::function<const Int &(std::uint64_t)> rec = [&](std::uint64_t S) -> const Int & {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        Int res = 0;
        if (S == 0) {
            res = 1;
        } else {
            int v = std::countr_zero(S); // lowest live vertex must be matched
            std::uint64_t nb = g.adj[std::size_t(v)] & S;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                res += rec(S & ~(std::uint64_t(1) << v) & ~(std::uint64_t(1) << u));
            }
        }
        return memo.emplace(S, std::move(res)).first->second;
    };
    std::uint64_t full = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    return result(rec(full), "perfect_matchings", format_graph(g));
}

CountResult matchings_of_size(const Graph &g, int t) {
    if (t < 0) throw std::invalid_argument("matchings_of_size: negative size");
    std::vector<Int> poly = matching_polynomial(g);
    Int v = std::size_t(t) < poly.size() ? poly[std::size_t(t)] : Int(0);
    return result(v, "matchings_of_size(t=" + std::to_string(t) + ")", format_graph(g));
}

CountResult matchings_total(const Graph &g) {
    std::vector<Int> poly = matching_polynomial(g);
    Int v = 0;
    for (const Int &c : poly) v += c;
    return result(v, "matchings_total", format_graph(g));
}

std::vector<Int> matchings_union_polynomial(int n, int d) {
    if (d < 1 || n < 1 || n % d != 0)
        throw std::invalid_argument("matchings_union_polynomial: requires d >= 1 and d | n");
    std::vector<Int> block(std::size_t(d) + 1);
    for (int a = 0; a <= d; ++a) {
        Int c = binomial(unsigned(d), unsigned(a));
        block[std::size_t(a)] = c * c * factorial(unsigned(a));
    }
    std::vector<Int> acc{Int(1)};
    for (int copy = 0; copy < n / d; ++copy) {
        std::vector<Int> next(acc.size() + std::size_t(d), Int(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (int a = 0; a <= d; ++a) next[i + std::size_t(a)] += acc[i] * block[std::size_t(a)];
        }
        acc = std::move(next);
    }
    return acc;
}

CountResult matchings_union_formula(int n, int d, int t) {
    if (t < 0) throw std::invalid_argument("matchings_union_formula: negative size");
    std::vector<Int> poly = matchings_union_polynomial(n, d);
    Int v = std::size_t(t) < poly.size() ? poly[std::size_t(t)] : Int(0);
    std::ostringstream os;
    os << "matchings_union_formula(n=" << n << ",d=" << d << ",t=" << t << ")";
    return result(v, os.str(), os.str());
}

// ---- independent sets ------------------------------------------------------

std::vector<Int> independence_polynomial(const Graph &g) {
    g.validate();
    if (g.n > caps().matching_n)
        throw std::invalid_argument("independence_polynomial: graph above supported cap");
    std::unordered_map<std::uint64_t, std::vector<Int>> memo;
    std::function<const std::vector<Int> &(std::uint64_t)> rec =
        [&](std::uint64_t S) -> const std::vector<Int> & {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        std::vector<Int> res;
        if (S == 0) {
            res = {Int(1)};
        } else {
            int v = std::countr_zero(S);
            res = rec(S & ~(std::uint64_t(1) << v)); // v excluded
            if (!g.has_loop(v)) {                    // a looped vertex is self-adjacent
                const std::vector<Int> &sub =
                    rec(S & ~(std::uint64_t(1) << v) & ~g.adj[std::size_t(v)]);
                if (res.size() < sub.size() + 1) res.resize(sub.size() + 1, Int(0));
                for (std::size_t t = 0; t < sub.size(); ++t) res[t + 1] += sub[t];
            }
        }
        return memo.emplace(S, std::move(res)).first->second;
    };
    std::uint64_t full = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    std::vector<Int> poly = rec(full);
    poly.resize(std::size_t(g.n) + 1, Int(0));
    return poly;
}

CountResult independent_sets_of_size(const Graph &g, int t) {
    if (t < 0) throw std::invalid_argument("independent_sets_of_size: negative size");
    std::vector<Int> poly = independence_polynomial(g);
    Int v = std::size_t(t) < poly.size() ? poly[std::size_t(t)] : Int(0);
    return result(v, "independent_sets_of_size(t=" + std::to_string(t) + ")", format_graph(g));
}

CountResult independent_sets_total(const Graph &g) {
    std::vector<Int> poly = independence_polynomial(g);
    Int v = 0;
    for (const Int &c : poly) v += c;
    return result(v, "independent_sets_total", format_graph(g));
}

// ---- colorings and homomorphisms -------------------------------------------

CountResult colorings(const Graph &g, int q) {
    g.validate();
    if (q < 0 || q > 31) throw std::invalid_argument("colorings: q out of range");
    if (!g.loop_free()) return result(0, "colorings(q)", format_graph(g));
    // canonical-color backtracking: colors are introduced in first-use order
    // and each fresh introduction carries the multiplicity (q - used).
    std::vector<int> color(std::size_t(g.n), -1);
    std::function<Int(int, int)> rec = [&](int v, int used) -> Int {
        if (v == g.n) return 1;
        std::uint32_t forbidden = 0;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) forbidden |= std::uint32_t(1) << color[std::size_t(u)];
        Int total = 0;
        for (int c = 0; c < used; ++c) {
            if (forbidden >> c & 1) continue;
            color[std::size_t(v)] = c;
            total += rec(v + 1, used);
        }
        if (used < q) {
            color[std::size_t(v)] = used;
            total += Int(q - used) * rec(v + 1, used + 1);
        }
        return total;
    };
    return result(rec(0, 0), "colorings(q=" + std::to_string(q) + ")", format_graph(g));
}

CountResult hom_count(const Graph &g, const Graph &h) {
    g.validate();
    h.validate();
    if (!g.loop_free()) throw std::invalid_argument("hom_count: source graph has loops");
    // adjacency in the target including loop self-bits
    std::vector<std::uint64_t> hadj(std::size_t(h.n));
    for (int w = 0; w < h.n; ++w)
        hadj[std::size_t(w)] = h.adj[std::size_t(w)] | (h.has_loop(w) ? std::uint64_t(1) << w : 0);
    const std::uint64_t allh = h.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << h.n) - 1;
    std::vector<int> img(std::size_t(g.n), -1);
    std::function<Int(int)> rec = [&](int v) -> Int {
        if (v == g.n) return 1;
        std::uint64_t allowed = allh;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) allowed &= hadj[std::size_t(img[std::size_t(u)])];
        Int total = 0;
        while (allowed) {
            int w = std::countr_zero(allowed);
            allowed &= allowed - 1;
            img[std::size_t(v)] = w;
            total += rec(v + 1);
        }
        return total;
    };
    return result(rec(0), "hom_count", format_graph(g) + "->" + format_graph(h));
}

CountResult embed_count(const Graph &h, const Graph &g) {
    h.validate();
    g.validate();
    if (!h.loop_free() || !g.loop_free())
        throw std::invalid_argument("embed_count: loops not supported");
    const std::uint64_t allg = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    std::vector<int> img(std::size_t(h.n), -1);
    std::uint64_t used = 0;
    std::function<Int(int)> rec = [&](int v) -> Int {
        if (v == h.n) return 1;
        std::uint64_t allowed = allg & ~used;
        for (int u = 0; u < v; ++u)
            if (h.has_edge(u, v)) allowed &= g.adj[std::size_t(img[std::size_t(u)])];
        Int total = 0;
        while (allowed) {
            int w = std::countr_zero(allowed);
            allowed &= allowed - 1;
            img[std::size_t(v)] = w;
            used |= std::uint64_t(1) << w;
            total += rec(v + 1);
            used &= ~(std::uint64_t(1) << w);
        }
        return total;
    };
    return result(rec(0), "embed_count", format_graph(h) + "->" + format_graph(g));
}

CountResult hom_kdd_closed(const Graph &h, int d) {
    h.validate();
    if (d < 0) throw std::invalid_argument("hom_kdd_closed: negative d");
    std::ostringstream ident;
    ident << "hom_kdd_closed(d=" << d << ")" << format_graph(h);
    if (d == 0) return result(1, "hom_kdd_closed(d=0)", ident.str());
    if (h.n == 0) return result(0, "hom_kdd_closed", ident.str());

    std::vector<std::uint64_t> hadj(std::size_t(h.n));
    for (int w = 0; w < h.n; ++w)
        hadj[std::size_t(w)] = h.adj[std::size_t(w)] | (h.has_loop(w) ? std::uint64_t(1) << w : 0);
    const std::uint64_t allh = h.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << h.n) - 1;

    // sum over multiplicity profiles c: V(h) -> {0..d}, sum c = d, of
    // multinomial(d; c) * popcount(common neighbourhood of supp c)^d
    Int total = 0;
    std::vector<int> profile(std::size_t(h.n), 0);
    std::function<void(int, int, std::uint64_t)> rec = [&](int v, int left, std::uint64_t common) {
        if (v == h.n) {
            if (left != 0) return;
            total += multinomial(unsigned(d), profile) *
                     ipow(Int(std::popcount(common)), unsigned(d));
            return;
        }
        for (int c = 0; c <= left; ++c) {
            profile[std::size_t(v)] = c;
            rec(v + 1, left - c, c > 0 ? (common & hadj[std::size_t(v)]) : common);
        }
        profile[std::size_t(v)] = 0;
    };
    rec(0, d, allh);
    return result(total, "hom_kdd_closed(d=" + std::to_string(d) + ")", ident.str());
}

CountResult colorings_kdd_closed(int q, int d) {
    if (q < 0 || d < 0) throw std::invalid_argument("colorings_kdd_closed: negative parameter");
    std::ostringstream ident;
    ident << "colorings_kdd_closed(q=" << q << ",d=" << d << ")";
    if (d == 0) return result(1, ident.str(), ident.str());
    Int total = 0;
    for (int a = 1; a <= std::min(q, d); ++a)
        total += binomial(unsigned(q), unsigned(a)) * surjections(unsigned(d), unsigned(a)) *
                 ipow(Int(q - a), unsigned(d));
    return result(total, ident.str(), ident.str());
}

// ---- cycle covers -----------------------------------------------------------

std::pair<CountResult, CountResult> cycle_cover_sums(const Graph &g) {
    g.validate();
    if (!g.loop_free()) throw std::invalid_argument("cycle_cover_sums: loops present");
    if (g.n > caps().cycle_n)
        throw std::invalid_argument("cycle_cover_sums: graph above supported cap");

    struct Sums { Int all, even; };
    std::unordered_map<std::uint64_t, Sums> memo;
    std::function<const Sums &(std::uint64_t)> rec = [&](std::uint64_t S) -> const Sums & {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        Sums res{0, 0};
        if (S == 0) {
            res = {1, 1};
        } else {
            const int v = std::countr_zero(S);
            const std::uint64_t vbit = std::uint64_t(1) << v;
            // isolated edge covering v
            std::uint64_t nb = g.adj[std::size_t(v)] & S;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                const Sums &sub = rec(S & ~vbit & ~(std::uint64_t(1) << u));
                res.all += sub.all;
                res.even += sub.even;
            }
            // cycles of length >= 3 through v; each undirected cycle is
            // enumerated once (second vertex < closing vertex) and weighted 2
            std::vector<int> path{v};
            std::function<void(int, std::uint64_t)> grow = [&](int tail, std::uint64_t visited) {
                std::uint64_t ext = g.adj[std::size_t(tail)] & S & ~visited;
                while (ext) {
                    int w = std::countr_zero(ext);
                    ext &= ext - 1;
                    path.push_back(w);
                    std::uint64_t wvis = visited | (std::uint64_t(1) << w);
                    if (path.size() >= 3 && g.has_edge(w, v) && path[1] < w) {
                        const Sums &sub = rec(S & ~wvis);
                        res.all += 2 * sub.all;
                        if (path.size() % 2 == 0) res.even += 2 * sub.even;
                    }
                    grow(w, wvis);
                    path.pop_back();
                }
            };
            grow(v, vbit);
        }
        return memo.emplace(S, std::move(res)).first->second;
    };
    std::uint64_t full = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    const Sums &s = rec(full);
    std::string in = format_graph(g);
    return {result(s.all, "cycle_cover_sum_all", in), result(s.even, "cycle_cover_sum_even", in)};
}

// ---- distinguishing families -------------------------------------------------

SetFamily trace(const SetFamily &a, std::uint32_t F) {
    a.validate();
    if (a.n < 32 && (F >> a.n) != 0)
        throw std::invalid_argument("trace: restriction set outside ground set");
    SetFamily t;
    t.n = a.n;
    for (std::uint32_t m : a.members) t.members.push_back(m & F);
    std::sort(t.members.begin(), t.members.end());
    t.members.erase(std::unique(t.members.begin(), t.members.end()), t.members.end());
    return t;
}

bool is_distinguishing(const SetFamily &d) {
    d.validate();
    if (d.n > caps().distinguish_n)
        throw std::invalid_argument("is_distinguishing: ground set above supported cap");
    if (d.members.size() > 24)
        throw std::invalid_argument("is_distinguishing: family too large to pack");
    if (d.n == 0) return true;
    // signature of A = (|A & D_1|, ..., |A & D_l|), 5 bits per entry
    const std::size_t total = std::size_t(1) << d.n;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sig(total);
    for (std::size_t A = 0; A < total; ++A) {
        std::uint64_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < d.members.size(); ++i) {
            std::uint64_t c = std::uint64_t(std::popcount(std::uint32_t(A) & d.members[i]));
            if (i < 12) lo |= c << (5 * i);
            else hi |= c << (5 * (i - 12));
        }
        sig[A] = {lo, hi};
    }
    std::sort(sig.begin(), sig.end());
    for (std::size_t i = 1; i < total; ++i)
        if (sig[i] == sig[i - 1]) return false;
    return true;
}

CountResult min_distinguishing(int n) {
    if (n < 1 || n > caps().mindist_n)
        throw std::invalid_argument("min_distinguishing: n out of range");
    const std::uint32_t top = (std::uint32_t(1) << n) - 1;
    std::vector<std::uint32_t> chosen;
    std::string witness;
    std::function<bool(int, std::uint32_t)> build = [&](int want, std::uint32_t from) -> bool {
        if (int(chosen.size()) == want) {
            SetFamily f{n, chosen};
            if (!is_distinguishing(f)) return false;
            std::ostringstream os;
            for (std::uint32_t m : chosen) os << m << ' ';
            witness = os.str();
            return true;
        }
        for (std::uint32_t m = from; m <= top; ++m) {
            chosen.push_back(m);
            if (build(want, m + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int l = 1; l <= n; ++l) { // l = n always succeeds (singletons)
        chosen.clear();
        if (build(l, 1)) {
            std::ostringstream meta;
            meta << "min_distinguishing(n=" << n << ") first family: " << witness;
            return result(l, meta.str(), "min_distinguishing:" + std::to_string(n));
        }
    }
    throw std::logic_error("min_distinguishing: no family found"); // unreachable
}

// ---- lattice bodies ----------------------------------------------------------

std::pair<CountResult, std::vector<CountResult>>
body_volume_and_projections(const LatticeBody &b) {
    b.validate();
    std::string in = format_body(b);
    CountResult vol = result(Int(long(b.cells.size())), "body_volume", in);
    std::vector<CountResult> projs;
    for (int axis = 0; axis < b.dim; ++axis) {
        std::set<std::vector<int>> shadow;
        for (const auto &c : b.cells) {
            std::vector<int> p;
            p.reserve(c.size() - 1);
            for (int i = 0; i < b.dim; ++i)
                if (i != axis) p.push_back(c[std::size_t(i)]);
            shadow.insert(std::move(p));
        }
        projs.push_back(result(Int(long(shadow.size())),
                               "body_projection(axis=" + std::to_string(axis) + ")", in));
    }
    return {vol, projs};
}

// ---- triangle-intersecting families -------------------------------------------

CountResult max_triangle_intersecting(int n) {
    if (n < 3 || n > 4)
        throw std::invalid_argument("max_triangle_intersecting: n must be 3 or 4");
    // edge slots of K_n in fixed order
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj) slots.emplace_back(i, jj);
    const int E = int(slots.size());
    std::vector<std::uint32_t> tri_masks;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::uint32_t m = 0;
                for (int e = 0; e < E; ++e) {
                    auto [u, v] = slots[std::size_t(e)];
                    bool in_tri = (u == a || u == b || u == c) && (v == a || v == b || v == c);
                    if (in_tri) m |= std::uint32_t(1) << e;
                }
                tri_masks.push_back(m);
            }
    auto has_triangle = [&](std::uint32_t gm) {
        for (std::uint32_t t : tri_masks)
            if ((gm & t) == t) return true;
        return false;
    };
    std::vector<std::uint32_t> verts; // graphs containing a triangle
    for (std::uint32_t gm = 0; gm < (std::uint32_t(1) << E); ++gm)
        if (has_triangle(gm)) verts.push_back(gm);
    const int V = int(verts.size());
    std::vector<std::uint64_t> compat(std::size_t(V), 0);
    for (int i = 0; i < V; ++i)
        for (int jj = i + 1; jj < V; ++jj)
            if (has_triangle(verts[std::size_t(i)] & verts[std::size_t(jj)])) {
                compat[std::size_t(i)] |= std::uint64_t(1) << jj;
                compat[std::size_t(jj)] |= std::uint64_t(1) << i;
            }

    // max clique, branch and bound with a greedy colouring bound
    int best = 0;
    std::function<void(std::uint64_t, int)> expand = [&](std::uint64_t P, int rsize) {
        if (P == 0) {
            best = std::max(best, rsize);
            return;
        }
        // greedy colouring of P; vertices listed colour-class by colour-class
        std::vector<int> order, bound;
        {
            std::uint64_t left = P;
            int colour = 0;
            while (left) {
                ++colour;
                std::uint64_t cls = left;
                while (cls) {
                    int v = std::countr_zero(cls);
                    order.push_back(v);
                    bound.push_back(colour);
                    left &= ~(std::uint64_t(1) << v);
                    cls &= ~(std::uint64_t(1) << v) & ~compat[std::size_t(v)];
                }
            }
        }
        for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
            if (rsize + bound[std::size_t(idx)] <= best) return;
            int v = order[std::size_t(idx)];
            expand(P & compat[std::size_t(v)], rsize + 1);
            P &= ~(std::uint64_t(1) << v);
        }
    };
    std::uint64_t all = V >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << V) - 1;
    expand(all, 0);
    return result(best, "max_triangle_intersecting(n=" + std::to_string(n) + ")",
                  "triangle:" + std::to_string(n));
}

} // namespace cb
