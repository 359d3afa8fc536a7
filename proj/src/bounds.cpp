#include "cb/bounds.hpp"

#include "cb/caps.hpp"
#include "cb/distribution.hpp" // format_rational / parse_rational
#include "cb/entropy.hpp"      // binary_entropy
#include "cb/enumerate.hpp"    // automorphisms (blow-up symmetrization)
#include "cb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cb {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::BelowStrict: return "BelowStrict";
    case Verdict::Equal: return "Equal";
    case Verdict::AboveStrict: return "AboveStrict";
    }
    return "?";
}

void RootProductBound::validate() const {
    for (const auto &[base, root] : factors) {
        if (base < 1) throw std::invalid_argument("bound: factor base must be >= 1");
        if (root < 1) throw std::invalid_argument("bound: root denominator must be >= 1");
    }
    if (scalar <= 0) throw std::invalid_argument("bound: scalar must be positive");
}

void RootProductBound::push(Int base, long root) {
    if (base < 1) throw std::invalid_argument("bound: factor base must be >= 1");
    if (root < 1) throw std::invalid_argument("bound: root denominator must be >= 1");
    factors.emplace_back(std::move(base), root);
}

double RootProductBound::log2_value() const {
    double v = log2_rat(scalar);
    for (const auto &[base, root] : factors) v += log2_int(base) / double(root);
    return v;
}

static unsigned long long common_root(const RootProductBound &b, unsigned long long start) {
    unsigned long long m = start;
    for (const auto &f : b.factors)
        m = lcm_checked(m, (unsigned long long)(f.second), caps().root_lcm);
    return m;
}

// both sides of count <=> scalar * prod a_i^(1/m_i), raised to the M-th power
static void raise_sides(const Int &count, const RootProductBound &b, Int &lhs, Int &rhs) {
    const unsigned long long M = common_root(b, 1);
    lhs = ipow(count, M) * ipow(boost::multiprecision::denominator(b.scalar), M);
    rhs = ipow(boost::multiprecision::numerator(b.scalar), M);
    for (const auto &[base, root] : b.factors)
        if (base != 1) rhs *= ipow(base, M / (unsigned long long)(root));
}

CompareResult compare_exact(const Int &count, const RootProductBound &bound) {
    bound.validate();
    if (count < 0) throw std::invalid_argument("compare_exact: negative count");
    CompareResult r;
    r.bound_log2 = bound.log2_value();
    if (count == 0) {
        r.verdict = Verdict::BelowStrict; // bound is positive by the invariants
        r.count_log2 = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.count_log2 = log2_int(count);
    Int lhs, rhs;
    raise_sides(count, bound, lhs, rhs);
    r.verdict = lhs < rhs   ? Verdict::BelowStrict
                : lhs == rhs ? Verdict::Equal
                             : Verdict::AboveStrict;
    return r;
}

CompareResult compare_exact(const CountResult &count, const RootProductBound &bound) {
    return compare_exact(count.value, bound);
}

Verdict compare_bounds(const RootProductBound &a, const RootProductBound &b) {
    a.validate();
    b.validate();
    const unsigned long long M = common_root(b, common_root(a, 1));
    Int lhs = ipow(boost::multiprecision::numerator(a.scalar), M) *
              ipow(boost::multiprecision::denominator(b.scalar), M);
    Int rhs = ipow(boost::multiprecision::numerator(b.scalar), M) *
              ipow(boost::multiprecision::denominator(a.scalar), M);
    for (const auto &[base, root] : a.factors)
        if (base != 1) lhs *= ipow(base, M / (unsigned long long)(root));
    for (const auto &[base, root] : b.factors)
        if (base != 1) rhs *= ipow(base, M / (unsigned long long)(root));
    return lhs < rhs ? Verdict::BelowStrict : lhs == rhs ? Verdict::Equal : Verdict::AboveStrict;
}

nlohmann::ordered_json bound_to_json(const RootProductBound &b) {
    nlohmann::ordered_json j;
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto &[base, root] : b.factors)
        j["factors"].push_back({base.str(), root});
    j["scalar"] = format_rational(b.scalar);
    return j;
}

RootProductBound bound_from_json(const nlohmann::json &j) {
    RootProductBound b;
    for (const auto &f : j.at("factors")) {
        Int base = f.at(0).is_string() ? Int(f.at(0).get<std::string>())
                                       : Int(f.at(0).get<long long>());
        b.push(std::move(base), f.at(1).get<long>());
    }
    if (j.contains("scalar")) b.scalar = parse_rational(j.at("scalar").get<std::string>());
    b.validate();
    return b;
}

// ---- factorial-root bounds ---------------------------------------------------

RootProductBound bregman_bound(const std::vector<int> &row_sums) {
    RootProductBound b;
    for (int d : row_sums) {
        if (d < 0) throw std::invalid_argument("bregman_bound: negative row sum");
        if (d == 0) b.push(1, 1); // the caller's count is 0 then; bound stays neutral
        else b.push(factorial(unsigned(d)), d);
    }
    return b;
}

RootProductBound kahn_lovasz_bound(const std::vector<int> &degrees) {
    RootProductBound b;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("kahn_lovasz_bound: negative degree");
        if (d == 0) b.push(1, 1);
        else b.push(factorial(unsigned(d)), 2L * d);
    }
    return b;
}

// ---- binomial tail vs entropy ------------------------------------------------

BinomSumResult binom_sum_bound(int n, const Rat &alpha) {
    if (n < 1) throw std::invalid_argument("binom_sum_bound: n must be >= 1");
    if (alpha <= 0 || alpha > Rat(1, 2))
        throw std::invalid_argument("binom_sum_bound: alpha must lie in (0, 1/2]");
    Rat cut = alpha * n;
    Int imax = boost::multiprecision::numerator(cut) / boost::multiprecision::denominator(cut);
    BinomSumResult r;
    for (Int i = 0; i <= imax; ++i)
        r.lhs += binomial(unsigned(n), i.convert_to<unsigned>());
    r.lhs_log2 = log2_int(r.lhs);
    r.rhs_log2 = binary_entropy(rat_to_double(alpha)) * double(n);
    const double band = 1e-9 * double(n) + 1e-12;
    if (r.lhs_log2 < r.rhs_log2 - band) r.verdict = Verdict::BelowStrict;
    else if (r.lhs_log2 > r.rhs_log2 + band) r.verdict = Verdict::AboveStrict;
    else r.verdict = Verdict::Equal;
    return r;
}

CoinBounds coin_lower_bounds(long n) {
    if (n < 2) throw std::invalid_argument("coin_lower_bounds: n must be >= 2");
    CoinBounds c;
    c.simple = double(n) / std::log2(double(n) + 1.0);
    c.refined = double(n) / (0.5 * std::log2(double(n)) + kCoinRefinedC);
    return c;
}

// ---- lattice bodies ----------------------------------------------------------

CompareResult loomis_whitney_check(const LatticeBody &b) {
    auto [vol, projs] = body_volume_and_projections(b);
    if (vol.value == 0) { // empty body: 0 <= 0, degenerate but true
        CompareResult r;
        r.verdict = Verdict::Equal;
        r.count_log2 = r.bound_log2 = -std::numeric_limits<double>::infinity();
        return r;
    }
    RootProductBound bound;
    for (const CountResult &p : projs) bound.push(p.value, b.dim - 1);
    return compare_exact(vol, bound);
}

// ---- fractional relaxations ----------------------------------------------------

static std::vector<std::pair<int, int>> edge_list(const Graph &h) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (h.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

FractionalWeights fractional_cover(const Graph &h) {
    h.validate();
    if (!h.loop_free()) throw std::invalid_argument("fractional_cover: loops not supported");
    auto edges = edge_list(h);
    if (edges.empty()) throw std::invalid_argument("fractional_cover: graph has no edges");
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) == 0)
            throw std::invalid_argument("fractional_cover: isolated vertex, cover infeasible");

    LinearProgram lp;
    lp.nvars = int(edges.size());
    lp.objective.assign(edges.size(), Rat(-1)); // maximize -(total weight)
    for (int v = 0; v < h.n; ++v) {
        std::vector<Rat> row(edges.size(), Rat(0));
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v) row[e] = 1;
        lp.add_row(std::move(row), Rel::GreaterEq, 1);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::vector<Rat> row(edges.size(), Rat(0));
        row[e] = 1;
        lp.add_row(std::move(row), Rel::LessEq, 1);
    }
    LpSolution sol = solve_lp(lp);
    if (!sol.feasible || !sol.bounded)
        throw std::logic_error("fractional_cover: LP unexpectedly unsolvable");
    FractionalWeights w;
    w.on_edges = true;
    w.edges = std::move(edges);
    w.weights = std::move(sol.x);
    w.objective = -sol.value;
    return w;
}

FractionalWeights fractional_independence(const Graph &h) {
    h.validate();
    if (!h.loop_free())
        throw std::invalid_argument("fractional_independence: loops not supported");
    LinearProgram lp;
    lp.nvars = h.n;
    lp.objective.assign(std::size_t(h.n), Rat(1));
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (h.has_edge(u, v)) {
                std::vector<Rat> row(std::size_t(h.n), Rat(0));
                row[std::size_t(u)] = 1;
                row[std::size_t(v)] = 1;
                lp.add_row(std::move(row), Rel::LessEq, 1);
            }
    for (int v = 0; v < h.n; ++v) {
        std::vector<Rat> row(std::size_t(h.n), Rat(0));
        row[std::size_t(v)] = 1;
        lp.add_row(std::move(row), Rel::LessEq, 1);
    }
    LpSolution sol = solve_lp(lp);
    if (!sol.feasible || !sol.bounded)
        throw std::logic_error("fractional_independence: LP unexpectedly unsolvable");
    FractionalWeights w;
    w.on_edges = false;
    w.weights = std::move(sol.x);
    w.objective = sol.value;
    return w;
}

RootProductBound embed_upper_bound(const Graph &h, long ell) {
    if (ell < 1) throw std::invalid_argument("embed_upper_bound: ell must be >= 1");
    Rat rho = fractional_cover(h).objective;
    const Int &p = boost::multiprecision::numerator(rho);
    const Int &q = boost::multiprecision::denominator(rho);
    RootProductBound b;
    b.push(ipow(Int(2) * ell, p.convert_to<unsigned long long>()), q.convert_to<long>());
    return b;
}

// largest t >= 0 with t^q * e^p <= l^p, i.e. floor((l/e)^(p/q))
static long rational_power_floor(long l, long e, const Rat &exponent) {
    const Int p = boost::multiprecision::numerator(exponent);
    const Int q = boost::multiprecision::denominator(exponent);
    if (p < 0) throw std::invalid_argument("rational_power_floor: negative exponent");
    if (q > caps().root_lcm) throw std::invalid_argument("rational_power_floor: denominator too large");
    const auto pe = p.convert_to<unsigned long long>();
    const auto qe = q.convert_to<unsigned long long>();
    const Int lp = ipow(Int(l), pe), ep = ipow(Int(e), pe);
    Int lo = 0, hi = Int(l) + 1; // t <= (l/e)^1 <= l since exponent <= 1, e >= 1
    while (lo < hi - 1) {        // invariant: lo^q*e^p <= l^p < hi^q*e^p
        Int mid = (lo + hi) / 2;
        if (ipow(mid, qe) * ep <= lp) lo = mid;
        else hi = mid;
    }
    return lo.convert_to<long>();
}

BlowUp hstar_build(const Graph &h, long ell) {
    h.validate();
    if (!h.loop_free()) throw std::invalid_argument("hstar_build: loops not supported");
    if (h.n < 1) throw std::invalid_argument("hstar_build: empty pattern");
    if (h.n > caps().canon_n)
        throw std::invalid_argument("hstar_build: pattern too large to symmetrize");
    const long E = h.edge_count();
    if (ell < std::max(E, 1L))
        throw std::invalid_argument("hstar_build: ell must be at least |E(h)| and positive");

    // optimal fractional independence weights, averaged over the automorphism
    // group: the average of optima is optimal and is symmetric under Aut(h)
    std::vector<Rat> psi = fractional_independence(h).weights;
    std::vector<std::vector<int>> auts = automorphisms(h);
    std::vector<Rat> sym(std::size_t(h.n), Rat(0));
    for (const auto &a : auts)
        for (int v = 0; v < h.n; ++v) sym[std::size_t(v)] += psi[std::size_t(a[std::size_t(v)])];
    for (Rat &s : sym) s /= long(auts.size());

    BlowUp out;
    out.class_size.resize(std::size_t(h.n));
    long total = 0;
    const long base_den = E == 0 ? 1 : E; // edgeless pattern: classes of size ell
    for (int v = 0; v < h.n; ++v) {
        long s = rational_power_floor(ell, base_den, sym[std::size_t(v)]);
        out.class_size[std::size_t(v)] = s;
        total += s;
    }
    if (total > 64) throw std::invalid_argument("hstar_build: blow-up exceeds the 64-vertex cap");

    out.graph = Graph::empty(int(total));
    out.class_of.resize(std::size_t(total));
    std::vector<long> start(std::size_t(h.n) + 1, 0);
    for (int v = 0; v < h.n; ++v) {
        start[std::size_t(v) + 1] = start[std::size_t(v)] + out.class_size[std::size_t(v)];
        for (long k = start[std::size_t(v)]; k < start[std::size_t(v) + 1]; ++k)
            out.class_of[std::size_t(k)] = v;
    }
    Int edge_total = 0;
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v) {
            if (!h.has_edge(u, v)) continue;
            edge_total += Int(out.class_size[std::size_t(u)]) * out.class_size[std::size_t(v)];
            for (long a = start[std::size_t(u)]; a < start[std::size_t(u) + 1]; ++a)
                for (long b = start[std::size_t(v)]; b < start[std::size_t(v) + 1]; ++b)
                    out.graph.add_edge(int(a), int(b));
        }
    if (edge_total > ell)
        throw std::logic_error("hstar_build: edge budget exceeded, construction is wrong");

    Int guaranteed = 1;
    for (long s : out.class_size) guaranteed *= s;
    std::ostringstream id;
    id << "hstar:" << format_graph(h) << ":" << ell;
    out.guaranteed = CountResult{guaranteed, "hstar_guaranteed", fnv1a(id.str())};
    return out;
}

// ---- regular-graph bounds from the bipartite base case --------------------------

static RootProductBound power_bound(const Int &base, long n, int d, const char *who) {
    if (n < 1 || d < 1) throw std::invalid_argument(std::string(who) + ": need n, d >= 1");
    if (n > 4096) throw std::invalid_argument(std::string(who) + ": n too large to encode");
    if (base < 1)
        throw std::invalid_argument(std::string(who) + ": zero base (the count is zero too)");
    long g = std::gcd(n, 2L * d);
    RootProductBound b;
    b.push(ipow(base, (unsigned long long)(n / g)), 2L * d / g);
    return b;
}

RootProductBound colorings_bip_bound(long n, int d, int q) {
    return power_bound(colorings_kdd_closed(q, d).value, n, d, "colorings_bip_bound");
}

RootProductBound homs_bip_bound(long n, int d, const Graph &h) {
    return power_bound(hom_kdd_closed(h, d).value, n, d, "homs_bip_bound");
}

RootProductBound nonbip_order_bound(const Graph &g, const std::vector<int> &order,
                                    const Graph &h) {
    g.validate();
    h.validate();
    int d = 0;
    if (!g.is_regular(&d)) throw std::invalid_argument("nonbip_order_bound: graph not regular");
    if (d < 1) throw std::invalid_argument("nonbip_order_bound: degree must be >= 1");
    if (!g.loop_free()) throw std::invalid_argument("nonbip_order_bound: loops not supported");
    if (int(order.size()) != g.n)
        throw std::invalid_argument("nonbip_order_bound: order has wrong length");
    std::uint64_t seen = 0;
    std::vector<int> p(std::size_t(g.n));
    for (int v : order) {
        if (v < 0 || v >= g.n || (seen >> v & 1))
            throw std::invalid_argument("nonbip_order_bound: order is not a permutation");
        p[std::size_t(v)] = std::popcount(g.adj[std::size_t(v)] & seen);
        seen |= std::uint64_t(1) << v;
    }
    RootProductBound b;
    for (int v = 0; v < g.n; ++v) {
        Int base = hom_kdd_closed(h, p[std::size_t(v)]).value; // p = 0 gives 1
        if (base < 1)
            throw std::invalid_argument("nonbip_order_bound: zero base (the count is zero too)");
        b.push(std::move(base), d);
    }
    // triangle target: the relaxed per-vertex form 6*2^p(v) has the closed
    // form 2^(n/2) * 6^(n/d) because sum_v p(v) = |E| = n*d/2
    if (h.loop_free() && h.n == 3 && h.edge_count() == 3) {
        RootProductBound relaxed, closed;
        for (int v = 0; v < g.n; ++v)
            relaxed.push(Int(6) << p[std::size_t(v)], d);
        closed.push(ipow(Int(2), (unsigned long long)(g.n)), 2);
        closed.push(ipow(Int(6), (unsigned long long)(g.n)), d);
        if (compare_bounds(relaxed, closed) != Verdict::Equal)
            throw std::logic_error("nonbip_order_bound: closed-form cross-check failed");
    }
    return b;
}

double matching_asymptotic_reference(long n, int d, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("matching_asymptotic_reference: alpha must lie in (0,1)");
    if (d < 2) throw std::invalid_argument("matching_asymptotic_reference: d must be >= 2");
    double term = alpha * std::log2(double(d)) + 2.0 * binary_entropy(alpha) +
                  alpha * std::log2(alpha / std::numbers::e);
    return double(n) * term;
}

} // namespace cb
