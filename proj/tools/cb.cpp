/*
 * cb — command-line front end for the exact counting and bound toolkit.
 *
 * Verbs:
 *   entropy    entropy of a joint distribution read from a file
 *   count      one exact counter (permanent, matchings, colorings, homs, ...)
 *   bound      one bound next to its exact count, with the exact verdict
 *   check      one named check from the registry
 *   sweep      many checks; default list = every check except the
 *              deliberately failing self-test
 *   enumerate  isomorphism classes of a graph family
 *
 * The CLI is a thin wrapper: every number printed is the library result
 * rendered in decimal (counts exactly; entropies and log2 values with 17
 * significant digits).  Exit codes: 0 success / all checks pass, 1 some
 * check produced a violation witness, 2 usage or file errors.
 */

#include "cb/verify.hpp"

#include "cb/caps.hpp"
#include "cb/enumerate.hpp"
#include "cb/lp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace cb;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 12345;
    double tol = kDefaultTol;
    int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
    bool verbose = false;
};

std::string slurp(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Exact decimal rendering of a bound when all roots are trivial; otherwise
// the value is irrational and is rendered as 2^(log2 value).
std::string bound_display(const RootProductBound &b) {
    bool exact = true;
    for (const auto &f : b.factors)
        if (f.second != 1) exact = false;
    if (exact) {
        Rat v = b.scalar;
        for (const auto &f : b.factors) v *= Rat(f.first);
        if (boost::multiprecision::denominator(v) == 1)
            return boost::multiprecision::numerator(v).str();
        return format_rational(v);
    }
    return "2^" + fmt17(b.log2_value());
}

std::uint32_t parse_mask(const std::string &s) {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos, 0);
    if (pos != s.size()) throw UsageError("bad coordinate mask: " + s);
    return std::uint32_t(v);
}

// ---------------------------------------------------------------------------
// entropy verb
// ---------------------------------------------------------------------------

struct EntropyArgs {
    std::string joint_path;
    std::string mask;
    std::string cond;  // "A,Z"
};

int run_entropy(const GlobalOpts &g, const EntropyArgs &a, std::ostream &out) {
    JointDistribution j = parse_joint(slurp(a.joint_path));
    std::uint32_t full = (std::uint32_t(1) << j.arity) - 1;
    ordered_json doc;
    doc["arity"] = j.arity;
    double h = entropy(j.marginal(full));
    doc["entropy"] = h;
    if (g.format == "text") out << "entropy " << fmt17(h) << '\n';
    ordered_json marginals = ordered_json::array();
    for (int i = 0; i < j.arity; ++i) {
        double hi = entropy(j.marginal(std::uint32_t(1) << i));
        marginals.push_back(hi);
        if (g.format == "text") out << "marginal " << i << ' ' << fmt17(hi) << '\n';
    }
    doc["marginals"] = marginals;
    if (!a.mask.empty()) {
        std::uint32_t m = parse_mask(a.mask);
        double hm = entropy(j.marginal(m));
        doc["mask"] = m;
        doc["mask_entropy"] = hm;
        if (g.format == "text") out << "mask " << m << ' ' << fmt17(hm) << '\n';
    }
    if (!a.cond.empty()) {
        auto comma = a.cond.find(',');
        if (comma == std::string::npos)
            throw UsageError("--cond expects two masks: A,Z");
        std::uint32_t am = parse_mask(a.cond.substr(0, comma));
        std::uint32_t zm = parse_mask(a.cond.substr(comma + 1));
        double hc = conditional_entropy(j, am, zm);
        doc["cond_A"] = am;
        doc["cond_Z"] = zm;
        doc["cond_entropy"] = hc;
        if (g.format == "text")
            out << "conditional " << am << '|' << zm << ' ' << fmt17(hc) << '\n';
    }
    if (g.format != "text") out << doc.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// count verb
// ---------------------------------------------------------------------------

struct CountArgs {
    std::string counter;
    std::string graph;
    std::string target;
    std::string pattern;
    std::string host;
    std::string matrix_path;
    long q = -1, t = -1, n = -1;
};

int run_count(const GlobalOpts &g, const CountArgs &a, std::ostream &out) {
    auto need_graph = [&]() {
        if (a.graph.empty()) throw UsageError("counter '" + a.counter + "' needs --graph");
        return parse_graph_spec(a.graph);
    };
    Int value;
    if (a.counter == "permanent") {
        if (a.matrix_path.empty()) throw UsageError("counter 'permanent' needs --matrix");
        value = permanent(parse_matrix(slurp(a.matrix_path))).value;
    } else if (a.counter == "pm") {
        value = perfect_matchings(need_graph()).value;
    } else if (a.counter == "matchings") {
        Graph gr = need_graph();
        value = a.t >= 0 ? matchings_of_size(gr, int(a.t)).value : matchings_total(gr).value;
    } else if (a.counter == "independent") {
        Graph gr = need_graph();
        if (a.t >= 0) {
            std::vector<Int> poly = independence_polynomial(gr);
            value = std::size_t(a.t) < poly.size() ? poly[std::size_t(a.t)] : Int(0);
        } else {
            value = independent_sets_total(gr).value;
        }
    } else if (a.counter == "colorings") {
        if (a.q < 0) throw UsageError("counter 'colorings' needs --q");
        value = colorings(need_graph(), int(a.q)).value;
    } else if (a.counter == "hom") {
        if (a.target.empty()) throw UsageError("counter 'hom' needs --target");
        value = hom_count(need_graph(), parse_graph_spec(a.target)).value;
    } else if (a.counter == "embed") {
        if (a.pattern.empty() || a.host.empty())
            throw UsageError("counter 'embed' needs --pattern and --host");
        value = embed_count(parse_graph_spec(a.pattern), parse_graph_spec(a.host)).value;
    } else if (a.counter == "cycle-sum" || a.counter == "even-cycle-sum") {
        auto sums = cycle_cover_sums(need_graph());
        value = a.counter == "cycle-sum" ? sums.first.value : sums.second.value;
    } else if (a.counter == "triangle-family") {
        if (a.n < 3) throw UsageError("counter 'triangle-family' needs --n >= 3");
        value = max_triangle_intersecting(int(a.n)).value;
    } else if (a.counter == "mindist") {
        if (a.n < 1) throw UsageError("counter 'mindist' needs --n >= 1");
        value = min_distinguishing(int(a.n)).value;
    } else {
        throw UsageError("unknown counter: " + a.counter +
                         " (permanent, pm, matchings, independent, colorings, hom, "
                         "embed, cycle-sum, even-cycle-sum, triangle-family, mindist)");
    }
    if (g.format == "text") {
        out << value.str() << '\n';
    } else {
        ordered_json doc;
        doc["verb"] = "count";
        doc["counter"] = a.counter;
        if (!a.graph.empty()) doc["graph"] = a.graph;
        if (!a.target.empty()) doc["target"] = a.target;
        if (!a.pattern.empty()) doc["pattern"] = a.pattern;
        if (!a.host.empty()) doc["host"] = a.host;
        if (a.q >= 0) doc["q"] = a.q;
        if (a.t >= 0) doc["t"] = a.t;
        if (a.n >= 0) doc["n"] = a.n;
        doc["value"] = value.str();
        out << doc.dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bound verb
// ---------------------------------------------------------------------------

struct BoundArgs {
    std::string name;
    std::string graph;
    std::string target;
    std::string pattern;
    std::string matrix_path;
    std::string order;  // comma-separated vertex list
    long q = -1, n = -1, d = -1, ell = -1;
};

std::vector<int> parse_order(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int run_bound(const GlobalOpts &g, const BoundArgs &a, std::ostream &out) {
    RootProductBound bound;
    Int count;
    if (a.name == "bregman") {
        if (a.matrix_path.empty()) throw UsageError("bound 'bregman' needs --matrix");
        ZeroOneMatrix m = parse_matrix(slurp(a.matrix_path));
        bound = bregman_bound(m.row_sums());
        count = permanent(m).value;
    } else if (a.name == "kahn-lovasz") {
        if (a.graph.empty()) throw UsageError("bound 'kahn-lovasz' needs --graph");
        Graph gr = parse_graph_spec(a.graph);
        std::vector<int> degs(static_cast<std::size_t>(gr.n));
        for (int v = 0; v < gr.n; ++v) degs[std::size_t(v)] = gr.degree(v);
        bound = kahn_lovasz_bound(degs);
        count = perfect_matchings(gr).value;
    } else if (a.name == "bip-colorings") {
        if (a.graph.empty() || a.q < 0 || a.d < 0)
            throw UsageError("bound 'bip-colorings' needs --graph, --d and --q");
        Graph gr = parse_graph_spec(a.graph);
        bound = colorings_bip_bound(gr.n, int(a.d), int(a.q));
        count = colorings(gr, int(a.q)).value;
    } else if (a.name == "bip-homs") {
        if (a.graph.empty() || a.target.empty() || a.d < 0)
            throw UsageError("bound 'bip-homs' needs --graph, --target and --d");
        Graph gr = parse_graph_spec(a.graph);
        Graph h = parse_graph_spec(a.target);
        bound = homs_bip_bound(gr.n, int(a.d), h);
        count = hom_count(gr, h).value;
    } else if (a.name == "order") {
        if (a.graph.empty() || a.target.empty())
            throw UsageError("bound 'order' needs --graph and --target");
        Graph gr = parse_graph_spec(a.graph);
        Graph h = parse_graph_spec(a.target);
        std::vector<int> ord;
        if (!a.order.empty()) ord = parse_order(a.order);
        else
            for (int v = 0; v < gr.n; ++v) ord.push_back(v);
        bound = nonbip_order_bound(gr, ord, h);
        count = hom_count(gr, h).value;
    } else if (a.name == "embed") {
        if (a.pattern.empty() || a.graph.empty())
            throw UsageError("bound 'embed' needs --pattern and --graph (the host)");
        Graph h = parse_graph_spec(a.pattern);
        Graph host = parse_graph_spec(a.graph);
        long ell = a.ell >= 0 ? a.ell : host.edge_count();
        bound = embed_upper_bound(h, ell);
        count = embed_count(h, host).value;
    } else {
        throw UsageError("unknown bound: " + a.name +
                         " (bregman, kahn-lovasz, bip-colorings, bip-homs, order, embed)");
    }
    CompareResult cr = compare_exact(count, bound);
    if (g.format == "text") {
        out << "bound " << bound_display(bound) << ", count " << count.str() << ", "
            << verdict_name(cr.verdict) << '\n';
        if (g.verbose)
            out << "bound_log2 " << fmt17(cr.bound_log2) << "\ncount_log2 "
                << fmt17(cr.count_log2) << '\n';
    } else {
        ordered_json doc;
        doc["verb"] = "bound";
        doc["name"] = a.name;
        doc["bound"] = bound_to_json(bound);
        doc["bound_display"] = bound_display(bound);
        doc["bound_log2"] = cr.bound_log2;
        doc["count"] = count.str();
        doc["verdict"] = verdict_name(cr.verdict);
        out << doc.dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check / sweep verbs
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string name;
    long n = -1, d = -1, q = -1, t_max = -1, half_n = -1, count = -1;
    std::string target;
    std::vector<std::string> list;  // sweep only
};

CheckSpec to_spec(const GlobalOpts &g, const CheckArgs &a, const std::string &name) {
    CheckSpec s;
    s.name = name;
    s.n = a.n;
    s.d = a.d;
    s.q = a.q;
    s.t_max = a.t_max;
    s.half_n = a.half_n;
    s.count = a.count;
    s.target = a.target;
    s.seed = g.seed;
    s.tol = g.tol;
    s.jobs = g.jobs;
    s.verbose = g.verbose;
    return s;
}

void print_defaults_text(std::ostream &out) {
    out << "defaults: tolerance=" << fmt17(kDefaultTol) << " seed=12345"
        << " caps: canon_n=" << caps().canon_n << " enum_regular_n=" << caps().enum_regular_n
        << " enum_bip_half=" << caps().enum_bip_half << " enum_all_n=" << caps().enum_all_n
        << " permanent_n=" << caps().permanent_n << " matching_n=" << caps().matching_n
        << " cycle_n=" << caps().cycle_n << " distinguish_n=" << caps().distinguish_n
        << " mindist_n=" << caps().mindist_n << " root_lcm=" << caps().root_lcm << '\n';
}

void print_report_text(std::ostream &out, const Report &r) {
    out << "check " << r.check << ": " << (r.pass ? "PASS" : "FAIL")
        << "  instances=" << r.instances << " tight=" << r.tight.size()
        << " violations=" << r.violations.size() << " seed=" << r.seed
        << " elapsed_ms=" << r.elapsed_ms << '\n';
    out << "  verdicts:";
    for (const auto &kv : r.verdicts) out << ' ' << kv.first << '=' << kv.second;
    out << '\n';
    std::size_t shown = 0;
    for (const Witness &w : r.violations) {
        if (++shown > 5) {
            out << "  ... " << (r.violations.size() - 5) << " more violations\n";
            break;
        }
        out << "  violation kind=" << w.kind << "\n    note: " << w.note
            << "\n    input: " << w.input << "\n    count: " << w.count
            << "\n    bound: " << w.bound.dump() << "\n    params: " << w.params.dump()
            << '\n';
    }
    if (r.check == "selftest-invert" && !r.pass)
        out << "  (expected: this check fails by design)\n";
}

int run_checks(const GlobalOpts &g, const std::vector<CheckSpec> &specs, std::ostream &out) {
    std::vector<Report> reports = sweep(specs);
    if (g.format == "json") {
        emit_json(out, reports);
    } else if (g.format == "csv") {
        emit_csv(out, reports);
    } else {
        print_defaults_text(out);
        for (const Report &r : reports) print_report_text(out, r);
        long fails = 0;
        for (const Report &r : reports)
            if (!r.pass) ++fails;
        out << (fails ? "RESULT: FAIL (" + std::to_string(fails) + " of " +
                            std::to_string(reports.size()) + " checks failed)"
                      : "RESULT: PASS (" + std::to_string(reports.size()) + " checks)")
            << '\n';
    }
    return exit_code(reports);
}

// ---------------------------------------------------------------------------
// enumerate verb
// ---------------------------------------------------------------------------

struct EnumArgs {
    std::string family;
    long n = -1, d = -1, half_n = -1;
    bool list = false;
};

int run_enumerate(const GlobalOpts &g, const EnumArgs &a, std::ostream &out) {
    std::vector<Graph> graphs;
    if (a.family == "regular") {
        if (a.n < 1 || a.d < 0) throw UsageError("enumerate regular needs --n and --d");
        graphs = enumerate_regular(int(a.n), int(a.d));
    } else if (a.family == "bipartite-regular") {
        if (a.half_n < 1 || a.d < 0)
            throw UsageError("enumerate bipartite-regular needs --half-n and --d");
        graphs = enumerate_bipartite_regular(int(a.half_n), int(a.d));
    } else if (a.family == "all") {
        if (a.n < 1) throw UsageError("enumerate all needs --n");
        graphs = enumerate_all(int(a.n));
    } else if (a.family == "connected") {
        if (a.n < 1) throw UsageError("enumerate connected needs --n");
        graphs = enumerate_connected(int(a.n));
    } else {
        throw UsageError("unknown family: " + a.family +
                         " (regular, bipartite-regular, all, connected)");
    }
    if (g.format == "text") {
        out << graphs.size() << '\n';
        if (a.list)
            for (const Graph &gr : graphs) {
                std::string enc = format_graph(gr);
                while (!enc.empty() && enc.back() == '\n') enc.pop_back();
                for (char &c : enc)
                    if (c == '\n') c = ';';
                out << enc << '\n';
            }
    } else {
        ordered_json doc;
        doc["verb"] = "enumerate";
        doc["family"] = a.family;
        if (a.n >= 0) doc["n"] = a.n;
        if (a.d >= 0) doc["d"] = a.d;
        if (a.half_n >= 0) doc["half_n"] = a.half_n;
        doc["classes"] = graphs.size();
        if (a.list) {
            ordered_json arr = ordered_json::array();
            for (const Graph &gr : graphs) {
                std::string enc = format_graph(gr);
                while (!enc.empty() && enc.back() == '\n') enc.pop_back();
                for (char &c : enc)
                    if (c == '\n') c = ';';
                arr.push_back(enc);
            }
            doc["graphs"] = arr;
        }
        out << doc.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

int main(int argc, char **argv) {
    GlobalOpts g;
    EntropyArgs ea;
    CountArgs ca;
    BoundArgs ba;
    CheckArgs ka, sa;
    EnumArgs na;

    CLI::App app{"cb — exact counting, entropy, and bound verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Help for all subcommands");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--seed", g.seed, "Seed for randomized families")->capture_default_str();
    app.add_option("--tol", g.tol, "Floating-point tolerance for entropy checks")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads (1 = fully serial)")
        ->capture_default_str();
    app.add_flag("--verbose", g.verbose, "Per-instance detail in reports");

    CLI::App *entropy_cmd =
        app.add_subcommand("entropy", "Entropy of a joint distribution from a file");
    entropy_cmd->add_option("--joint", ea.joint_path, "Joint distribution file")->required();
    entropy_cmd->add_option("--mask", ea.mask, "Coordinate mask for one marginal entropy");
    entropy_cmd->add_option("--cond", ea.cond, "Two masks A,Z for H(A|Z)");

    CLI::App *count_cmd = app.add_subcommand("count", "One exact counter");
    count_cmd
        ->add_option("counter", ca.counter,
                     "permanent|pm|matchings|independent|colorings|hom|embed|"
                     "cycle-sum|even-cycle-sum|triangle-family|mindist")
        ->required();
    count_cmd->add_option("--graph", ca.graph, "Graph spec (k_dd:3, knd:12,3, kn:5, h_ind, "
                                               "h_wr, cycle:6, path:4, empty:3, file:PATH)");
    count_cmd->add_option("--target", ca.target, "Target graph spec (hom)");
    count_cmd->add_option("--pattern", ca.pattern, "Pattern graph spec (embed)");
    count_cmd->add_option("--host", ca.host, "Host graph spec (embed)");
    count_cmd->add_option("--matrix", ca.matrix_path, "0-1 matrix file (permanent)");
    count_cmd->add_option("--q", ca.q, "Number of colors");
    count_cmd->add_option("--t", ca.t, "Size parameter (matchings/independent)");
    count_cmd->add_option("--n", ca.n, "Size parameter (triangle-family/mindist)");

    CLI::App *bound_cmd = app.add_subcommand("bound", "One bound beside its exact count");
    bound_cmd
        ->add_option("name", ba.name,
                     "bregman|kahn-lovasz|bip-colorings|bip-homs|order|embed")
        ->required();
    bound_cmd->add_option("--graph", ba.graph, "Graph spec");
    bound_cmd->add_option("--target", ba.target, "Target graph spec");
    bound_cmd->add_option("--pattern", ba.pattern, "Pattern graph spec (embed)");
    bound_cmd->add_option("--matrix", ba.matrix_path, "0-1 matrix file (bregman)");
    bound_cmd->add_option("--order", ba.order, "Comma-separated vertex order (order)");
    bound_cmd->add_option("--q", ba.q, "Number of colors (bip-colorings)");
    bound_cmd->add_option("--d", ba.d, "Degree parameter (bip-colorings/bip-homs)");
    bound_cmd->add_option("--ell", ba.ell, "Edge budget (embed; default = host edges)");

    CLI::App *check_cmd = app.add_subcommand("check", "Run one named check");
    check_cmd->add_option("name", ka.name, "Check name from the registry")->required();
    check_cmd->add_option("--n", ka.n, "Max size (check-specific)");
    check_cmd->add_option("--d", ka.d, "Degree (check-specific)");
    check_cmd->add_option("--q", ka.q, "Colors (check-specific)");
    check_cmd->add_option("--t-max", ka.t_max, "Max matching/set size");
    check_cmd->add_option("--half-n", ka.half_n, "Max bipartite part size");
    check_cmd->add_option("--count", ka.count, "Number of random instances");
    check_cmd->add_option("--target", ka.target, "Target graph spec override");

    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Run many checks");
    sweep_cmd->add_option("--checks", sa.list,
                          "Comma-separated check names (default: all except "
                          "selftest-invert)")
        ->delimiter(',');
    sweep_cmd->add_option("--count", sa.count, "Random-instance override for every check");

    CLI::App *list_cmd = app.add_subcommand("checks", "List the check registry");

    CLI::App *enum_cmd = app.add_subcommand("enumerate", "Isomorphism classes of a family");
    enum_cmd->add_option("family", na.family, "regular|bipartite-regular|all|connected")
        ->required();
    enum_cmd->add_option("--n", na.n, "Vertices");
    enum_cmd->add_option("--d", na.d, "Degree");
    enum_cmd->add_option("--half-n", na.half_n, "Part size (bipartite-regular)");
    enum_cmd->add_flag("--list", na.list, "Print each class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ofstream out_file;
        std::ostream *out = &std::cout;
        if (!g.out_path.empty()) {
            out_file.open(g.out_path);
            if (!out_file) throw UsageError("cannot open output file: " + g.out_path);
            out = &out_file;
        }
        if (g.jobs < 1) g.jobs = 1;
        if (entropy_cmd->parsed()) return run_entropy(g, ea, *out);
        if (count_cmd->parsed()) return run_count(g, ca, *out);
        if (bound_cmd->parsed()) return run_bound(g, ba, *out);
        if (check_cmd->parsed())
            return run_checks(g, {to_spec(g, ka, ka.name)}, *out);
        if (sweep_cmd->parsed()) {
            std::vector<std::string> names = sa.list;
            if (names.empty()) {
                for (const std::string &n : check_registry())
                    if (n != "selftest-invert") names.push_back(n);
            }
            std::vector<CheckSpec> specs;
            for (const std::string &n : names) specs.push_back(to_spec(g, sa, n));
            return run_checks(g, specs, *out);
        }
        if (list_cmd->parsed()) {
            for (const std::string &n : check_registry())
                *out << n << (is_conjecture_check(n) ? " (conjecture)" : "") << '\n';
            return 0;
        }
        if (enum_cmd->parsed()) return run_enumerate(g, na, *out);
        throw UsageError("no verb given");
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
