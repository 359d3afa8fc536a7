#pragma once
/*
 * Check harness: named verification sweeps over generated instance families.
 *
 * A check pairs an exact counter with a bound (or two independent ways of
 * computing the same quantity) and runs it across a whole family of inputs.
 * Proven inequalities must hold on every instance; the open conjectures are
 * swept the same way but a violation there is a reportable witness rather
 * than a software bug.  Either way the harness records:
 *
 *   - how many instances were checked,
 *   - which instances met the bound with equality ("tight"),
 *   - a machine-re-checkable witness for every violated instance.
 *
 * Witnesses carry the serialized input plus the claimed count and bound, so
 * reverify_witness() can re-run the computation from the witness alone.
 *
 * Reports are deterministic: the same spec (seed included) produces the same
 * JSON bytes modulo the elapsed-time field, regardless of the job count.
 * Randomized families derive one RNG stream per instance index, and tight
 * lists / violation lists are sorted by their canonical encoding before
 * emission so thread interleaving cannot reorder them.
 */

#include "cb/entropy.hpp"
#include "cb/bounds.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cb {

// Parameters for one check run.  -1 means "use the check's default"; the
// effective values are echoed back in Report::params.
struct CheckSpec {
    std::string name;
    long n = -1;       // vertex-count limit (family dependent)
    long d = -1;       // degree parameter
    long q = -1;       // number of colors
    long t_max = -1;   // size limit for per-size counts
    long half_n = -1;  // bipartite part-size limit
    long count = -1;   // number of randomized instances
    std::string target;  // target-graph spec (e.g. "h_wr"); empty = defaults
    std::uint64_t seed = 12345;
    double tol = kDefaultTol;
    int jobs = 1;          // worker threads for the heavy loops
    bool verbose = false;  // keep one Report row per instance
};

// A failed instance, with enough data to recompute both sides offline.
struct Witness {
    std::string kind;   // recomputation recipe (dispatch key for reverify)
    std::string input;  // serialized instance, newlines folded to ';'
    std::string count;  // exact left-hand side (decimal, or a float for
                        // entropy properties)
    nlohmann::ordered_json bound;  // right-hand side / bound description
    nlohmann::ordered_json params; // extra recipe inputs (q, d, order, ...)
    std::string note;   // human-readable one-liner
};

// One per-instance line, retained only in verbose mode (CSV output).
struct InstanceRow {
    std::string instance;
    std::string verdict;
    std::string count;
    std::string bound;
};

struct Report {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    long instances = 0;
    bool pass = true;  // no violations
    bool conjecture = false;  // violations would be witnesses, not bugs
    // per-verdict tallies: BelowStrict/Equal/AboveStrict for bound compares,
    // match/mismatch for identities, ok/violation for property checks
    std::map<std::string, long> verdicts;
    std::vector<std::string> tight;  // canonical encodings of equality cases
    std::vector<Witness> violations;
    std::uint64_t seed = 12345;
    long elapsed_ms = 0;
    std::vector<InstanceRow> rows;  // verbose mode only
};

// Registered check names, in canonical order.
const std::vector<std::string> &check_registry();
bool is_conjecture_check(const std::string &name);

// Run one named check.  Throws std::invalid_argument for unknown names.
Report run_check(const CheckSpec &spec);

// Run several checks in sequence.
std::vector<Report> sweep(const std::vector<CheckSpec> &specs);

// Recompute a witness's count and bound from its serialized input and
// confirm they match the stored values (i.e. the violation is real).
bool reverify_witness(const Witness &w);

nlohmann::ordered_json witness_to_json(const Witness &w);
Witness witness_from_json(const nlohmann::ordered_json &j);
nlohmann::ordered_json report_to_json(const Report &r);

// Full output document: {"defaults": {...}, "reports": [...]}.
nlohmann::ordered_json reports_document(const std::vector<Report> &reports);
void emit_json(std::ostream &out, const std::vector<Report> &reports);
// CSV: one summary line per report, plus per-instance lines in verbose mode.
void emit_csv(std::ostream &out, const std::vector<Report> &reports);

// 0 if every report passed, 1 otherwise.
int exit_code(const std::vector<Report> &reports);

// Deterministic helper: run body(i) for i in [0,count) on `jobs` threads.
// Workers pull indices from a shared counter, so callers must write results
// into preallocated per-index slots rather than shared accumulators.  The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(long count, int jobs, const std::function<void(long)> &body);

} // namespace cb
