/*
 * Harness-level tests: the check registry, the witness pipeline, report
 * serialization, determinism across job counts, and the CLI exit-code
 * contract (exercised through the built binary when CB_BIN is set).
 *
 * The deliberately inverted self-test check doubles as the fixture here: it
 * is the one check that is guaranteed to fail, so it exercises the witness
 * and exit-code paths without constructing a fake Report by hand.
 */

#include "cb/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

using namespace cb;

namespace {

std::string json_eq_modulo_time(Report a, Report b) {
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    std::string da = report_to_json(a).dump(2);
    std::string db = report_to_json(b).dump(2);
    if (da == db) return {};
    return "reports differ:\n" + da + "\n---\n" + db;
}

int run_cli(const std::string &args) {
    const char *bin = std::getenv("CB_BIN");
    REQUIRE(bin != nullptr);
    int rc = std::system((std::string(bin) + " " + args).c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("check registry is frozen") {
    const std::vector<std::string> want = {
        "bregman",        "kahn-lovasz",  "thm6.1",          "thm6.2",
        "thm6.3",         "conj7.1",      "umc",             "conj-kq",
        "conj-wr",        "conj-it",      "alon-friedland",  "loomis-whitney",
        "entropy-fuzz",   "shearer-fuzz", "coin",            "triangle-family",
        "embed-bound",    "duality",      "binom-sum",       "chernoff-tail",
        "closed-forms",   "matching-identity", "selftest-invert",
    };
    CHECK(check_registry() == want);

    // exactly the open-problem sweeps are flagged as conjectures
    const std::vector<std::string> conj = {"conj7.1", "umc", "conj-kq", "conj-wr", "conj-it"};
    for (const std::string &name : check_registry()) {
        bool expected = std::find(conj.begin(), conj.end(), name) != conj.end();
        CHECK(is_conjecture_check(name) == expected);
    }

    CheckSpec bad;
    bad.name = "no-such-check";
    CHECK_THROWS_AS((void)run_check(bad), std::invalid_argument);
}

TEST_CASE("the inverted self-test fails and its witness reverifies") {
    CheckSpec spec;
    spec.name = "selftest-invert";
    Report r = run_check(spec);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.conjecture);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.verdicts.at("AboveStrict") == 1);

    const Witness &w = r.violations[0];
    CHECK(w.kind == "selftest-invert");
    CHECK(w.count == "6");  // pm(K33)
    CHECK(reverify_witness(w));

    // tampering with any stored side must be caught
    Witness tampered_count = w;
    tampered_count.count = "7";
    CHECK_FALSE(reverify_witness(tampered_count));
    Witness tampered_input = w;
    tampered_input.input.back() = tampered_input.input.back() == '1' ? '2' : '1';
    CHECK_FALSE(reverify_witness(tampered_input));

    CHECK(exit_code({r}) == 1);
    CHECK(exit_code({}) == 0);
}

TEST_CASE("witness and report serialization round trips") {
    CheckSpec spec;
    spec.name = "selftest-invert";
    Report r = run_check(spec);
    REQUIRE(r.violations.size() == 1);

    nlohmann::ordered_json wj = witness_to_json(r.violations[0]);
    Witness back = witness_from_json(wj);
    CHECK(back.kind == r.violations[0].kind);
    CHECK(back.input == r.violations[0].input);
    CHECK(back.count == r.violations[0].count);
    CHECK(back.bound == r.violations[0].bound);
    CHECK(back.params == r.violations[0].params);
    CHECK(back.note == r.violations[0].note);
    CHECK(reverify_witness(back));

    nlohmann::ordered_json rj = report_to_json(r);
    for (const char *key : {"check", "params", "instances", "pass", "conjecture",
                            "verdicts", "tight", "violations", "seed", "elapsed_ms"})
        CHECK(rj.contains(key));
    CHECK(rj["check"] == "selftest-invert");
    CHECK(rj["pass"] == false);
    CHECK(rj["instances"] == 1);
}

TEST_CASE("exhaustive 4x4 permanent sweep has the full tight census") {
    CheckSpec spec;
    spec.name = "bregman";
    spec.count = 0;  // exhaustive part only, no random matrices
    Report r = run_check(spec);
    CHECK(r.pass);
    CHECK(r.instances == 65536);
    // every tight 4x4 matrix: block-diagonal (up to permutation) unions of
    // all-ones blocks -- 24 + 72 + 18 + 16 + 1 = 131 of them
    CHECK(r.verdicts.at("Equal") == 131);
    CHECK(long(r.tight.size()) == 131);
}

TEST_CASE("conjecture sweeps report their flag") {
    CheckSpec spec;
    spec.name = "umc";
    Report r = run_check(spec);
    CHECK(r.pass);
    CHECK(r.conjecture);
    CHECK(r.instances > 0);
}

TEST_CASE("reports are byte-identical across job counts") {
    CheckSpec one;
    one.name = "entropy-fuzz";
    one.count = 300;
    one.jobs = 1;
    one.verbose = true;
    CheckSpec three = one;
    three.jobs = 3;
    std::string diff = json_eq_modulo_time(run_check(one), run_check(three));
    CHECK_MESSAGE(diff.empty(), diff);

    CheckSpec b1;
    b1.name = "bregman";
    b1.count = 64;
    b1.jobs = 1;
    CheckSpec b4 = b1;
    b4.jobs = 4;
    diff = json_eq_modulo_time(run_check(b1), run_check(b4));
    CHECK_MESSAGE(diff.empty(), diff);
}

TEST_CASE("emitters: JSON document shape and CSV header") {
    CheckSpec spec;
    spec.name = "selftest-invert";
    std::vector<Report> reports = {run_check(spec)};

    std::ostringstream js;
    emit_json(js, reports);
    nlohmann::json doc = nlohmann::json::parse(js.str());
    REQUIRE(doc.contains("defaults"));
    REQUIRE(doc.contains("reports"));
    CHECK(doc["defaults"].contains("tolerance"));
    CHECK(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["check"] == "selftest-invert");

    std::ostringstream cs;
    emit_csv(cs, reports);
    std::string csv = cs.str();
    CHECK(csv.rfind("check,row,instance,verdict,count,bound\n", 0) == 0);
    CHECK(csv.find("selftest-invert,summary,,FAIL,1,1") != std::string::npos);
}

TEST_CASE("parallel_for: per-index slots and exception propagation") {
    const long count = 1000;
    for (int jobs : {1, 4}) {
        std::vector<long> slot(std::size_t(count), 0);
        parallel_for(count, jobs, [&](long i) { slot[std::size_t(i)] = i * i; });
        long long sum = 0;
        for (long v : slot) sum += v;
        CHECK(sum == 332833500);  // sum of squares below 1000
    }
    CHECK_THROWS_AS(
        parallel_for(100, 4,
                     [](long i) {
                         if (i == 57) throw std::runtime_error("body failure");
                     }),
        std::runtime_error);
}

TEST_CASE("CLI exit codes through the built binary") {
    if (std::getenv("CB_BIN") == nullptr) {
        MESSAGE("CB_BIN not set; skipping CLI exit-code checks");
        return;
    }
    // success path
    CHECK(run_cli("enumerate regular --n 4 --d 3 > /dev/null") == 0);
    CHECK(run_cli("count colorings --graph k_dd:3 --q 3 > /dev/null") == 0);
    // violation path: the inverted self-test must exit 1
    CHECK(run_cli("check selftest-invert --out /dev/null 2> /dev/null") == 1);
    // usage / bad input path
    CHECK(run_cli("check no-such-check 2> /dev/null") == 2);
    CHECK(run_cli("count permanent --matrix /no/such/file 2> /dev/null") == 2);
    CHECK(run_cli("--definitely-not-a-flag 2> /dev/null") == 2);
}
