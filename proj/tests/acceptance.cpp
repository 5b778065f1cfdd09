// End-to-end acceptance gate. argv[1] names the command line binary.
// Nine checks run against the library and that binary; each prints one
// PASS/FAIL line and the exit code is the number of failures.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "json.hpp"
#include "markovhull/explorer.hpp"
#include "markovhull/io.hpp"
#include "markovhull/oracle.hpp"
#include "markovhull/oset.hpp"
#include "markovhull/semilattice.hpp"

using json = nlohmann::json;
using namespace markovhull;

namespace {

// Pinned tolerances and budgets.
constexpr double kRadiusGolden = 2.0;
constexpr double kRadiusGoldenTol = 1e-6;
constexpr double kRadiusAlt = 2.206;
constexpr double kRadiusAltTol = 1e-3;
constexpr double kMinGap = 0.2;
constexpr int kEqualityDepth = 3;
constexpr int kGenBound = 4;
constexpr double kBudgetEntropy = 1.0;
constexpr double kBudgetCheck = 5.0;
constexpr double kBudgetCompare = 5.0;
constexpr double kBudgetVerify = 30.0;
constexpr double kBudgetSweep = 10.0;
constexpr double kBudgetScan = 600.0;

std::string cli;

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& what, double elapsed) {
    std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                elapsed);
    if (!ok) ++failures;
}

void criterion(int n, const std::string& what, bool (*body)()) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail = what;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail += std::string(" [exception: ") + e.what() + "]";
    }
    report(n, ok, detail, seconds_since(start));
}

std::string path_t1 = "/tmp/mh_acc_t1.json";
std::string path_t2 = "/tmp/mh_acc_t2.json";
std::string path_t3 = "/tmp/mh_acc_t3.json";
std::string path_full2 = "/tmp/mh_acc_full2.json";
std::string path_oset_alt = "/tmp/mh_acc_oset_alt.json";

void write_fixture_files() {
    const auto T = fixtures::t1();
    write_text_file(path_t1, matrix_to_json_text(*T));
    write_text_file(path_t2, matrix_to_json_text(*fixtures::t2()));
    write_text_file(path_t3, matrix_to_json_text(*fixtures::t3()));
    write_text_file(path_full2, matrix_to_json_text(*fixtures::full2()));
    write_text_file(path_oset_alt,
                    oset_to_json_text({fixtures::el(T, "a|a,b,c|a"),
                                       fixtures::el(T, "cb|a,c|cb"),
                                       fixtures::el(T, "-|b|-")}));
}

bool check_entropy() {
    auto start = std::chrono::steady_clock::now();
    const auto r1 = run_cli("entropy " + path_t1);
    const double t1_time = seconds_since(start);
    if (r1.code != 0 || r1.out != "2.000000\n") return false;
    if (std::fabs(std::stod(r1.out) - kRadiusGolden) > kRadiusGoldenTol) return false;

    start = std::chrono::steady_clock::now();
    const auto r2 = run_cli("entropy " + path_t2);
    const double t2_time = seconds_since(start);
    if (r2.code != 0) return false;
    if (std::fabs(std::stod(r2.out) - kRadiusAlt) > kRadiusAltTol) return false;
    return t1_time < kBudgetEntropy && t2_time < kBudgetEntropy;
}

bool check_certificate_cli() {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_cli("check " + path_t1 + " " + path_oset_alt);
    if (r.code != 0) return false;
    const json j = json::parse(r.out);
    if (j["verdict"] != "VALID") return false;

    const std::vector<std::pair<std::string, std::string>> expected_alphabet{
        {"g0", "a|a,b,c|-"}, {"g1", "cb|a,c|-"}, {"g2", "-|b|c"}};
    if (j["alphabet"].size() != expected_alphabet.size()) return false;
    for (std::size_t i = 0; i < expected_alphabet.size(); ++i) {
        if (j["alphabet"][i]["name"] != expected_alphabet[i].first) return false;
        if (j["alphabet"][i]["element"] != expected_alphabet[i].second) return false;
    }

    if (j["induced_matrix"]["matrix"] != json::parse("[[1,1,1],[1,1,0],[0,1,0]]"))
        return false;

    bool b_witnessed = false;
    for (const auto& w : j["generation"]["witnesses"])
        if (w["target"] == "b" && w["product"] == json::parse("[\"g2\",\"g1\"]"))
            b_witnessed = true;
    return b_witnessed && seconds_since(start) < kBudgetCheck;
}

bool check_gap_both_ways() {
    const auto T1 = fixtures::t1();
    const auto T2 = fixtures::t2();
    const std::vector<CanonicalElement> forward{fixtures::el(T1, "a|a,b,c|a"),
                                               fixtures::el(T1, "cb|a,c|cb"),
                                               fixtures::el(T1, "-|b|-")};
    const std::vector<CanonicalElement> reverse{fixtures::el(T2, "x|x,y,z|x"),
                                               fixtures::el(T2, "zy|x,y|zy"),
                                               fixtures::el(T2, "-|y|-")};
    const Certificate fwd = build_certificate(T1, forward, kGenBound);
    const Certificate rev = build_certificate(T2, reverse, kGenBound);
    if (fwd.verdict != "VALID" || rev.verdict != "VALID") return false;
    if (!fwd.induced->same_entries(*T2) || !rev.induced->same_entries(*T1)) return false;

    std::string why;
    if (!replay_certificate_text(certificate_to_json_text(fwd), &why)) return false;
    if (!replay_certificate_text(certificate_to_json_text(rev), &why)) return false;

    const auto fwd_pairs = entropy_gap_pairs(T1, {fwd});
    const auto rev_pairs = entropy_gap_pairs(T2, {rev});
    if (fwd_pairs.size() != 1 || rev_pairs.size() != 1) return false;
    return fwd_pairs[0].gap > kMinGap && rev_pairs[0].gap > kMinGap;
}

bool check_compare_cli() {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_cli("compare " + path_t3 + " " + path_full2);
    if (r.code != 0) return false;
    const json j = json::parse(r.out);
    if (j["verdict"] != "SEPARATED" || j["k"] != 2) return false;
    if (j["counts"] != json::parse("[3,4]")) return false;
    return seconds_since(start) < kBudgetCompare;
}

bool check_verify_cli() {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_cli("verify " + path_t1 + " --depth 10 --seed 42");
    if (r.code != 0) return false;
    const json j = json::parse(r.out);
    if (j["pass"] != true) return false;
    if (j["random_pairs"]["total"] != 1000 || j["random_pairs"]["agreed"] != 1000)
        return false;
    for (const char* branch : {"equal", "extends", "co_extends", "disjoint"})
        if (j["inverse_products"]["branches"][branch] < 1) return false;
    return seconds_since(start) < kBudgetVerify;
}

bool check_oracle_idempotents() {
    const auto start = std::chrono::steady_clock::now();
    const auto T = fixtures::t1();
    const auto pool = all_elements(T, 2);
    if (pool.size() != 114) return false;
    for (const auto& g : pool)
        if (equal_as_elements(g.source(), g.range(), kEqualityDepth) != g.is_idempotent())
            return false;
    return seconds_since(start) < kBudgetSweep;
}

bool check_letter_d_classes() {
    const auto T = fixtures::t1();
    const auto O = standard_oset(T);
    std::vector<CanonicalElement> boundary;
    for (const auto& e : upset_of_oset(O))
        if (std::find(O.begin(), O.end(), e) == O.end()) boundary.push_back(e);
    if (boundary.size() != 3) return false;

    for (Letter a = 0; a < T->size(); ++a) {
        const auto range_e = CanonicalElement::generator(T, Word(1, a)).range();
        int partners = 0;
        for (const auto& e : boundary)
            if (d_related(e, range_e)) ++partners;
        if (partners != 1) return false;
    }
    return true;
}

bool check_semilattice_shape() {
    const auto r = run_cli("semilattice " + path_t1 + " --depth 1");
    if (r.code != 0) return false;
    std::size_t nodes = 0, edges = 0;
    for (std::size_t pos = r.out.find("[label="); pos != std::string::npos;
         pos = r.out.find("[label=", pos + 1))
        ++nodes;
    for (std::size_t pos = r.out.find(" -> "); pos != std::string::npos;
         pos = r.out.find(" -> ", pos + 1))
        ++edges;
    if (nodes != 8 || edges != 7) return false;
    for (const char* edge : {"n0 -> n2", "n1 -> n2", "n3 -> n5", "n4 -> n5",
                             "n5 -> n1", "n6 -> n0", "n7 -> n1"})
        if (r.out.find(edge) == std::string::npos) return false;

    const auto T = fixtures::t1();
    const auto O = standard_oset(T);
    int in_o = 0, above = 0, below = 0, incomparable = 0;
    for (const auto& e : enumerate_idempotents(T, 2)) {
        switch (classify(e, O)) {
            case Classification::InO: ++in_o; break;
            case Classification::AboveO:
                // strictly above the standard set sit exactly the
                // empty-word idempotents e_X
                if (!e.left().empty()) return false;
                ++above;
                break;
            case Classification::BelowO:
                if (e.left().empty()) return false;
                ++below;
                break;
            case Classification::Incomparable: ++incomparable; break;
        }
    }
    return in_o == 3 && above == 3 && below == 12 && incomparable == 0;
}

bool check_conjecture_scan() {
    const auto start = std::chrono::steady_clock::now();
    const SearchOptions opt;
    const auto result = conjecture_scan(2, opt);
    if (result.matrices.size() != 7) return false;
    if (result.counterexamples != 0 || !result.complete) return false;
    for (const auto& scan : result.matrices)
        for (const auto& cert : scan.search.valid) {
            std::string why;
            if (!replay_certificate_text(certificate_to_json_text(cert), &why)) return false;
        }

    const auto golden = scan_matrix(fixtures::t1(), opt);
    if (golden.alphabet_sizes != std::vector<std::size_t>{3}) return false;
    if (golden.counterexample) return false;
    for (const auto& cert : golden.search.valid) {
        std::string why;
        if (cert.verdict != "VALID") return false;
        if (!replay_certificate_text(certificate_to_json_text(cert), &why)) return false;
    }
    // candidates that pass the axioms but miss generation stay in their
    // own bucket
    for (const auto& cert : golden.search.inconclusive)
        if (cert.verdict != "INCONCLUSIVE") return false;
    return seconds_since(start) < kBudgetScan;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <cli-binary>\n");
        return 64;
    }
    cli = argv[1];
    write_fixture_files();

    criterion(1, "spectral radius through the command line", check_entropy);
    criterion(2, "certificate for the word-length-2 alternative alphabet",
              check_certificate_cli);
    criterion(3, "entropy gap witnessed in both directions", check_gap_both_ways);
    criterion(4, "fingerprint separation of two shifts", check_compare_cli);
    criterion(5, "algebra cross-validated against the map oracle", check_verify_cli);
    criterion(6, "oracle detection of idempotents across all short elements",
              check_oracle_idempotents);
    criterion(7, "each letter map D-matched to exactly one boundary idempotent",
              check_letter_d_classes);
    criterion(8, "depth-1 semilattice diagram and classification",
              check_semilattice_shape);
    criterion(9, "alphabet-size scan over all shifts on one or two letters",
              check_conjecture_scan);

    return failures;
}
