// Command line front end. Every subcommand reads JSON files, writes its
// report to stdout and keeps stderr for diagnostics. Exit codes:
//   0 pass/valid, 1 fail/invalid, 2 input error, 3 inconclusive,
//   4 resource bound, 70 internal fault.

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "markovhull/element.hpp"
#include "markovhull/errors.hpp"
#include "markovhull/explorer.hpp"
#include "markovhull/io.hpp"
#include "markovhull/oracle.hpp"
#include "markovhull/oset.hpp"
#include "markovhull/semilattice.hpp"
#include "markovhull/shift.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace markovhull;

void emit(const json& report) {
    std::fputs((report.dump(2) + "\n").c_str(), stdout);
}

MatrixRef load_matrix(const std::string& path) {
    return matrix_from_json_text(read_text_file(path));
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("config file must hold a JSON object");
    return j;
}

// Config keys mirror flag names; an explicit flag always wins.
template <typename T>
void from_cfg(const json& cfg, const CLI::Option* opt, const char* key, T& var) {
    if (opt->count() > 0 || !cfg.contains(key)) return;
    try {
        var = cfg.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw input_error(std::string("config key \"") + key + "\" has the wrong type");
    }
}

json certificate_json(const Certificate& cert) {
    return json::parse(certificate_to_json_text(cert));
}

json matrix_json(const TransitionMatrix& T) { return json::parse(matrix_to_json_text(T)); }

int run_entropy(const std::string& file, double tol) {
    const MatrixRef T = load_matrix(file);
    std::printf("%.6f\n", spectral_radius(*T, tol));
    return 0;
}

int run_semilattice(const std::string& file, int depth, const std::string& format) {
    const MatrixRef T = load_matrix(file);
    if (format == "dot") {
        std::fputs(export_dot(T, depth).c_str(), stdout);
        return 0;
    }
    if (format == "json") {
        std::fputs(fingerprint_to_json_text(fingerprint(T, depth)).c_str(), stdout);
        return 0;
    }
    throw input_error("unknown format \"" + format + "\" (expected dot or json)");
}

int run_check(const std::string& mfile, const std::string& ofile, int gen_bound) {
    const MatrixRef T = load_matrix(mfile);
    const auto O = oset_from_json_text(T, read_text_file(ofile));
    const Certificate cert = build_certificate(T, O, gen_bound);
    std::fputs(certificate_to_json_text(cert).c_str(), stdout);
    if (cert.verdict == "VALID") return 0;
    if (cert.verdict == "INVALID") return 1;
    return 3;
}

int run_find_osets(const std::string& file, int max_word_len, long limit) {
    if (limit < 1) throw input_error("limit must be at least 1");
    const MatrixRef T = load_matrix(file);
    SearchOptions opt;
    opt.max_word_len = max_word_len;
    opt.limit = static_cast<std::size_t>(limit);
    const SearchResult res = search_osets(T, opt);

    json report;
    report["matrix"] = matrix_json(*T);
    report["max_word_len"] = max_word_len;
    report["limit"] = limit;
    report["candidates_tried"] = res.candidates_tried;
    report["invalid_count"] = res.invalid_count;
    report["exhausted"] = res.exhausted;
    report["limit_reached"] = res.limit_reached;
    report["candidate_cap_hit"] = res.candidate_cap_hit;
    report["valid"] = json::array();
    for (const auto& cert : res.valid) report["valid"].push_back(certificate_json(cert));
    report["inconclusive"] = json::array();
    for (const auto& cert : res.inconclusive)
        report["inconclusive"].push_back(certificate_json(cert));
    emit(report);
    std::fprintf(stderr, "tried %zu candidate sets, %zu valid\n", res.candidates_tried,
                 res.valid.size());
    return res.candidate_cap_hit ? 4 : 0;
}

int run_compare(const std::string& f1, const std::string& f2, int K) {
    const MatrixRef A = load_matrix(f1);
    const MatrixRef B = load_matrix(f2);
    const Separation s = separate_hulls(A, B, K);
    json report;
    report["verdict"] = s.separated ? "SEPARATED" : "INDISTINGUISHABLE";
    report["K"] = K;
    if (s.separated) {
        report["k"] = s.k;
        report["counts"] = json::array({s.count_first, s.count_second});
    }
    emit(report);
    return s.separated ? 0 : 3;
}

json scan_entry(const MatrixScan& scan) {
    json entry;
    entry["matrix"] = matrix_json(*scan.matrix);
    entry["candidates_tried"] = scan.search.candidates_tried;
    entry["valid_count"] = scan.search.valid.size();
    entry["inconclusive_count"] = scan.search.inconclusive.size();
    entry["alphabet_sizes"] = scan.alphabet_sizes;
    entry["exhausted"] = scan.search.exhausted;
    entry["counterexample"] = scan.counterexample;
    if (scan.counterexample) {
        entry["counterexample_certificates"] = json::array();
        for (const auto& cert : scan.search.valid)
            if (cert.alphabet.size() != scan.matrix->size())
                entry["counterexample_certificates"].push_back(certificate_json(cert));
    }
    return entry;
}

int finish_scan(const ScanResult& result, json& report) {
    report["matrices_scanned"] = result.matrices.size();
    report["matrices"] = json::array();
    for (const auto& scan : result.matrices) report["matrices"].push_back(scan_entry(scan));
    report["counterexamples"] = result.counterexamples;
    report["complete"] = result.complete;
    emit(report);
    if (result.counterexamples > 0) return 1;
    return result.complete ? 0 : 4;
}

int run_conjecture(int max_n, int max_word_len, const std::string& matrix_file) {
    SearchOptions opt;
    opt.max_word_len = max_word_len;
    json report;
    report["max_word_len"] = max_word_len;
    ScanResult result;
    if (!matrix_file.empty()) {
        result.matrices.push_back(scan_matrix(load_matrix(matrix_file), opt));
        const MatrixScan& scan = result.matrices.back();
        if (scan.counterexample) ++result.counterexamples;
        if (!scan.search.exhausted) result.complete = false;
    } else {
        report["max_n"] = max_n;
        result = conjecture_scan(max_n, opt);
    }
    return finish_scan(result, report);
}

// Cross-validation of the symbolic algebra against the definition-level
// map oracle. Two suites, both conclusive at the pinned sizes:
//   1. pairs random products over elements with |s|, |w| <= 3, each
//      checked as multiply(g, h) vs compose of the realized maps;
//   2. every product theta_u theta_v and theta_u^-1 theta_v for legal
//      words |u|, |v| <= 3, checked against both the closed forms and the
//      pair-chased oracle maps.
// A composed map is complete to at least depth - 3, and distinct elements
// at these sizes differ by an input of length at most 7, so depth >= 10
// makes every comparison decisive.
constexpr int kVerifyWordLen = 3;
constexpr int kVerifyPairs = 1000;

int run_verify(const std::string& file, int depth, unsigned seed) {
    if (depth < 2 * kVerifyWordLen + 4)
        throw depth_error("cross-validation at word length 3 needs depth at least 10");
    const MatrixRef T = load_matrix(file);

    const auto pool = all_elements(T, kVerifyWordLen);
    std::mt19937 rng(seed);
    long pair_hits = 0;
    for (int i = 0; i < kVerifyPairs; ++i) {
        const auto& g = pool[rng() % pool.size()];
        const auto& h = pool[rng() % pool.size()];
        const CanonicalElement p = multiply(g, h);
        const TruncatedMap composed =
            compose(TruncatedMap::realize(g, depth), TruncatedMap::realize(h, depth));
        if (agree_on_window(composed, TruncatedMap::realize(p, depth))) ++pair_hits;
    }

    long word_total = 0, word_hits = 0;
    long inv_total = 0, inv_hits = 0;
    std::map<std::string, long> branches = {
        {"equal", 0}, {"extends", 0}, {"co_extends", 0}, {"disjoint", 0}};
    auto is_prefix = [](const Word& p, const Word& w) {
        return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
    };
    const auto words = enumerate_language(*T, kVerifyWordLen);
    for (const auto& u : words) {
        const TruncatedMap mu = TruncatedMap::of_word(T, u, depth);
        for (const auto& v : words) {
            const TruncatedMap mv = TruncatedMap::of_word(T, v, depth);

            ++word_total;
            const CanonicalElement prod =
                multiply(CanonicalElement::generator(T, u), CanonicalElement::generator(T, v));
            const CanonicalElement closed = is_legal(*T, u + v)
                                                ? CanonicalElement::generator(T, u + v)
                                                : CanonicalElement::zero(T);
            if (prod == closed &&
                agree_on_window(compose(mu, mv), TruncatedMap::realize(prod, depth)))
                ++word_hits;

            ++inv_total;
            const CanonicalElement iprod =
                multiply(CanonicalElement::generator(T, u).inverse(),
                         CanonicalElement::generator(T, v));
            CanonicalElement iclosed = CanonicalElement::zero(T);
            if (u == v) {
                ++branches["equal"];
                iclosed = CanonicalElement::generator(T, u).source();
            } else if (is_prefix(u, v)) {
                ++branches["extends"];
                iclosed = CanonicalElement::generator(T, v.substr(u.size()));
            } else if (is_prefix(v, u)) {
                ++branches["co_extends"];
                iclosed = CanonicalElement::generator(T, u.substr(v.size())).inverse();
            } else {
                ++branches["disjoint"];
            }
            if (iprod == iclosed &&
                agree_on_window(compose(invert(mu), mv), TruncatedMap::realize(iprod, depth)))
                ++inv_hits;
        }
    }

    const bool pass =
        pair_hits == kVerifyPairs && word_hits == word_total && inv_hits == inv_total;
    json report;
    report["depth"] = depth;
    report["seed"] = seed;
    report["random_pairs"] = {{"total", kVerifyPairs}, {"agreed", pair_hits}};
    report["word_products"] = {{"total", word_total}, {"agreed", word_hits}};
    report["inverse_products"] = {{"total", inv_total}, {"agreed", inv_hits},
                                  {"branches", branches}};
    report["pass"] = pass;
    emit(report);
    return pass ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Symbolic computation in the inverse hull of a Markov shift"};
    app.require_subcommand(1);

    std::string config_file;
    app.add_option("--config", config_file,
                   "JSON file with default flag values (keys match flag names)");

    std::string ent_file;
    double tol = 1e-9;
    auto* ent = app.add_subcommand("entropy", "Spectral radius of a transition matrix");
    ent->add_option("matrix", ent_file, "matrix JSON file")->required();
    auto* tol_opt = ent->add_option("--tol", tol, "enclosure width to stop at");

    std::string semi_file, format = "dot";
    int semi_depth = 1;
    auto* semi =
        app.add_subcommand("semilattice", "Idempotent semilattice diagram or fingerprint");
    semi->add_option("matrix", semi_file, "matrix JSON file")->required();
    auto* depth_opt = semi->add_option("--depth", semi_depth, "word length cap");
    auto* format_opt = semi->add_option("--format", format, "dot or json");

    std::string chk_mfile, chk_ofile;
    int gen_bound = 4;
    auto* chk = app.add_subcommand("check", "Decide the axioms for a candidate O-set");
    chk->add_option("matrix", chk_mfile, "matrix JSON file")->required();
    chk->add_option("oset", chk_ofile, "O-set JSON file")->required();
    auto* gb_opt = chk->add_option("--gen-bound", gen_bound,
                                   "word length cap in the generation search");

    std::string find_file;
    int find_mwl = 2;
    long find_limit = 100;
    auto* fnd = app.add_subcommand("find-osets", "Search for valid O-sets");
    fnd->add_option("matrix", find_file, "matrix JSON file")->required();
    auto* mwl_opt = fnd->add_option("--max-word-len", find_mwl, "member word length cap");
    auto* limit_opt = fnd->add_option("--limit", find_limit, "stop after this many valid sets");

    std::string cmp_f1, cmp_f2;
    int K = 4;
    auto* cmp = app.add_subcommand("compare", "Try to distinguish two hulls");
    cmp->add_option("first", cmp_f1, "matrix JSON file")->required();
    cmp->add_option("second", cmp_f2, "matrix JSON file")->required();
    auto* k_opt = cmp->add_option("--K", K, "fingerprint depth");

    int conj_max_n = 2, conj_mwl = 2;
    std::string conj_matrix;
    auto* conj = app.add_subcommand("conjecture", "Scan small shifts for alphabet-size drift");
    auto* maxn_opt = conj->add_option("--max-n", conj_max_n, "largest alphabet size");
    auto* cmwl_opt = conj->add_option("--max-word-len", conj_mwl, "member word length cap");
    auto* cmat_opt = conj->add_option("--matrix", conj_matrix,
                                      "restrict the scan to one matrix file");

    std::string ver_file;
    int ver_depth = 10;
    unsigned ver_seed = 42;
    auto* ver = app.add_subcommand("verify", "Cross-validate algebra against the map oracle");
    ver->add_option("matrix", ver_file, "matrix JSON file")->required();
    auto* vd_opt = ver->add_option("--depth", ver_depth, "oracle truncation depth");
    auto* vs_opt = ver->add_option("--seed", ver_seed, "random pair seed");

    // let the global --config trail a subcommand's own flags
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    const json cfg = load_config(config_file);
    if (*ent) {
        from_cfg(cfg, tol_opt, "tol", tol);
        return run_entropy(ent_file, tol);
    }
    if (*semi) {
        from_cfg(cfg, depth_opt, "depth", semi_depth);
        from_cfg(cfg, format_opt, "format", format);
        return run_semilattice(semi_file, semi_depth, format);
    }
    if (*chk) {
        from_cfg(cfg, gb_opt, "gen-bound", gen_bound);
        return run_check(chk_mfile, chk_ofile, gen_bound);
    }
    if (*fnd) {
        from_cfg(cfg, mwl_opt, "max-word-len", find_mwl);
        from_cfg(cfg, limit_opt, "limit", find_limit);
        return run_find_osets(find_file, find_mwl, find_limit);
    }
    if (*cmp) {
        from_cfg(cfg, k_opt, "K", K);
        return run_compare(cmp_f1, cmp_f2, K);
    }
    if (*conj) {
        from_cfg(cfg, maxn_opt, "max-n", conj_max_n);
        from_cfg(cfg, cmwl_opt, "max-word-len", conj_mwl);
        from_cfg(cfg, cmat_opt, "matrix", conj_matrix);
        return run_conjecture(conj_max_n, conj_mwl, conj_matrix);
    }
    from_cfg(cfg, vd_opt, "depth", ver_depth);
    from_cfg(cfg, vs_opt, "seed", ver_seed);
    return run_verify(ver_file, ver_depth, ver_seed);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const input_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const depth_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const resource_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal fault: %s\n", e.what());
        return 70;
    }
}
