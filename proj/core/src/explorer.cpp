#include "markovhull/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "markovhull/io.hpp"
#include "markovhull/semilattice.hpp"

namespace markovhull {

namespace {

// Flattened row-major 0/1 pattern after relabelling letters by perm.
std::vector<int> relabelled(const std::vector<std::vector<int>>& m,
                            const std::vector<int>& perm) {
    const std::size_t n = m.size();
    std::vector<int> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(m[perm[i]][perm[j]]);
    return flat;
}

bool lex_minimal_under_relabelling(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::vector<int> self = relabelled(m, perm);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (relabelled(m, perm) < self) return false;
    return true;
}

} // namespace

std::vector<MatrixRef> enumerate_matrices(int n, bool dedup) {
    if (n < 1) throw input_error("matrix size must be at least 1");
    if (n > 4) throw resource_error("matrix enumeration is capped at alphabet size 4");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));

    std::vector<unsigned> rows; // nonzero row patterns, n bits each
    for (unsigned bits = 1; bits < (1u << n); ++bits) rows.push_back(bits);

    std::vector<MatrixRef> out;
    std::vector<unsigned> pick(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pick.size()) {
            std::vector<std::vector<int>> entries;
            for (unsigned bits : pick) {
                std::vector<int> row;
                for (int j = 0; j < n; ++j) row.push_back((bits >> j) & 1u);
                entries.push_back(std::move(row));
            }
            if (!dedup || lex_minimal_under_relabelling(entries))
                out.push_back(make_matrix(names, entries));
            return;
        }
        for (unsigned bits : rows) {
            pick[i] = bits;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

SearchResult search_osets(const MatrixRef& T, const SearchOptions& opt) {
    if (!T) throw usage_error("null transition matrix");
    if (opt.max_word_len < 1) throw input_error("max_word_len must be at least 1");
    if (opt.gen_bound < 0) throw input_error("gen_bound must be nonnegative");

    SearchResult result;
    const auto pool = enumerate_idempotents(T, opt.max_word_len);
    const std::size_t m = pool.size();

    std::vector<std::vector<bool>> orth(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            orth[i][j] = multiply(pool[i], pool[j]).is_zero() &&
                         multiply(pool[j], pool[i]).is_zero();

    // The letter range idempotents go first so the canonical alphabet is
    // always candidate number one.
    std::vector<std::size_t> standard_idx;
    for (const auto& e : standard_oset(T)) {
        const auto it = std::find(pool.begin(), pool.end(), e);
        standard_idx.push_back(static_cast<std::size_t>(it - pool.begin()));
    }
    std::sort(standard_idx.begin(), standard_idx.end());

    bool stop = false;
    auto process = [&](const std::vector<std::size_t>& subset) {
        if (result.candidates_tried >= opt.max_candidates) {
            result.candidate_cap_hit = true;
            result.exhausted = false;
            stop = true;
            return;
        }
        ++result.candidates_tried;
        std::vector<CanonicalElement> O;
        for (std::size_t i : subset) O.push_back(pool[i]);
        Certificate cert = build_certificate(T, O, opt.gen_bound);
        if (cert.verdict == "VALID") {
            result.valid.push_back(std::move(cert));
            if (result.valid.size() >= opt.limit) {
                result.limit_reached = true;
                result.exhausted = false;
                stop = true;
            }
        } else if (cert.verdict == "INCONCLUSIVE") {
            result.inconclusive.push_back(std::move(cert));
        } else {
            ++result.invalid_count;
        }
    };

    process(standard_idx);

    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (stop) return;
        for (std::size_t i = start; i < m && !stop; ++i) {
            bool ok = true;
            for (std::size_t j : cur)
                if (!orth[j][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            if (cur != standard_idx) process(cur);
            if (!stop) dfs(i + 1);
            cur.pop_back();
        }
    };
    dfs(0);
    return result;
}

std::vector<GapPair> entropy_gap_pairs(const MatrixRef& T,
                                       const std::vector<Certificate>& certificates,
                                       double min_gap) {
    if (min_gap < 0) throw input_error("min_gap must be nonnegative");
    const double rho = spectral_radius(*T);
    std::vector<GapPair> out;
    for (const auto& cert : certificates) {
        if (cert.verdict != "VALID")
            throw input_error("entropy gaps are only defined for VALID certificates, got " +
                              cert.verdict);
        std::string why;
        if (!replay_certificate_text(certificate_to_json_text(cert), &why))
            throw std::logic_error("certificate failed replay: " + why);
        const double rho2 = spectral_radius(*cert.induced);
        const double gap = std::abs(rho2 - rho);
        if (gap > min_gap) out.push_back({cert, T, cert.induced, rho, rho2, gap});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const GapPair& a, const GapPair& b) { return a.gap > b.gap; });
    return out;
}

Separation separate_hulls(const MatrixRef& A, const MatrixRef& B, int max_k) {
    if (!A || !B) throw usage_error("null transition matrix");
    const auto ha = fingerprint(A, max_k);
    const auto hb = fingerprint(B, max_k);
    Separation s;
    for (int k = 1; k <= max_k; ++k) {
        const long ca = ha.at(k), cb = hb.at(k);
        if (ca != cb) {
            s.separated = true;
            s.k = k;
            s.count_first = ca;
            s.count_second = cb;
            return s;
        }
    }
    return s;
}

MatrixScan scan_matrix(const MatrixRef& T, const SearchOptions& opt) {
    MatrixScan scan;
    scan.matrix = T;
    scan.search = search_osets(T, opt);
    std::set<std::size_t> sizes;
    for (const auto& cert : scan.search.valid) {
        sizes.insert(cert.alphabet.size());
        if (cert.alphabet.size() != T->size()) scan.counterexample = true;
    }
    scan.alphabet_sizes.assign(sizes.begin(), sizes.end());
    return scan;
}

ScanResult conjecture_scan(int max_n, const SearchOptions& opt) {
    if (max_n < 1) throw input_error("max_n must be at least 1");
    ScanResult result;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& T : enumerate_matrices(n, true)) {
            MatrixScan scan = scan_matrix(T, opt);
            if (scan.counterexample) ++result.counterexamples;
            if (!scan.search.exhausted) result.complete = false;
            result.matrices.push_back(std::move(scan));
        }
    return result;
}

} // namespace markovhull
