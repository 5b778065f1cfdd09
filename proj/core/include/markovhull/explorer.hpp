#ifndef MARKOVHULL_EXPLORER_HPP
#define MARKOVHULL_EXPLORER_HPP

#include <cstddef>
#include <vector>

#include "markovhull/oset.hpp"

namespace markovhull {

// Desk-scale searches: enumerate small matrices, enumerate candidate
// O-sets over one matrix, and aggregate what the certificates say. All
// walks are deterministic, so runs reproduce bit for bit.

struct SearchOptions {
    int max_word_len = 2;   // candidate members use words up to this length
    int gen_bound = 4;      // word-length cap inside the generation search
    std::size_t limit = SIZE_MAX;          // stop after this many valid sets
    std::size_t max_candidates = 100000;   // certificate budget
};

struct SearchResult {
    std::vector<Certificate> valid;
    std::vector<Certificate> inconclusive;
    std::size_t candidates_tried = 0;
    std::size_t invalid_count = 0;
    bool exhausted = true;          // every orthogonal candidate was tried
    bool limit_reached = false;
    bool candidate_cap_hit = false;
};

// All 0/1 matrices of the given size with no zero row, letters named
// a, b, c, ... With dedup, one representative per orbit of simultaneous
// row/column permutation (the lexicographically least). Sizes above 4
// throw resource_error; the count grows as 2^(n^2).
std::vector<MatrixRef> enumerate_matrices(int n, bool dedup);

// Tries candidate O-sets: every nonempty pairwise-orthogonal set of
// idempotents with |s| <= max_word_len, the letter range idempotents
// first, the rest in depth-first index order. Each candidate gets a full
// certificate. Stops early at the valid limit or the candidate budget.
SearchResult search_osets(const MatrixRef& T, const SearchOptions& opt);

struct GapPair {
    Certificate cert;
    MatrixRef matrix;  // the original shift
    MatrixRef induced; // the shift on the extracted alphabet
    double rho_matrix = 0;
    double rho_induced = 0;
    double gap = 0;
};

// Filters valid certificates down to those whose induced matrix moves the
// spectral radius by more than min_gap, widest gap first. Each pair
// witnesses two non-conjugate shifts with the same hull. Every certificate
// passed in must be VALID (input_error otherwise) and is replayed from its
// own serialization before use; a replay failure is a library bug and
// throws std::logic_error.
std::vector<GapPair> entropy_gap_pairs(const MatrixRef& T,
                                       const std::vector<Certificate>& certificates,
                                       double min_gap = 1e-6);

struct Separation {
    bool separated = false;
    int k = 0;             // first histogram bin that differs
    long count_first = 0;
    long count_second = 0;
};

// Compares the up-set-size histograms of two hulls for k = 1..max_k. A
// difference proves the idempotent orders (hence the hulls) are not
// isomorphic; agreement up to max_k decides nothing.
Separation separate_hulls(const MatrixRef& A, const MatrixRef& B, int max_k);

struct MatrixScan {
    MatrixRef matrix;
    SearchResult search;
    std::vector<std::size_t> alphabet_sizes; // distinct sizes among valid sets
    bool counterexample = false; // some valid alphabet differs in size
};

// Conjecture check against one matrix: does every valid alternative
// alphabet have exactly as many letters as the original?
MatrixScan scan_matrix(const MatrixRef& T, const SearchOptions& opt);

struct ScanResult {
    std::vector<MatrixScan> matrices;
    std::size_t counterexamples = 0;
    bool complete = true; // no search hit a budget
};

// Runs scan_matrix over every deduplicated matrix of size 1..max_n.
ScanResult conjecture_scan(int max_n, const SearchOptions& opt);

} // namespace markovhull

#endif
