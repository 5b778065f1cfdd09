#ifndef MARKOVHULL_OSET_HPP
#define MARKOVHULL_OSET_HPP

#include <string>
#include <vector>

#include "markovhull/element.hpp"

namespace markovhull {

// A candidate O-set is a finite list of distinct nonzero idempotents over
// one matrix. When it passes the five axioms below, the pairs it induces
// form an alternative Markov alphabet presenting the same inverse hull;
// the certificate machinery checks the axioms, extracts that alphabet,
// and then independently confirms by exhibiting each original letter map
// as a product of the new generators.

struct AxiomReport {
    std::string axiom; // "O1".."O5"
    bool pass = false;
    std::string notes;
};

struct AlphabetEntry {
    std::string name; // g0, g1, ...
    CanonicalElement element;
};

struct GenerationWitness {
    std::string target_name;           // original letter
    CanonicalElement target;           // its generator map
    std::vector<std::string> expression; // product of entry names, "g1" or "g1^-1"
};

struct GenerationResult {
    bool complete = false; // every original letter map was reached
    std::vector<GenerationWitness> witnesses;
    std::size_t closure_size = 0;
    int bound = 0; // word-length cap used during the search
};

struct Certificate {
    MatrixRef matrix;
    std::vector<CanonicalElement> oset;
    std::vector<AxiomReport> axioms;
    std::vector<AlphabetEntry> alphabet;
    MatrixRef induced; // null when extraction is empty or malformed
    GenerationResult generation;
    std::string verdict; // VALID, INVALID, INCONCLUSIVE
    std::string note;
};

// input_error unless the list is nonempty, every member is a nonzero
// idempotent over T, and the members are pairwise distinct.
void validate_oset(const MatrixRef& T, const std::vector<CanonicalElement>& O);

// The up-closure of O among nonzero idempotents, sorted; finite because
// strict up-sets are.
std::vector<CanonicalElement> upset_of_oset(const std::vector<CanonicalElement>& O);

// (O1) distinct members multiply to zero.
AxiomReport check_O1(const MatrixRef& T, const std::vector<CanonicalElement>& O);

// (O2) every nonzero idempotent is comparable to a member. Decided by a
// finite sweep; see the implementation for why the cutoff suffices.
AxiomReport check_O2(const MatrixRef& T, const std::vector<CanonicalElement>& O);

// (O3) both the up-closure and the up-closure minus O stay closed under
// multiplication once zero is adjoined.
AxiomReport check_O3(const MatrixRef& T, const std::vector<CanonicalElement>& O);

// (O4) distinct members of the up-closure minus O see distinct subsets of
// O below them.
AxiomReport check_O4(const MatrixRef& T, const std::vector<CanonicalElement>& O);

// (O5) each member has at most one D-equivalent element in the
// up-closure minus O (equivalently, at most one with the same middle set).
AxiomReport check_O5(const MatrixRef& T, const std::vector<CanonicalElement>& O);

std::vector<AxiomReport> check_all_axioms(const MatrixRef& T,
                                          const std::vector<CanonicalElement>& O);

// The induced alphabet: one generator (u, X, v) for every o = (u, X, u)
// in O and partner (v, X, v) in the up-closure minus O with the same X,
// walked in O order. Under (O5) each member contributes at most one.
std::vector<AlphabetEntry> extract_alphabet(const MatrixRef& T,
                                            const std::vector<CanonicalElement>& O);

// The transition matrix on the extracted alphabet: entry (i, j) is 1 when
// the product a_i a_j is nonzero. Letter names follow the entry names.
// input_error if some row comes out all zero.
MatrixRef induced_matrix(const std::vector<AlphabetEntry>& alphabet);

// Breadth-first closure of the extracted generators and their inverses
// under right multiplication, pruning zero and any element whose words
// exceed the length bound, recording for each original letter map the
// first product expression that reaches it. complete means all letters
// were reached; a false result within a small bound is not a refutation.
GenerationResult generation_search(const MatrixRef& T,
                                   const std::vector<AlphabetEntry>& alphabet, int bound);

// Runs the whole pipeline: axioms, extraction, induced matrix, generation
// search. verdict is INVALID when an axiom fails, VALID when everything
// including generation is established, INCONCLUSIVE otherwise (with the
// reason in note). Generation witnesses are replayed internally before
// the certificate is returned; a replay mismatch is a library bug and
// throws std::logic_error.
Certificate build_certificate(const MatrixRef& T, const std::vector<CanonicalElement>& O,
                              int gen_bound);

} // namespace markovhull

#endif
