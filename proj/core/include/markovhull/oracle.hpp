#ifndef MARKOVHULL_ORACLE_HPP
#define MARKOVHULL_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "markovhull/element.hpp"

namespace markovhull {

// A partial bijection on legal words, stored as explicit input/output
// pairs. This is the slow, definition-level route: of_word builds the map
// u |-> w.u straight from the shift, and compose/invert manipulate pairs
// with no canonical-form algebra involved, so results can be replayed
// against the symbolic product rules.
//
// Truncation bookkeeping: complete_to() is a depth D with the guarantee
// that every input of the true map with length <= D appears as a pair
// (and every stored pair is genuinely in the true map). Composition and
// inversion shrink or shift D; comparisons must stay inside it.
class TruncatedMap {
public:
    // The map of theta_w (u |-> w.u on legal words), w nonempty legal,
    // with all inputs of length <= depth.
    static TruncatedMap of_word(MatrixRef T, const Word& w, int depth);

    // The definitional map of a canonical element, inputs up to depth.
    static TruncatedMap realize(const CanonicalElement& el, int depth);

    const MatrixRef& matrix() const { return mat_; }
    const std::map<Word, Word>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    int complete_to() const { return complete_to_; }

    // Output length minus input length, constant across the pairs of any
    // map realizing a hull element; 0 for an empty map.
    int delta() const;

    // "u -> v" per pair, inputs in shortlex order, words rendered with
    // letter names.
    std::vector<std::string> dump() const;

private:
    TruncatedMap(MatrixRef T, std::map<Word, Word> pairs, int complete_to)
        : mat_(std::move(T)), pairs_(std::move(pairs)), complete_to_(complete_to) {}

    friend TruncatedMap compose(const TruncatedMap&, const TruncatedMap&);
    friend TruncatedMap invert(const TruncatedMap&);

    MatrixRef mat_;
    std::map<Word, Word> pairs_;
    int complete_to_;
};

// Pair-chasing composition, f after g. The completeness bound contracts
// to min(D_g, D_f - delta_g) so every surviving claim is still exact.
TruncatedMap compose(const TruncatedMap& f, const TruncatedMap& g);

// Swaps the pairs. Completeness becomes D + delta; an empty map keeps no
// claim (complete_to 0), since inversion cannot see below the horizon.
TruncatedMap invert(const TruncatedMap& f);

// Compares the two maps on the window min(D_f, D_g): false as soon as one
// map holds a pair inside the window that the other lacks or contradicts.
// Throws depth_error when the window is below 1, where no comparison means
// anything.
bool agree_on_window(const TruncatedMap& f, const TruncatedMap& g);

// Decides whether two canonical elements denote the same partial map by
// realizing both to the given depth and comparing pairs. Distinct triples
// always differ by an input of length at most max(|w|) + 1, so the depth
// must reach that; otherwise depth_error. Two zeros are equal at any depth.
bool equal_as_elements(const CanonicalElement& a, const CanonicalElement& b, int depth);

} // namespace markovhull

#endif
