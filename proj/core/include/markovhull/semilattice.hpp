#ifndef MARKOVHULL_SEMILATTICE_HPP
#define MARKOVHULL_SEMILATTICE_HPP

#include <map>
#include <string>
#include <vector>

#include "markovhull/element.hpp"

namespace markovhull {

// The nonzero idempotents (s, X, s) are a meet semilattice under the
// natural partial order; everything here analyzes its shape. An idempotent
// (s, X, s) lies below (t, Y, t) exactly when t = s and X is inside Y, or
// t is a proper prefix of s whose continuation letter lies in Y. Going up
// therefore shortens the word, so every strict up-set is finite even
// though the semilattice itself is not.

// All nonzero idempotents with |s| <= depth, sorted by (|s|, s, X).
std::vector<CanonicalElement> enumerate_idempotents(MatrixRef T, int depth);

// Every idempotent strictly above e, sorted. usage_error unless e is a
// nonzero idempotent.
std::vector<CanonicalElement> strict_upset(const CanonicalElement& e);

// The covers of e: minimal elements of its strict up-set. Because the
// up-set is computed in full, these are exact covers of the whole
// semilattice, not of some truncation.
std::vector<CanonicalElement> covers(const CanonicalElement& e);

// Position of an idempotent relative to a finite set O of idempotents,
// with the listed precedence when several apply.
enum class Classification { InO, AboveO, BelowO, Incomparable };
Classification classify(const CanonicalElement& e, const std::vector<CanonicalElement>& O);
std::string classification_name(Classification c);

// For k = 1..max_k, how many idempotents have a strict up-set of exactly
// k elements. An idempotent with |s| = n has at least n - 1 idempotents
// above it (one per nonempty proper prefix), so only words of length
// <= max_k + 1 can contribute and the histogram is exact. The counts are
// invariant under isomorphism of the idempotent order, so differing
// histograms certify non-isomorphic hulls.
std::map<int, long> fingerprint(MatrixRef T, int max_k);

// Graphviz rendering of the Hasse diagram on idempotents with
// |s| <= depth, edges pointing at covers, rankdir=BT so the diagram reads
// upward. Nodes are n0, n1, ... in the enumeration order, labelled with
// element literals; the letter range idempotents (a, follows(a), a) are
// drawn filled.
std::string export_dot(MatrixRef T, int depth);

} // namespace markovhull

#endif
