#ifndef MARKOVHULL_TESTS_FIXTURES_HPP
#define MARKOVHULL_TESTS_FIXTURES_HPP

#include <string>

#include "markovhull/element.hpp"
#include "markovhull/shift.hpp"

namespace fixtures {

using namespace markovhull;

// Three letters, golden example: b cannot repeat and c only follows b's
// row pattern. Known spectral radius 2.
inline MatrixRef t1() {
    return make_matrix({"a", "b", "c"}, {{1, 1, 1}, {1, 0, 1}, {0, 1, 0}});
}

// The alternative alphabet induced by the cb-based O-set over t1; its
// radius is the real root of r^3 - 2r^2 - 1.
inline MatrixRef t2() {
    return make_matrix({"x", "y", "z"}, {{1, 1, 1}, {1, 1, 0}, {0, 1, 0}});
}

// Separable from the full 2-shift by the idempotent fingerprint at k = 2.
inline MatrixRef t3() {
    return make_matrix({"a", "b", "c"}, {{1, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

inline MatrixRef full2() { return make_matrix({"a", "b"}, {{1, 1}, {1, 1}}); }

inline MatrixRef ident2() { return make_matrix({"a", "b"}, {{1, 0}, {0, 1}}); }

inline Word w(const MatrixRef& T, const std::string& text) {
    return text.empty() ? Word{} : parse_word(*T, text);
}

// Letter set from a string of single-character letter names.
inline LetterSet ls(const MatrixRef& T, const std::string& names) {
    LetterSet X;
    for (char c : names) X.insert(T->letter_index(std::string(1, c)));
    return X;
}

inline CanonicalElement el(const MatrixRef& T, const std::string& literal) {
    return CanonicalElement::parse_literal(T, literal);
}

} // namespace fixtures

#endif
