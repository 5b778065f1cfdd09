#ifndef MARKOVHULL_ELEMENT_HPP
#define MARKOVHULL_ELEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "markovhull/shift.hpp"

namespace markovhull {

// One element of the inverse hull of a Markov shift, in canonical form.
//
// A nonzero element is a triple (s, X, w): s and w are legal words (possibly
// empty), X is a nonempty set from the matrix's constructible family with
// X inside the follow set of the last letter of s and of w (when nonempty).
// The triple denotes the partial bijection on nonempty legal words
//
//     w.a.u  |->  s.a.u        for every a in X and every tail u,
//
// so source and range are the cylinder unions indexed by X behind w and s.
// The zero element is the empty map. Values are immutable; all operations
// that combine two elements require them to share a transition matrix.
class CanonicalElement {
public:
    // The zero (empty map) element.
    static CanonicalElement zero(MatrixRef T);

    // Validating constructor; throws input_error describing the first
    // violated constraint. Use for untrusted (parsed) data.
    static CanonicalElement make(MatrixRef T, Word s, LetterSet X, Word w);

    // Builds theta_s . prod_i (theta_{x_i}^-1 theta_{x_i}) . theta_w^-1
    // directly: X is the intersection of the follow sets of the middle
    // letters and of the last letters of s and w. Empty intersection gives
    // zero. With no middles and both words empty the result would be the
    // identity map, which is an element only when the full alphabet set is
    // constructible; otherwise input_error.
    static CanonicalElement canonicalize(MatrixRef T, const Word& s,
                                         const std::vector<Letter>& middles,
                                         const Word& w);

    // The generator theta_s = (s, follows(last s), eps), s nonempty legal.
    static CanonicalElement generator(MatrixRef T, const Word& s);

    bool is_zero() const { return zero_; }
    const MatrixRef& matrix() const { return mat_; }

    // Triple components; usage_error on the zero element.
    const Word& left() const;
    LetterSet middle() const;
    const Word& right() const;

    // Zero counts as idempotent; a triple is idempotent iff s == w.
    bool is_idempotent() const { return zero_ || s_ == w_; }

    CanonicalElement inverse() const;

    // source = a^-1 a = (w, X, w); range = a a^-1 = (s, X, s).
    // Both are usage_error on zero.
    CanonicalElement source() const;
    CanonicalElement range() const;

    // Membership test and application of the underlying partial map.
    // apply returns nullopt outside the domain.
    bool in_domain(const Word& x) const;
    std::optional<Word> apply(const Word& x) const;

    // Renders "s|x1,x2,...|w" with "-" for an empty word, or "0".
    std::string to_literal() const;
    static CanonicalElement parse_literal(MatrixRef T, const std::string& text);

    // Value equality of the triple (matrix identity is not compared).
    friend bool operator==(const CanonicalElement& a, const CanonicalElement& b) {
        if (a.zero_ != b.zero_) return false;
        if (a.zero_) return true;
        return a.s_ == b.s_ && a.w_ == b.w_ && a.x_ == b.x_;
    }
    friend bool operator!=(const CanonicalElement& a, const CanonicalElement& b) {
        return !(a == b);
    }

    // Total order for containers and deterministic listings: zero first,
    // then by shortlex s, shortlex w, then X as a bitmask.
    friend bool operator<(const CanonicalElement& a, const CanonicalElement& b) {
        if (a.zero_ != b.zero_) return a.zero_;
        if (a.zero_) return false;
        ShortlexLess lt;
        if (a.s_ != b.s_) return lt(a.s_, b.s_);
        if (a.w_ != b.w_) return lt(a.w_, b.w_);
        return a.x_ < b.x_;
    }

private:
    CanonicalElement(MatrixRef T, Word s, LetterSet X, Word w, bool zero)
        : mat_(std::move(T)), s_(std::move(s)), w_(std::move(w)), x_(X), zero_(zero) {}

    // Returns a description of the first violated invariant, if any.
    std::optional<std::string> violation() const;

    friend CanonicalElement multiply(const CanonicalElement&, const CanonicalElement&);

    MatrixRef mat_;
    Word s_, w_;
    LetterSet x_;
    bool zero_;
};

// Composite g after h (the semigroup product gh). Zero absorbs. The result
// is re-checked against the canonical-form invariants; a violation is a
// library bug and throws std::logic_error.
CanonicalElement multiply(const CanonicalElement& g, const CanonicalElement& h);

// Natural partial order, defined on idempotents only (usage_error
// otherwise). Zero is the minimum.
bool leq(const CanonicalElement& e, const CanonicalElement& f);

// Green's relations. Two nonzero elements are L-related iff their sources
// agree, R-related iff their ranges agree, D-related iff their middle sets
// agree; H is L and R together, which collapses to equality here.
bool l_related(const CanonicalElement& a, const CanonicalElement& b);
bool r_related(const CanonicalElement& a, const CanonicalElement& b);
bool h_related(const CanonicalElement& a, const CanonicalElement& b);
bool d_related(const CanonicalElement& a, const CanonicalElement& b);

// Every nonzero element whose words both have length <= max_len, sorted.
// The hull is infinite; this is the finite truncation the analyses walk.
std::vector<CanonicalElement> all_elements(MatrixRef T, int max_len);

// The range idempotents of the letter generators, in alphabet order:
// theta_a theta_a^-1 = (a, follows(a), a).
std::vector<CanonicalElement> standard_oset(MatrixRef T);

} // namespace markovhull

#endif
