#include "markovhull/element.hpp"

#include <sstream>
#include <stdexcept>

namespace markovhull {

namespace {

void require_same_matrix(const CanonicalElement& a, const CanonicalElement& b) {
    if (a.matrix() == b.matrix()) return;
    if (*a.matrix() == *b.matrix()) return;
    throw usage_error("elements over different transition matrices cannot be combined");
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

} // namespace

CanonicalElement CanonicalElement::zero(MatrixRef T) {
    if (!T) throw usage_error("null transition matrix");
    return CanonicalElement(std::move(T), {}, {}, {}, true);
}

std::optional<std::string> CanonicalElement::violation() const {
    if (zero_) return std::nullopt;
    const TransitionMatrix& T = *mat_;
    if (!is_legal(T, s_))
        return "left word \"" + word_to_string(T, s_) + "\" is not legal";
    if (!is_legal(T, w_))
        return "right word \"" + word_to_string(T, w_) + "\" is not legal";
    if (x_.empty()) return std::string("middle set is empty");
    if (!T.family_contains(x_))
        return "middle set is not an intersection of follow sets";
    if (!s_.empty() && !x_.subset_of(T.follows(static_cast<Letter>(s_.back()))))
        return "middle set is not contained in the follow set of the last letter of \"" +
               word_to_string(T, s_) + "\"";
    if (!w_.empty() && !x_.subset_of(T.follows(static_cast<Letter>(w_.back()))))
        return "middle set is not contained in the follow set of the last letter of \"" +
               word_to_string(T, w_) + "\"";
    return std::nullopt;
}

CanonicalElement CanonicalElement::make(MatrixRef T, Word s, LetterSet X, Word w) {
    if (!T) throw usage_error("null transition matrix");
    CanonicalElement el(std::move(T), std::move(s), X, std::move(w), false);
    if (auto why = el.violation()) throw input_error(*why);
    return el;
}

CanonicalElement CanonicalElement::canonicalize(MatrixRef T, const Word& s,
                                                const std::vector<Letter>& middles,
                                                const Word& w) {
    if (!T) throw usage_error("null transition matrix");
    const TransitionMatrix& M = *T;
    if (!is_legal(M, s))
        throw input_error("left word \"" + word_to_string(M, s) + "\" is not legal");
    if (!is_legal(M, w))
        throw input_error("right word \"" + word_to_string(M, w) + "\" is not legal");
    for (Letter x : middles)
        if (static_cast<std::size_t>(x) >= M.size())
            throw input_error("middle letter index out of range");
    LetterSet X = M.full_set();
    if (!s.empty()) X = X & M.follows(static_cast<Letter>(s.back()));
    if (!w.empty()) X = X & M.follows(static_cast<Letter>(w.back()));
    for (Letter x : middles) X = X & M.follows(x);
    if (X.empty()) return zero(std::move(T));
    if (!M.family_contains(X))
        throw input_error(
            "the identity map is not an element here: the full alphabet set "
            "is not an intersection of follow sets");
    return CanonicalElement(std::move(T), s, X, w, false);
}

CanonicalElement CanonicalElement::generator(MatrixRef T, const Word& s) {
    if (!T) throw usage_error("null transition matrix");
    if (s.empty()) throw input_error("a generator needs a nonempty word");
    if (!is_legal(*T, s))
        throw input_error("word \"" + word_to_string(*T, s) + "\" is not legal");
    LetterSet X = T->follows(static_cast<Letter>(s.back()));
    return CanonicalElement(std::move(T), s, X, {}, false);
}

const Word& CanonicalElement::left() const {
    if (zero_) throw usage_error("the zero element has no components");
    return s_;
}

LetterSet CanonicalElement::middle() const {
    if (zero_) throw usage_error("the zero element has no components");
    return x_;
}

const Word& CanonicalElement::right() const {
    if (zero_) throw usage_error("the zero element has no components");
    return w_;
}

CanonicalElement CanonicalElement::inverse() const {
    if (zero_) return *this;
    return CanonicalElement(mat_, w_, x_, s_, false);
}

CanonicalElement CanonicalElement::source() const {
    if (zero_) throw usage_error("the zero element has no source idempotent");
    return CanonicalElement(mat_, w_, x_, w_, false);
}

CanonicalElement CanonicalElement::range() const {
    if (zero_) throw usage_error("the zero element has no range idempotent");
    return CanonicalElement(mat_, s_, x_, s_, false);
}

bool CanonicalElement::in_domain(const Word& x) const {
    if (zero_) return false;
    if (x.size() <= w_.size()) return false;
    if (!is_prefix(w_, x)) return false;
    if (!x_.contains(static_cast<Letter>(x[w_.size()]))) return false;
    return is_legal(*mat_, x);
}

std::optional<Word> CanonicalElement::apply(const Word& x) const {
    if (!in_domain(x)) return std::nullopt;
    return s_ + x.substr(w_.size());
}

std::string CanonicalElement::to_literal() const {
    if (zero_) return "0";
    const TransitionMatrix& T = *mat_;
    std::string out = s_.empty() ? "-" : word_to_string(T, s_);
    out += '|';
    bool first = true;
    for (Letter a : x_.letters()) {
        if (!first) out += ',';
        out += T.letter_name(a);
        first = false;
    }
    out += '|';
    out += w_.empty() ? "-" : word_to_string(T, w_);
    return out;
}

CanonicalElement CanonicalElement::parse_literal(MatrixRef T, const std::string& text) {
    if (!T) throw usage_error("null transition matrix");
    if (text == "0") return zero(std::move(T));
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw input_error("element literal \"" + text +
                          "\" must have the form s|x1,x2,...|w (or \"0\")");
    auto read_word = [&](const std::string& part) -> Word {
        if (part == "-") return {};
        if (part.empty())
            throw input_error("element literal \"" + text +
                              "\" has an empty word slot; write \"-\" for the empty word");
        return parse_word(*T, part);
    };
    Word s = read_word(parts[0]);
    Word w = read_word(parts[2]);
    LetterSet X;
    std::stringstream xs(parts[1]);
    std::string token;
    while (std::getline(xs, token, ','))
        X.insert(T->letter_index(token));
    if (X.empty())
        throw input_error("element literal \"" + text + "\" lists no middle letters");
    return make(std::move(T), std::move(s), X, std::move(w));
}

CanonicalElement multiply(const CanonicalElement& g, const CanonicalElement& h) {
    require_same_matrix(g, h);
    const MatrixRef& T = g.mat_;
    if (g.zero_ || h.zero_) return CanonicalElement::zero(T);

    auto finish = [&](Word s, LetterSet X, Word w) {
        CanonicalElement out(T, std::move(s), X, std::move(w), false);
        if (auto why = out.violation())
            throw std::logic_error("product left canonical form: " + *why);
        return out;
    };

    const Word& w1 = g.w_;
    const Word& s2 = h.s_;
    if (w1 == s2) {
        LetterSet X = g.x_ & h.x_;
        if (X.empty()) return CanonicalElement::zero(T);
        return finish(g.s_, X, h.w_);
    }
    if (is_prefix(s2, w1)) {
        // w1 = s2.u with u nonempty; the composite shifts u onto h's right word.
        const Letter head = static_cast<Letter>(w1[s2.size()]);
        if (!h.x_.contains(head)) return CanonicalElement::zero(T);
        return finish(g.s_, g.x_, h.w_ + w1.substr(s2.size()));
    }
    if (is_prefix(w1, s2)) {
        // s2 = w1.u with u nonempty; the composite shifts u onto g's left word.
        const Letter head = static_cast<Letter>(s2[w1.size()]);
        if (!g.x_.contains(head)) return CanonicalElement::zero(T);
        return finish(g.s_ + s2.substr(w1.size()), h.x_, h.w_);
    }
    return CanonicalElement::zero(T);
}

bool leq(const CanonicalElement& e, const CanonicalElement& f) {
    require_same_matrix(e, f);
    if (!e.is_idempotent() || !f.is_idempotent())
        throw usage_error("the natural partial order is exposed for idempotents only");
    if (e.is_zero()) return true;
    if (f.is_zero()) return false;
    const Word& s = e.left();
    const Word& t = f.left();
    if (s == t) return e.middle().subset_of(f.middle());
    if (t.size() < s.size() && s.compare(0, t.size(), t) == 0)
        return f.middle().contains(static_cast<Letter>(s[t.size()]));
    return false;
}

bool l_related(const CanonicalElement& a, const CanonicalElement& b) {
    require_same_matrix(a, b);
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.right() == b.right() && a.middle() == b.middle();
}

bool r_related(const CanonicalElement& a, const CanonicalElement& b) {
    require_same_matrix(a, b);
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.left() == b.left() && a.middle() == b.middle();
}

bool h_related(const CanonicalElement& a, const CanonicalElement& b) {
    return l_related(a, b) && r_related(a, b);
}

bool d_related(const CanonicalElement& a, const CanonicalElement& b) {
    require_same_matrix(a, b);
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.middle() == b.middle();
}

std::vector<CanonicalElement> all_elements(MatrixRef T, int max_len) {
    if (!T) throw usage_error("null transition matrix");
    if (max_len < 0) throw input_error("max_len must be nonnegative");
    std::vector<Word> words{Word{}};
    if (max_len >= 1) {
        auto lang = enumerate_language(*T, max_len);
        words.insert(words.end(), lang.begin(), lang.end());
    }
    const auto& fam = T->family();
    auto fits = [&](const Word& v, LetterSet X) {
        return v.empty() || X.subset_of(T->follows(static_cast<Letter>(v.back())));
    };
    std::vector<CanonicalElement> out;
    for (const Word& s : words)
        for (const Word& w : words)
            for (LetterSet X : fam)
                if (fits(s, X) && fits(w, X))
                    out.push_back(CanonicalElement::make(T, s, X, w));
    return out;
}

std::vector<CanonicalElement> standard_oset(MatrixRef T) {
    if (!T) throw usage_error("null transition matrix");
    std::vector<CanonicalElement> out;
    for (std::size_t a = 0; a < T->size(); ++a) {
        Word s(1, static_cast<char>(a));
        out.push_back(CanonicalElement::make(T, s, T->follows(static_cast<Letter>(a)), s));
    }
    return out;
}

} // namespace markovhull
