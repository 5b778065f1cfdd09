#include "markovhull/semilattice.hpp"

#include <algorithm>
#include <sstream>

namespace markovhull {

namespace {

void require_idempotent(const CanonicalElement& e) {
    if (e.is_zero() || !e.is_idempotent())
        throw usage_error("this operation is defined for nonzero idempotents only");
}

} // namespace

std::vector<CanonicalElement> enumerate_idempotents(MatrixRef T, int depth) {
    if (!T) throw usage_error("null transition matrix");
    if (depth < 0) throw input_error("depth must be nonnegative");
    std::vector<Word> words{Word{}};
    if (depth >= 1) {
        auto lang = enumerate_language(*T, depth);
        words.insert(words.end(), lang.begin(), lang.end());
    }
    std::vector<CanonicalElement> out;
    for (const Word& s : words)
        for (LetterSet X : T->family())
            if (s.empty() || X.subset_of(T->follows(static_cast<Letter>(s.back()))))
                out.push_back(CanonicalElement::make(T, s, X, s));
    return out;
}

std::vector<CanonicalElement> strict_upset(const CanonicalElement& e) {
    require_idempotent(e);
    const MatrixRef& T = e.matrix();
    const Word& s = e.left();
    const LetterSet X = e.middle();
    std::vector<CanonicalElement> out;
    for (LetterSet Y : T->family()) {
        if (!(X.subset_of(Y) && X != Y)) continue;
        if (!s.empty() && !Y.subset_of(T->follows(static_cast<Letter>(s.back())))) continue;
        out.push_back(CanonicalElement::make(T, s, Y, s));
    }
    for (std::size_t cut = 0; cut < s.size(); ++cut) {
        const Word t = s.substr(0, cut);
        const Letter head = static_cast<Letter>(s[cut]);
        for (LetterSet Y : T->family()) {
            if (!Y.contains(head)) continue;
            if (!t.empty() && !Y.subset_of(T->follows(static_cast<Letter>(t.back())))) continue;
            out.push_back(CanonicalElement::make(T, t, Y, t));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalElement> covers(const CanonicalElement& e) {
    const auto up = strict_upset(e);
    std::vector<CanonicalElement> out;
    for (const auto& c : up) {
        bool minimal = true;
        for (const auto& other : up)
            if (!(other == c) && leq(other, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

Classification classify(const CanonicalElement& e, const std::vector<CanonicalElement>& O) {
    require_idempotent(e);
    for (const auto& o : O) require_idempotent(o);
    for (const auto& o : O)
        if (o == e) return Classification::InO;
    for (const auto& o : O)
        if (leq(o, e)) return Classification::AboveO;
    for (const auto& o : O)
        if (leq(e, o)) return Classification::BelowO;
    return Classification::Incomparable;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::InO: return "IN_O";
        case Classification::AboveO: return "ABOVE_O";
        case Classification::BelowO: return "BELOW_O";
        case Classification::Incomparable: return "INCOMPARABLE";
    }
    throw usage_error("unknown classification");
}

std::map<int, long> fingerprint(MatrixRef T, int max_k) {
    if (max_k < 1) throw input_error("max_k must be at least 1");
    std::map<int, long> hist;
    for (int k = 1; k <= max_k; ++k) hist[k] = 0;
    for (const auto& e : enumerate_idempotents(T, max_k + 1)) {
        const auto up = strict_upset(e);
        const int k = static_cast<int>(up.size());
        if (1 <= k && k <= max_k) ++hist[k];
    }
    return hist;
}

std::string export_dot(MatrixRef T, int depth) {
    if (depth < 0) throw input_error("depth must be nonnegative");
    const auto nodes = enumerate_idempotents(T, depth);
    std::map<CanonicalElement, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    const auto letters = standard_oset(T);
    auto is_letter_range = [&](const CanonicalElement& e) {
        return std::find(letters.begin(), letters.end(), e) != letters.end();
    };
    std::ostringstream out;
    out << "digraph semilattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << nodes[i].to_literal() << "\"";
        if (is_letter_range(nodes[i])) out << ", style=filled";
        out << "];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& c : covers(nodes[i])) {
            auto it = index.find(c);
            if (it != index.end()) out << "  n" << i << " -> n" << it->second << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace markovhull
