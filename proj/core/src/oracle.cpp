#include "markovhull/oracle.hpp"

#include <algorithm>

namespace markovhull {

namespace {

void require_same_matrix(const TruncatedMap& a, const TruncatedMap& b) {
    if (a.matrix() == b.matrix()) return;
    if (*a.matrix() == *b.matrix()) return;
    throw usage_error("maps over different transition matrices cannot be combined");
}

} // namespace

TruncatedMap TruncatedMap::of_word(MatrixRef T, const Word& w, int depth) {
    if (!T) throw usage_error("null transition matrix");
    if (w.empty()) throw input_error("of_word needs a nonempty word");
    if (!is_legal(*T, w))
        throw input_error("word \"" + word_to_string(*T, w) + "\" is not legal");
    if (depth < 0) throw input_error("depth must be nonnegative");
    std::map<Word, Word> pairs;
    if (depth >= 1)
        for (const Word& u : enumerate_language(*T, depth)) {
            Word wu = w + u;
            if (is_legal(*T, wu)) pairs.emplace(u, std::move(wu));
        }
    return TruncatedMap(std::move(T), std::move(pairs), depth);
}

TruncatedMap TruncatedMap::realize(const CanonicalElement& el, int depth) {
    if (depth < 0) throw input_error("depth must be nonnegative");
    const MatrixRef& T = el.matrix();
    std::map<Word, Word> pairs;
    if (depth >= 1 && !el.is_zero())
        for (const Word& u : enumerate_language(*T, depth))
            if (auto out = el.apply(u)) pairs.emplace(u, std::move(*out));
    return TruncatedMap(T, std::move(pairs), depth);
}

int TruncatedMap::delta() const {
    if (pairs_.empty()) return 0;
    const auto& [in, out] = *pairs_.begin();
    return static_cast<int>(out.size()) - static_cast<int>(in.size());
}

std::vector<std::string> TruncatedMap::dump() const {
    std::vector<Word> ins;
    ins.reserve(pairs_.size());
    for (const auto& [in, out] : pairs_) ins.push_back(in);
    std::sort(ins.begin(), ins.end(), ShortlexLess{});
    std::vector<std::string> lines;
    lines.reserve(ins.size());
    for (const Word& in : ins)
        lines.push_back(word_to_string(*mat_, in) + " -> " +
                        word_to_string(*mat_, pairs_.at(in)));
    return lines;
}

TruncatedMap compose(const TruncatedMap& f, const TruncatedMap& g) {
    require_same_matrix(f, g);
    std::map<Word, Word> pairs;
    for (const auto& [x, gx] : g.pairs_) {
        auto it = f.pairs_.find(gx);
        if (it != f.pairs_.end()) pairs.emplace(x, it->second);
    }
    const int bound = std::min(g.complete_to_, f.complete_to_ - g.delta());
    return TruncatedMap(g.mat_, std::move(pairs), std::max(bound, 0));
}

TruncatedMap invert(const TruncatedMap& f) {
    std::map<Word, Word> pairs;
    for (const auto& [x, y] : f.pairs_) pairs.emplace(y, x);
    const int bound = f.pairs_.empty() ? 0 : f.complete_to_ + f.delta();
    return TruncatedMap(f.mat_, std::move(pairs), std::max(bound, 0));
}

bool agree_on_window(const TruncatedMap& f, const TruncatedMap& g) {
    require_same_matrix(f, g);
    const int window = std::min(f.complete_to(), g.complete_to());
    if (window < 1)
        throw depth_error("comparison window is empty; compose or invert consumed the depth");
    auto within = [&](const std::map<Word, Word>& m) {
        std::map<Word, Word> r;
        for (const auto& [x, y] : m)
            if (static_cast<int>(x.size()) <= window) r.emplace(x, y);
        return r;
    };
    return within(f.pairs()) == within(g.pairs());
}

bool equal_as_elements(const CanonicalElement& a, const CanonicalElement& b, int depth) {
    if (a.matrix() != b.matrix() && !(*a.matrix() == *b.matrix()))
        throw usage_error("elements over different transition matrices cannot be compared");
    if (a.is_zero() && b.is_zero()) return true;
    int need = 1;
    if (!a.is_zero()) need = std::max(need, static_cast<int>(a.right().size()) + 1);
    if (!b.is_zero()) need = std::max(need, static_cast<int>(b.right().size()) + 1);
    if (depth < need)
        throw depth_error("distinguishing these elements needs depth " + std::to_string(need) +
                          " but only " + std::to_string(depth) + " was allowed");
    return TruncatedMap::realize(a, depth).pairs() == TruncatedMap::realize(b, depth).pairs();
}

} // namespace markovhull
