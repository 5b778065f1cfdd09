#include "markovhull/shift.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace markovhull {

namespace {

bool valid_letter_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

TransitionMatrix::TransitionMatrix(std::vector<std::string> alphabet,
                                   const std::vector<std::vector<int>>& entries)
    : names_(std::move(alphabet)) {
    const std::size_t n = names_.size();
    if (n == 0) throw input_error("alphabet must be nonempty");
    if (n > max_alphabet_size)
        throw input_error("alphabet has " + std::to_string(n) + " letters; at most " +
                          std::to_string(max_alphabet_size) + " are supported");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_letter_name(name))
            throw input_error("invalid letter name \"" + name +
                              "\" (letters must be nonempty alphanumeric/underscore tokens)");
        if (!seen.insert(name).second)
            throw input_error("duplicate letter name \"" + name + "\"");
    }
    if (entries.size() != n)
        throw input_error("matrix has " + std::to_string(entries.size()) +
                          " rows but the alphabet has " + std::to_string(n) + " letters");
    rows_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i].size() != n)
            throw input_error("matrix row \"" + names_[i] + "\" has " +
                              std::to_string(entries[i].size()) + " entries; expected " +
                              std::to_string(n));
        LetterSet row;
        for (std::size_t j = 0; j < n; ++j) {
            const int v = entries[i][j];
            if (v != 0 && v != 1)
                throw input_error("matrix entry (" + names_[i] + "," + names_[j] +
                                  ") is " + std::to_string(v) + "; entries must be 0 or 1");
            if (v == 1) row.insert(static_cast<Letter>(j));
        }
        if (row.empty())
            throw input_error("row \"" + names_[i] +
                              "\" is all zeros; a transition matrix must contain no zero rows");
        rows_.push_back(row);
    }
}

Letter TransitionMatrix::letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    throw input_error("unknown letter \"" + name + "\"");
}

MatrixRef make_matrix(std::vector<std::string> alphabet,
                      const std::vector<std::vector<int>>& entries) {
    return std::make_shared<const TransitionMatrix>(std::move(alphabet), entries);
}

bool is_legal(const TransitionMatrix& T, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (static_cast<std::size_t>(static_cast<unsigned char>(w[i])) >= T.size())
            throw input_error("word contains an out-of-range letter index");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!T.entry(static_cast<Letter>(w[i]), static_cast<Letter>(w[i + 1])))
            return false;
    return true;
}

std::vector<Word> enumerate_language(const TransitionMatrix& T, int max_len) {
    if (max_len < 1) throw input_error("max_len must be at least 1");
    std::vector<Word> out;
    std::vector<Word> level;
    for (std::size_t a = 0; a < T.size(); ++a)
        level.push_back(Word(1, static_cast<char>(a)));
    for (int len = 1; len <= max_len && !level.empty(); ++len) {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<Word> next;
        for (const Word& w : level)
            for (Letter b : T.follows(static_cast<Letter>(w.back())).letters())
                next.push_back(w + static_cast<char>(b));
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

const std::vector<LetterSet>& TransitionMatrix::family() const {
    if (family_ready_) return family_cache_;
    std::set<LetterSet> family;
    for (std::size_t a = 0; a < size(); ++a)
        family.insert(follows(static_cast<Letter>(a)));
    // Worklist closure under pairwise intersection, discarding the empty set.
    std::vector<LetterSet> work(family.begin(), family.end());
    while (!work.empty()) {
        LetterSet x = work.back();
        work.pop_back();
        std::vector<LetterSet> fresh;
        for (LetterSet y : family) {
            LetterSet z = x & y;
            if (!z.empty() && !family.count(z)) fresh.push_back(z);
        }
        for (LetterSet z : fresh) {
            family.insert(z);
            work.push_back(z);
            if (family.size() > 65536)
                throw resource_error("constructible family exceeds 65536 sets");
        }
    }
    family_cache_.assign(family.begin(), family.end());
    family_ready_ = true;
    return family_cache_;
}

bool TransitionMatrix::family_contains(LetterSet X) const {
    const auto& fam = family();
    return std::binary_search(fam.begin(), fam.end(), X);
}

std::vector<LetterSet> constructible_family(const TransitionMatrix& T) {
    return T.family();
}

bool is_constructible(const TransitionMatrix& T, LetterSet X) {
    return T.family_contains(X);
}

double spectral_radius(const TransitionMatrix& T, double tol) {
    if (!(tol > 0)) throw input_error("tolerance must be positive");
    const std::size_t n = T.size();
    std::vector<double> v(n, 1.0), w(n);
    // Iterate B = T + I. For any positive v, min_i (Bv)_i/v_i and
    // max_i (Bv)_i/v_i enclose rho(B); the enclosure tightens for
    // primitive B, and B = T + I is aperiodic on each irreducible class.
    double best_lo = 0.0, best_hi = std::numeric_limits<double>::infinity();
    const int cap = 1000000;
    for (int iter = 0; iter < cap; ++iter) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        double wmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (Letter b : T.follows(static_cast<Letter>(i)).letters()) s += v[b];
            w[i] = s;
            const double ratio = s / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            wmax = std::max(wmax, s);
        }
        best_lo = std::max(best_lo, lo);
        best_hi = std::min(best_hi, hi);
        if (best_hi - best_lo <= tol) return (best_hi + best_lo) / 2.0 - 1.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wmax;
    }
    std::ostringstream msg;
    msg << "spectral radius iteration did not reach tolerance " << tol << " within " << cap
        << " iterations; last enclosure for rho(T)+1 was [" << best_lo << ", " << best_hi << "]";
    throw numeric_error(msg.str());
}

std::string word_to_string(const TransitionMatrix& T, const Word& w) {
    std::string out;
    for (char c : w) out += T.letter_name(static_cast<Letter>(c));
    return out;
}

namespace {

// Tokenizes text against the alphabet, longest match first, with
// backtracking so multi-character letter names cannot wedge the parse.
bool tokenize(const TransitionMatrix& T, const std::string& text, std::size_t pos, Word& out) {
    if (pos == text.size()) return true;
    std::vector<std::pair<std::size_t, Letter>> candidates;
    for (std::size_t a = 0; a < T.size(); ++a) {
        const std::string& name = T.letter_name(static_cast<Letter>(a));
        if (text.compare(pos, name.size(), name) == 0)
            candidates.emplace_back(name.size(), static_cast<Letter>(a));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [len, letter] : candidates) {
        out.push_back(static_cast<char>(letter));
        if (tokenize(T, text, pos + len, out)) return true;
        out.pop_back();
    }
    return false;
}

} // namespace

Word parse_word(const TransitionMatrix& T, const std::string& text) {
    Word out;
    if (!tokenize(T, text, 0, out))
        throw input_error("cannot parse \"" + text + "\" as a word over the alphabet");
    return out;
}

} // namespace markovhull
