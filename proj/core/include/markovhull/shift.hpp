#ifndef MARKOVHULL_SHIFT_HPP
#define MARKOVHULL_SHIFT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "markovhull/errors.hpp"

namespace markovhull {

// A letter is an index into the alphabet of a TransitionMatrix.
using Letter = std::uint8_t;

// A word over the alphabet, stored as a string of letter *indices*
// (values 0..31), not printable characters. The empty word stands for
// the adjoined identity and is never itself a member of the language.
using Word = std::string;

inline constexpr std::size_t max_alphabet_size = 32;

// Shortlex: by length first, then lexicographically by letter index.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Subset of the alphabet with bitset semantics. The empty set is
// representable; it encodes the zero element in intermediate products.
class LetterSet {
public:
    LetterSet() = default;
    static LetterSet from_bits(std::uint32_t bits) { return LetterSet(bits); }
    static LetterSet single(Letter a) { return LetterSet(std::uint32_t{1} << a); }
    static LetterSet full(std::size_t n) {
        return LetterSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }

    std::uint32_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcount(bits_); }
    bool contains(Letter a) const { return (bits_ >> a) & 1u; }
    bool subset_of(LetterSet other) const { return (bits_ & ~other.bits_) == 0; }

    LetterSet& insert(Letter a) { bits_ |= std::uint32_t{1} << a; return *this; }
    friend LetterSet operator&(LetterSet a, LetterSet b) { return LetterSet(a.bits_ & b.bits_); }
    friend LetterSet operator|(LetterSet a, LetterSet b) { return LetterSet(a.bits_ | b.bits_); }

    friend bool operator==(LetterSet a, LetterSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(LetterSet a, LetterSet b) { return a.bits_ != b.bits_; }
    // Orders by bitmask value; used for canonical set orderings.
    friend bool operator<(LetterSet a, LetterSet b) { return a.bits_ < b.bits_; }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (std::uint32_t m = bits_; m != 0; m &= m - 1)
            out.push_back(static_cast<Letter>(__builtin_ctz(m)));
        return out;
    }

private:
    explicit LetterSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

// A Markov transition matrix: an ordered alphabet of named letters and a
// square 0/1 matrix. Construction rejects zero rows, so every letter has
// at least one legal successor and every legal word extends indefinitely.
class TransitionMatrix {
public:
    TransitionMatrix(std::vector<std::string> alphabet,
                     const std::vector<std::vector<int>>& entries);

    std::size_t size() const { return names_.size(); }
    const std::string& letter_name(Letter a) const { return names_.at(a); }
    const std::vector<std::string>& alphabet() const { return names_; }

    // Index of a named letter; input_error if unknown.
    Letter letter_index(const std::string& name) const;

    bool entry(Letter a, Letter b) const { return rows_.at(a).contains(b); }

    // The follow set {b : T(a,b) = 1}; nonempty by construction.
    LetterSet follows(Letter a) const { return rows_.at(a); }

    LetterSet full_set() const { return LetterSet::full(size()); }

    // Entry-wise equality including alphabet names.
    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.names_ == b.names_ && a.row_bits_equal(b);
    }
    friend bool operator!=(const TransitionMatrix& a, const TransitionMatrix& b) {
        return !(a == b);
    }

    // Entry-wise equality ignoring letter names (same size, same 0/1 pattern).
    bool same_entries(const TransitionMatrix& other) const {
        return names_.size() == other.names_.size() && row_bits_equal(other);
    }

    // Closure of the follow-set rows under intersection, empty set
    // discarded, sorted by bitmask. Computed on first use and cached;
    // not safe to race from multiple threads.
    const std::vector<LetterSet>& family() const;

    bool family_contains(LetterSet X) const;

private:
    bool row_bits_equal(const TransitionMatrix& other) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] != other.rows_[i]) return false;
        return true;
    }

    std::vector<std::string> names_;
    std::vector<LetterSet> rows_;
    mutable std::vector<LetterSet> family_cache_;
    mutable bool family_ready_ = false;
};

using MatrixRef = std::shared_ptr<const TransitionMatrix>;

MatrixRef make_matrix(std::vector<std::string> alphabet,
                      const std::vector<std::vector<int>>& entries);

// True iff every adjacent pair of w passes T. The empty word is legal
// (it is the adjoined unit, not a language member).
bool is_legal(const TransitionMatrix& T, const Word& w);

// All legal nonempty words of length <= max_len, in shortlex order.
std::vector<Word> enumerate_language(const TransitionMatrix& T, int max_len);

// Closure of the follow-set rows under intersection, empty set discarded,
// sorted by bitmask. These sets index the middle idempotents e_X.
std::vector<LetterSet> constructible_family(const TransitionMatrix& T);

bool is_constructible(const TransitionMatrix& T, LetterSet X);

// Dominant eigenvalue rho(T), computed by power iteration on T + I with a
// rigorous min/max-ratio enclosure; throws numeric_error if the enclosure
// fails to reach tol within the iteration cap.
double spectral_radius(const TransitionMatrix& T, double tol = 1e-9);

// Rendering and parsing of words against a matrix's letter names.
std::string word_to_string(const TransitionMatrix& T, const Word& w);
Word parse_word(const TransitionMatrix& T, const std::string& text);

} // namespace markovhull

#endif
