#pragma once

// Words over a q-symbol alphabet and their self-overlap structure.
//
// A word codes one cylinder of the k-th refinement of the basic Markov
// partition of a fair-dice-like system. Storage is plain left-to-right
// reading order; the classical right-to-left indexing w_k..w_1 used by the
// overlap formulas is funneled through Word::from_right() so the index
// arithmetic lives in exactly one place.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpl/bigint.hpp"
#include "fpl/errors.hpp"

namespace fpl {

class Word {
public:
    Word() : q_(2), symbols_{0} {}  // placeholder "0"; containers need it
    Word(int q, std::vector<int> symbols);

    // Maps distinct characters in first-appearance order, so both digit
    // strings ("0010") and letter strings ("HTTH") parse. q == 0 infers the
    // alphabet size as max(2, number of distinct characters). The original
    // text is kept for display only; identity is (q, symbols).
    static Word parse(std::string_view text, int q = 0);

    int q() const { return q_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    int at(int pos) const { return symbols_[static_cast<size_t>(pos)]; }

    // Symbol w_i in right-to-left indexing, 1 <= i <= k.
    int from_right(int i) const { return symbols_[symbols_.size() - static_cast<size_t>(i)]; }

    const std::vector<int>& symbols() const { return symbols_; }

    Word complement() const;  // symbol c -> q-1-c

    // The parsed text when there is one, otherwise symbols as "0123456789ab..."
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.q_ == b.q_ && a.symbols_ == b.symbols_;
    }
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

private:
    int q_;
    std::vector<int> symbols_;
    std::string text_;
};

// Which shifts of a word overlap itself. bits[j] = 1 iff the length-j prefix
// equals the length-j suffix, 0 <= j <= k, with bits[0] = bits[k] = 1 by
// convention. Read as the digit string b_k..b_1 this is a base-2 number in
// [2^(k-1), 2^k - 1]; words are ranked by that value.
struct Autocorrelation {
    int k = 0;
    std::vector<std::uint8_t> bits;
    int longest_overlap = 0;  // largest proper j with bits[j] = 1, else 0
    Int value;

    std::string bit_string() const;  // "b_k...b_1"

    bool operator==(const Autocorrelation& o) const { return k == o.k && bits == o.bits; }
    bool operator<(const Autocorrelation& o) const {
        return k != o.k ? k < o.k : value < o.value;
    }
};

Autocorrelation autocorrelation(const Word& w);

// Least p such that w extends to a p-periodic sequence; equals
// k - longest_overlap (k when there is no proper self-overlap).
int minimal_period(const Word& w);

// The finer structure of an autocorrelation. Every proper overlap length i is
// reachable from a unique maximal one by stepping the corresponding period:
// bracket[i] is that maximal length, `primitives` collects the distinct
// bracket values, `top_family` the overlaps bracketed to the longest one.
struct StructureProfile {
    Autocorrelation cor;
    std::vector<int> primitives;   // ascending; empty when no proper overlap
    std::map<int, int> bracket;    // overlap length -> its primitive
    std::vector<int> top_family;   // { i : bracket[i] == longest_overlap }
    int min_primitive = 0;         // smallest primitive, 0 when none
    std::map<int, int> tail_match; // primitive i -> longest shared tail prefix
                                   // with any larger primitive
    int period = 0;                // k - longest_overlap
};

StructureProfile structure_profile(const Word& w);

enum class CorOrder { Equal, FirstLarger, SecondLarger };

// Comparison data for a word pair: which autocorrelation is larger, and for
// equal lengths the largest overlap present in the dominant word but absent
// in the other (always one of the dominant word's primitives).
struct PairProfile {
    CorOrder order = CorOrder::Equal;
    std::optional<int> top_mismatch;
};

PairProfile pair_profile(const Word& w, const Word& other);  // throws MismatchedAlphabet

}  // namespace fpl
