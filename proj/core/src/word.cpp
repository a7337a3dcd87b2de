#include "fpl/word.hpp"

#include <algorithm>

namespace fpl {

namespace {
constexpr const char* kCharset = "0123456789abcdefghijklmnopqrstuvwxyz";
}

Word::Word(int q, std::vector<int> symbols) : q_(q), symbols_(std::move(symbols)) {
    if (q_ < 2) throw WordParseError("alphabet size must be at least 2");
    if (symbols_.empty()) throw WordParseError("word must have length at least 1");
    for (int c : symbols_) {
        if (c < 0 || c >= q_) throw WordParseError("symbol out of range for alphabet");
    }
}

Word Word::parse(std::string_view text, int q) {
    if (text.empty()) throw WordParseError("empty word");
    std::vector<int> mapped;
    mapped.reserve(text.size());
    std::vector<char> seen;
    for (char c : text) {
        auto it = std::find(seen.begin(), seen.end(), c);
        if (it == seen.end()) {
            seen.push_back(c);
            mapped.push_back(static_cast<int>(seen.size()) - 1);
        } else {
            mapped.push_back(static_cast<int>(it - seen.begin()));
        }
    }
    int distinct = static_cast<int>(seen.size());
    if (q == 0) q = std::max(2, distinct);
    if (distinct > q)
        throw WordParseError("word uses " + std::to_string(distinct) +
                             " distinct symbols but q = " + std::to_string(q));
    Word w(q, std::move(mapped));
    w.text_.assign(text.begin(), text.end());
    return w;
}

Word Word::complement() const {
    std::vector<int> syms(symbols_.size());
    for (size_t i = 0; i < symbols_.size(); ++i) syms[i] = q_ - 1 - symbols_[i];
    return Word(q_, std::move(syms));
}

std::string Word::str() const {
    if (!text_.empty()) return text_;
    std::string out;
    out.reserve(symbols_.size());
    for (int c : symbols_) {
        out.push_back(c < 36 ? kCharset[c] : '?');
    }
    return out;
}

std::string Autocorrelation::bit_string() const {
    std::string out;
    out.reserve(static_cast<size_t>(k));
    for (int j = k; j >= 1; --j) out.push_back(bits[static_cast<size_t>(j)] ? '1' : '0');
    return out;
}

Autocorrelation autocorrelation(const Word& w) {
    const int k = w.length();
    // Border chain via the prefix function; bits[j] = 1 iff the length-j
    // prefix equals the length-j suffix.
    std::vector<int> pi(static_cast<size_t>(k), 0);
    for (int i = 1; i < k; ++i) {
        int j = pi[static_cast<size_t>(i) - 1];
        while (j > 0 && w.at(i) != w.at(j)) j = pi[static_cast<size_t>(j) - 1];
        if (w.at(i) == w.at(j)) ++j;
        pi[static_cast<size_t>(i)] = j;
    }
    Autocorrelation c;
    c.k = k;
    c.bits.assign(static_cast<size_t>(k) + 1, 0);
    c.bits[0] = 1;
    c.bits[static_cast<size_t>(k)] = 1;
    for (int b = pi[static_cast<size_t>(k) - 1]; b > 0; b = pi[static_cast<size_t>(b) - 1])
        c.bits[static_cast<size_t>(b)] = 1;
    c.longest_overlap = 0;
    for (int j = k - 1; j >= 1; --j) {
        if (c.bits[static_cast<size_t>(j)]) {
            c.longest_overlap = j;
            break;
        }
    }
    c.value = 0;
    for (int j = k; j >= 1; --j) {
        c.value <<= 1;
        c.value |= static_cast<int>(c.bits[static_cast<size_t>(j)]);
    }
    return c;
}

int minimal_period(const Word& w) {
    auto c = autocorrelation(w);
    return c.k - c.longest_overlap;
}

StructureProfile structure_profile(const Word& w) {
    StructureProfile p;
    p.cor = autocorrelation(w);
    const int k = p.cor.k;
    const int s = p.cor.longest_overlap;
    p.period = k - s;
    const auto& bits = p.cor.bits;

    // bracket[i]: the largest overlap j whose period k-j steps down to i,
    // i.e. k - i is a multiple of k - j. j = i always qualifies.
    for (int i = 1; i < k; ++i) {
        if (!bits[static_cast<size_t>(i)]) continue;
        for (int j = k - 1; j >= i; --j) {
            if (bits[static_cast<size_t>(j)] && (k - i) % (k - j) == 0) {
                p.bracket[i] = j;
                break;
            }
        }
    }
    for (const auto& [i, br] : p.bracket) {
        if (br == i) p.primitives.push_back(i);
        if (s > 0 && br == s) p.top_family.push_back(i);
    }
    p.min_primitive = p.primitives.empty() ? 0 : p.primitives.front();

    for (int i : p.primitives) {
        int best = 0;
        for (int j : p.primitives) {
            if (j <= i) continue;
            int t = 0;
            while (i + t < k && j + t < k && w.at(i + t) == w.at(j + t)) ++t;
            best = std::max(best, t);
        }
        p.tail_match[i] = best;
    }
    return p;
}

PairProfile pair_profile(const Word& w, const Word& other) {
    if (w.q() != other.q()) throw MismatchedAlphabet("pair_profile: alphabet sizes differ");
    auto ca = autocorrelation(w);
    auto cb = autocorrelation(other);
    PairProfile r;
    if (ca.k == cb.k && ca.value == cb.value) {
        r.order = CorOrder::Equal;
        return r;
    }
    // Values of different-length words live in disjoint ranges.
    bool first = (ca.k != cb.k) ? ca.k > cb.k : ca.value > cb.value;
    r.order = first ? CorOrder::FirstLarger : CorOrder::SecondLarger;
    const Word& dom = first ? w : other;
    const Autocorrelation& cd = first ? ca : cb;
    const Autocorrelation& co = first ? cb : ca;
    if (ca.k == cb.k) {
        int best = 0;
        for (int j : structure_profile(dom).primitives) {
            if (cd.bits[static_cast<size_t>(j)] && !co.bits[static_cast<size_t>(j)])
                best = std::max(best, j);
        }
        if (best > 0) r.top_mismatch = best;
    }
    return r;
}

}  // namespace fpl
