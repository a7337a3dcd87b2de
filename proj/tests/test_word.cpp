#include <doctest.h>

#include <functional>
#include <random>

#include "fpl/word.hpp"

using namespace fpl;

namespace {

// independent overlap oracle: literal prefix/suffix comparison
std::vector<std::uint8_t> naive_bits(const Word& w) {
    const int k = w.length();
    std::vector<std::uint8_t> b(static_cast<size_t>(k) + 1, 0);
    b[0] = 1;
    b[static_cast<size_t>(k)] = 1;
    for (int j = 1; j < k; ++j) {
        bool eq = true;
        for (int i = 0; i < j; ++i)
            if (w.at(i) != w.at(k - j + i)) eq = false;
        if (eq) b[static_cast<size_t>(j)] = 1;
    }
    return b;
}

void exhaust(int q, int k, const std::function<void(const Word&)>& fn) {
    std::vector<int> d(static_cast<size_t>(k), 0);
    while (true) {
        fn(Word(q, d));
        int pos = k - 1;
        while (pos >= 0 && d[static_cast<size_t>(pos)] == q - 1) d[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) return;
        ++d[static_cast<size_t>(pos)];
    }
}

}  // namespace

TEST_CASE("parsing maps characters in first-appearance order") {
    auto w = Word::parse("HTHT");
    CHECK(w.q() == 2);
    CHECK(w.symbols() == std::vector<int>{0, 1, 0, 1});
    CHECK(w.str() == "HTHT");                       // display keeps the input
    CHECK(Word(2, {0, 1, 0, 1}).str() == "0101");   // constructed words render symbols
    CHECK(w == Word(2, {0, 1, 0, 1}));              // identity ignores the text

    auto v = Word::parse("012");
    CHECK(v.q() == 3);

    CHECK(Word::parse("10").symbols() == std::vector<int>{0, 1});

    CHECK_THROWS_AS(Word::parse(""), WordParseError);
    CHECK_THROWS_AS(Word::parse("012", 2), WordParseError);
    CHECK_THROWS_AS(Word(1, {0}), WordParseError);
    CHECK_THROWS_AS(Word(2, {0, 2}), WordParseError);
    CHECK_THROWS_AS(Word(2, {}), WordParseError);
}

TEST_CASE("autocorrelation bit strings") {
    CHECK(autocorrelation(Word::parse("10100101")).bit_string() == "10000101");
    CHECK(autocorrelation(Word::parse("10100101")).value == 133);
    CHECK(autocorrelation(Word::parse("10100101")).longest_overlap == 3);

    CHECK(autocorrelation(Word::parse("1111")).bit_string() == "1111");
    CHECK(autocorrelation(Word::parse("012", 3)).bit_string() == "100");
    CHECK(autocorrelation(Word::parse("HTHTHHHTHTH")).bit_string() == "10000010101");
    CHECK(autocorrelation(Word::parse("HTHTHTHTHTH")).bit_string() == "10101010101");
    CHECK(autocorrelation(Word::parse("1")).bit_string() == "1");
}

TEST_CASE("prefix-function bits agree with the literal overlap scan") {
    for (int k = 1; k <= 10; ++k)
        exhaust(2, k, [&](const Word& w) { CHECK(autocorrelation(w).bits == naive_bits(w)); });
    for (int k = 1; k <= 7; ++k)
        exhaust(3, k, [&](const Word& w) { CHECK(autocorrelation(w).bits == naive_bits(w)); });

    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 40);
        std::vector<int> syms(static_cast<size_t>(k));
        for (auto& c : syms) c = static_cast<int>(rng() % static_cast<unsigned>(q));
        Word w(q, syms);
        auto c = autocorrelation(w);
        CHECK(c.bits == naive_bits(w));
        CHECK(c.value >= pow_int(2, k - 1));
        CHECK(c.value <= pow_int(2, k) - 1);
    }
}

TEST_CASE("structure profile of the worked overlap examples") {
    auto p = structure_profile(Word::parse("HTHTHHHTHTH"));
    CHECK(p.primitives == std::vector<int>{1, 3, 5});
    CHECK(p.tail_match.at(5) == 0);
    CHECK(p.tail_match.at(3) == 0);
    CHECK(p.tail_match.at(1) == 2);
    CHECK(p.cor.longest_overlap == 5);
    CHECK(p.min_primitive == 1);

    auto p2 = structure_profile(Word::parse("HTHTHTHTHTH"));
    CHECK(p2.primitives == std::vector<int>{9});

    auto p3 = structure_profile(Word::parse("1000"));
    CHECK(p3.primitives.empty());
    CHECK(p3.cor.longest_overlap == 0);
    CHECK(p3.period == 4);
    CHECK(p3.min_primitive == 0);

    auto p4 = structure_profile(Word::parse("10100101"));
    CHECK(p4.primitives == std::vector<int>{1, 3});
    CHECK(p4.top_family == std::vector<int>{3});
    CHECK(p4.period == 5);
}

TEST_CASE("minimal periods") {
    CHECK(minimal_period(Word::parse("101")) == 2);
    CHECK(minimal_period(Word::parse("001")) == 3);
    CHECK(minimal_period(Word::parse("1111")) == 1);
    CHECK(minimal_period(Word::parse("1")) == 1);
    CHECK(minimal_period(Word::parse("010010")) == 3);
}

TEST_CASE("pair profiles") {
    auto p = pair_profile(Word::parse("101"), Word::parse("001"));
    CHECK(p.order == CorOrder::FirstLarger);  // 5 > 4

    auto w = Word::parse("1010");
    auto self = pair_profile(w, w);
    CHECK(self.order == CorOrder::Equal);
    CHECK(!self.top_mismatch.has_value());

    auto p2 = pair_profile(Word::parse("1111"), Word::parse("1010"));
    CHECK(p2.order == CorOrder::FirstLarger);
    CHECK(p2.top_mismatch == 3);

    auto p3 = pair_profile(Word::parse("10"), Word::parse("11"));
    CHECK(p3.order == CorOrder::SecondLarger);
    CHECK(p3.top_mismatch == 1);

    // longer word always dominates: disjoint value ranges
    CHECK(pair_profile(Word::parse("100"), Word::parse("11")).order == CorOrder::FirstLarger);

    CHECK_THROWS_AS(pair_profile(Word::parse("01"), Word::parse("012", 3)), MismatchedAlphabet);
}

TEST_CASE("top mismatch is bounded by the dominant overlap") {
    exhaust(2, 5, [&](const Word& a) {
        exhaust(2, 5, [&](const Word& b) {
            auto p = pair_profile(a, b);
            if (p.order != CorOrder::FirstLarger || !p.top_mismatch) return;
            int s = autocorrelation(a).longest_overlap;
            CHECK(*p.top_mismatch >= 1);
            CHECK(*p.top_mismatch <= s);
        });
    });
}

TEST_CASE("complement preserves the autocorrelation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 24);
        std::vector<int> syms(static_cast<size_t>(k));
        for (auto& c : syms) c = static_cast<int>(rng() % 2);
        Word w(2, syms);
        CHECK(autocorrelation(w) == autocorrelation(w.complement()));
    }
}
