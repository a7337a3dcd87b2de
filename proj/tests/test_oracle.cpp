#include <doctest.h>

#include "fpl/oracle.hpp"
#include "fpl/series.hpp"

using namespace fpl;

TEST_CASE("brute counts on hand-checkable cases") {
    auto b = brute_counts(Word::parse("11"), 4);
    CHECK(b.avoiders == 8);  // the 8 strings with no adjacent ones among 16
    CHECK(b.hits == 2);
    CHECK(b.returns == 0);

    auto b2 = brute_counts(Word::parse("10"), 2);
    CHECK(b2.avoiders == 3);
    CHECK(b2.hits == 1);

    auto b3 = brute_counts(Word::parse("111"), 2);  // n < k
    CHECK(b3.avoiders == 4);
    CHECK(b3.hits == 0);
    CHECK(b3.returns == 0);

    auto b4 = brute_counts(Word::parse("11"), 2);  // n == k
    CHECK(b4.hits == 1);
    CHECK(b4.returns == -1);  // seed convention

    CHECK_THROWS_AS(brute_counts(Word::parse("11"), 30), TooLarge);
}

TEST_CASE("monte carlo preconditions and determinism") {
    CHECK_THROWS_AS(monte_carlo_hits(Word::parse("11"), 0, 10, 1), std::invalid_argument);

    auto a = monte_carlo_hits(Word::parse("11"), 20000, 12, 99);
    auto b = monte_carlo_hits(Word::parse("11"), 20000, 12, 99);
    CHECK(a.histogram == b.histogram);
    CHECK(a.censored == b.censored);
    CHECK(a.generator == "mt19937_64");

    auto c1 = monte_carlo_hits(Word::parse("11"), 20000, 12, 99, 1);
    auto c4 = monte_carlo_hits(Word::parse("11"), 20000, 12, 99, 4);
    CHECK(a.histogram == c1.histogram);
    CHECK(a.histogram == c4.histogram);

    auto other = monte_carlo_hits(Word::parse("11"), 20000, 12, 100);
    CHECK(a.histogram != other.histogram);
}

namespace {

// |count - trials*p| <= 4*sqrt(trials*p*(1-p)), evaluated in exact rationals
bool within_4_sigma(long count, long trials, const ExactProbability& p) {
    Rational prob(p.num, pow_int(p.q, p.exp));
    Rational mu = Rational(trials) * prob;
    Rational var = Rational(trials) * prob * (Rational(1) - prob);
    Rational dev = Rational(count) - mu;
    return dev * dev <= 16 * var;
}

}  // namespace

TEST_CASE("monte carlo matches the exact hit curve within 4 sigma") {
    const long trials = 200000;
    const int horizon = 16;
    auto w = Word::parse("11");
    auto hits = monte_carlo_hits(w, trials, horizon, 42);
    auto curve = hit_curve(compute_series(w, horizon + w.length() + 1));
    long sum = hits.censored;
    for (int t = 0; t < horizon; ++t) {
        sum += hits.histogram[static_cast<size_t>(t)];
        CHECK(within_4_sigma(hits.histogram[static_cast<size_t>(t)], trials, curve.at(t)));
    }
    CHECK(sum == trials);  // histogram total + censored = trials
}

TEST_CASE("ternary monte carlo matches the exact curve") {
    auto w = Word::parse("012", 3);
    const long trials = 60000;
    auto hits = monte_carlo_hits(w, trials, 8, 3);
    auto curve = hit_curve(compute_series(w, 16));
    for (int t = 0; t < 8; ++t)
        CHECK(within_4_sigma(hits.histogram[static_cast<size_t>(t)], trials, curve.at(t)));
}

TEST_CASE("censoring matches the exact survival mass") {
    // horizon 1: everything except an immediate hit is censored
    auto w = Word::parse("10");
    const long trials = 100000;
    auto hits = monte_carlo_hits(w, trials, 1, 5);
    CHECK(within_4_sigma(hits.histogram[0], trials, ExactProbability{1, 2, 2}));
    CHECK(within_4_sigma(hits.censored, trials, ExactProbability{3, 2, 2}));
}

TEST_CASE("map itineraries at exactly representable points") {
    auto dbl = MapKernel::doubling(2);
    CHECK(map_itinerary(dbl, Rational(1, 3), 8) ==
          std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1});

    auto tent = MapKernel::tent();
    CHECK(map_itinerary(tent, Rational(2, 5), 8) ==
          std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1});

    auto baker = MapKernel::baker();
    CHECK(map_itinerary(baker, Rational(1, 3), Rational(1, 2), 6) ==
          std::vector<int>{0, 1, 0, 1, 0, 1});

    auto vnu = MapKernel::von_neumann_ulam();
    auto it = map_itinerary(vnu, Rational(1, 2), 6);
    CHECK(it == std::vector<int>{1, 1, 0, 0, 0, 0});  // 1/2 -> 1 -> 0 -> 0 ...

    auto d3 = MapKernel::doubling(3);
    CHECK(map_itinerary(d3, Rational(1, 3), 5) == std::vector<int>{1, 0, 0, 0, 0});

    CHECK_THROWS_AS(map_itinerary(dbl, Rational(3, 2), 4), std::invalid_argument);
    CHECK_THROWS_AS(map_itinerary(vnu, Rational(1, 3), 64), TooLarge);
}

TEST_CASE("random digit streams realize the same first-hit law") {
    // build a first-hit histogram from itineraries of the doubling map with
    // stochastic initialization and compare to the exact curve
    auto w = Word::parse("11");
    const int k = w.length();
    const int horizon = 10;
    const long trials = 40000;
    std::vector<long> hist(static_cast<size_t>(horizon), 0);
    auto kernel = MapKernel::doubling(2);
    for (long i = 0; i < trials; ++i) {
        auto sym = random_itinerary(kernel, 1234 + static_cast<std::uint64_t>(i),
                                    horizon + k - 1);
        for (int t = 0; t + k <= static_cast<int>(sym.size()); ++t) {
            bool match = true;
            for (int j = 0; j < k; ++j)
                if (sym[static_cast<size_t>(t + j)] != w.at(j)) match = false;
            if (match) {
                ++hist[static_cast<size_t>(t)];
                break;
            }
        }
    }
    auto curve = hit_curve(compute_series(w, horizon + k + 1));
    for (int t = 0; t < horizon; ++t)
        CHECK(within_4_sigma(hist[static_cast<size_t>(t)], trials, curve.at(t)));
}
