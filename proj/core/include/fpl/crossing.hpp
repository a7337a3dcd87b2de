#pragma once

// Certified single-crossing analysis for word pairs.
//
// For an oriented pair cor(w) > cor(w'), delta(n) = hits(n) - q^(k-k') *
// hits'(n-k+k') changes sign exactly once. The crossing index N is the first
// n with delta(n) > 0; once delta(n) >= (q-1)*delta(n-1) has been verified on
// k consecutive indices starting at N, the growth inequality propagates to
// every larger n, so positivity past the horizon is proved, not sampled.

#include <vector>

#include "fpl/series.hpp"
#include "fpl/word.hpp"

namespace fpl {

struct DeltaSeries {
    Word w, wp;  // oriented: cor(w) > cor(wp)
    int horizon = 0;
    std::vector<Int> delta;  // indexed 0..horizon
};

DeltaSeries delta_series(const CountSeries& dominant, const CountSeries& other);

struct CrossingReport {
    Word w, wp;       // oriented: cor(w) > cor(wp)
    bool swapped = false;  // inputs arrived in the other order
    int k = 0, kp = 0;
    int coincidence_end = 0;  // last n with delta == 0 on [0, n]
    int crossing = 0;         // N: smallest n with delta(n) > 0
    bool certified = false;   // growth certificate verified on [N, N+k-1]
    int horizon_used = 0;
};

// Throws MismatchedAlphabet, EqualAutocorrelations (route such pairs to
// equal_class_check), HorizonExhausted when N or its certificate window does
// not fit. horizon <= 0 selects the default policy for the longer word.
CrossingReport compare_pair(const Word& w, const Word& wp, int horizon = 0);

// compare_pair with horizon doubling from the policy default up to `cap`.
CrossingReport compare_pair_adaptive(const Word& w, const Word& wp,
                                     int initial_horizon = 0, int cap = 1 << 16);

// True iff the two hit-count series agree on [0, horizon]. Requires equal
// length and equal autocorrelation; a false return falsifies the class
// identity and must be surfaced loudly by callers.
bool equal_class_check(const Word& w, const Word& wp, int horizon);

// Lower bounds on the crossing index: N >= 4k for equal lengths with equal
// longest overlap, N >= 3k-s when the dominant overlap is strictly larger,
// N > k+1 for unequal lengths.
bool bound_check(const CrossingReport& report);

// ---------------------------------------------------------------------------
// Whole-refinement timeline partition.

struct CorrelationClass {
    Autocorrelation cor;
    Word representative;  // lexicographically smallest member
    long member_count = 0;
};

// All q^k words grouped by autocorrelation, ascending by value.
std::vector<CorrelationClass> correlation_classes(int q, int k);

struct PairCrossing {
    int a = 0, b = 0;  // class indices, a < b (so cor value of b dominates)
    CrossingReport report;
};

struct IntervalPartition {
    int q = 0, k = 0;
    std::vector<CorrelationClass> classes;
    std::vector<PairCrossing> pairs;  // (a, b) lexicographic
    int split_moment = 0;    // smallest n with some inter-class delta != 0
    int first_crossing = 0;  // min N over pairs
    int last_crossing = 0;   // max N over pairs
    int horizon_used = 0;
};

// horizon <= 0 starts at the default policy and doubles adaptively up to the
// cap; an explicit horizon is used as-is. threads <= 0 resolves the default.
IntervalPartition interval_partition(int q, int k, int horizon = 0, int threads = 0);

// ---------------------------------------------------------------------------
// Tower ranking. A base class is better than another when its first-return
// tail sums are eventually strictly smaller at every moment, which by the
// identity P_hit(n) = sum_{m>n} R(m) is decided by the pairwise crossing:
// the class with the smaller autocorrelation value wins, with witness time
// N - k. Optimal bases are exactly the classes of maximal minimal period.

struct TowerRanking {
    int q = 0, k = 0;
    std::vector<CorrelationClass> order;  // best first (ascending cor value)
    std::vector<int> optimal;             // indices into order with period == k

    struct Edge {
        int better = 0, worse = 0;
        int witness = 0;  // probability time from which the strict order holds
    };
    std::vector<Edge> relation;  // one edge per unordered class pair
    int horizon_used = 0;
};

TowerRanking tower_rank(int q, int k, int horizon = 0, int threads = 0);

}  // namespace fpl
