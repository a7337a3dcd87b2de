#pragma once

// Independent ground truth: exhaustive enumeration over all q^n strings,
// seeded Monte Carlo over the symbolic shift, and the concrete map kernels
// whose itineraries realize the fair-dice-like process.

#include <cstdint>
#include <string>
#include <vector>

#include "fpl/bigint.hpp"
#include "fpl/word.hpp"

namespace fpl {

struct BruteCounts {
    Word word;
    int n = 0;
    Int avoiders, hits, returns;
};

// Exact counts by scanning every length-n string. The n == k value of
// `returns` is pinned to -1 to match the series seed convention; all other
// indices are counted combinatorially. Guarded by q^n <= 2^24.
BruteCounts brute_counts(const Word& w, int n);

struct EmpiricalHits {
    Word word;
    long trials = 0;
    int horizon = 0;
    std::uint64_t seed = 0;
    std::string generator;        // recorded for reproducibility
    std::vector<long> histogram;  // first-hit counts per time bin [0, horizon)
    long censored = 0;            // no hit within the horizon
};

// Reproducible for a fixed seed independent of thread count: trials are cut
// into fixed-size batches and batch i draws from its own generator seeded by
// mix(seed, i).
EmpiricalHits monte_carlo_hits(const Word& w, long trials, int horizon,
                               std::uint64_t seed, int threads = 0);

enum class MapKind { Doubling, Tent, VonNeumannUlam, Baker };

struct MapKernel {
    MapKind kind = MapKind::Doubling;
    int q = 2;  // branch count for the doubling map; others are binary

    static MapKernel doubling(int q = 2);
    static MapKernel tent();
    static MapKernel von_neumann_ulam();
    static MapKernel baker();

    int symbols() const;
    std::string name() const;
};

// Itinerary with respect to the kernel's basic Markov partition, in exact
// rational arithmetic (float iteration of these maps collapses and is never
// used). The quadratic map squares denominators each step, so growth is
// guarded by TooLarge rather than a step count.
std::vector<int> map_itinerary(const MapKernel& kernel, const Rational& x0, int steps);

// Baker's map tracks (x, y) but the strip symbol depends on x only.
std::vector<int> map_itinerary(const MapKernel& kernel, const Rational& x0,
                               const Rational& y0, int steps);

// Stochastic initialization: the itinerary of a random point is an IID
// uniform symbol stream, which is what this emits (seeded, reproducible).
std::vector<int> random_itinerary(const MapKernel& kernel, std::uint64_t seed, int steps);

}  // namespace fpl
