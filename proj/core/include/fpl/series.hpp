#pragma once

// Exact counting sequences for one word w of length k over q symbols:
//
//   avoiders[n]  strings of length n with no occurrence of w
//   hits[n]      strings of length n whose only occurrence of w is at the end
//   returns[n]   strings that begin and end with w and contain it nowhere else
//
// hits is filled by the overlap recurrence
//   hits[n] = q*hits[n-1] - hits[n-k] + sum_{t<k, bits[t]=1} returns[n-k+t]
// seeded with hits[k] = 1, and returns[n] = q*hits[n-1] - hits[n] computed
// alongside (returns[k] = -1 is the seed convention). avoiders is derived
// from hits so there is a single source of truth; equality with exhaustive
// enumeration is tested, not assumed.

#include <vector>

#include "fpl/exact_prob.hpp"
#include "fpl/word.hpp"

namespace fpl {

struct CountSeries {
    Word word;
    Autocorrelation cor;
    int horizon = 0;
    std::vector<Int> avoiders;  // a(n), 0 <= n <= horizon
    std::vector<Int> hits;      // h(n)
    std::vector<Int> returns;   // H(n)

    int q() const { return word.q(); }
    int k() const { return word.length(); }
};

CountSeries compute_series(const Word& w, int horizon);  // throws HorizonTooSmall if horizon < 2k

// First-hitting probabilities by absolute time t >= 0: p[t] = hits[t+k]/q^(t+k).
// The total mass over t >= 0 is exactly 1.
struct HitCurve {
    Word word;
    std::vector<ExactProbability> p;
    const ExactProbability& at(int t) const { return p[static_cast<size_t>(t)]; }
    int max_time() const { return static_cast<int>(p.size()) - 1; }
};

// Survival and first-return probabilities by string length n:
// survival p[n] = avoiders[n]/q^n, return p[n] = returns[n]/q^n (meaningful
// for n > k; smaller indices carry the seed convention).
struct SurvivalCurve {
    Word word;
    std::vector<ExactProbability> p;
    const ExactProbability& at(int n) const { return p[static_cast<size_t>(n)]; }
};

struct ReturnCurve {
    Word word;
    std::vector<ExactProbability> p;
    const ExactProbability& at(int n) const { return p[static_cast<size_t>(n)]; }
};

HitCurve hit_curve(const CountSeries& s);
SurvivalCurve survival_curve(const CountSeries& s);
ReturnCurve return_curve(const CountSeries& s);

// Default horizon policy, max(12k, 2^(k+1)): the last pairwise crossing grows
// roughly like 2^k, and the certificate needs k more indices past it.
int default_horizon(int k);

}  // namespace fpl
