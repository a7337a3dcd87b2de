#pragma once

// Runtime verification suite: every identity and inequality the counting
// machinery is supposed to satisfy, executed against concrete data. These are
// assertions run on demand (`oracle-check`), not assumptions.

#include <string>
#include <vector>

#include "fpl/series.hpp"

namespace fpl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or scope summary
};

enum class CheckLevel { Quick, Full };

// Per-series checks (all identities exact):
//  - small-index return values: returns(n) for n <= 2k match the closed table
//  - hit-sum lower bound: hits(n) >= (q-1) * sum of the last k-s (or k-1) hits
//  - hit-return convolution: hits(n) = sum_t bits[t] * returns(n+t)
//  - return envelope: (q-1)*hits(n-k-1) <= returns(n), and returns(n) <=
//    hits(n-k) from n = 2k on (below 2k the seed returns(k) = -1 enters the
//    convolution and the upper bound can be off by one)
//  - return growth: returns(n) >= (q-1) * sum of the previous l returns for
//    sampled window lengths l, when there is a proper self-overlap
//  - normalization: q^T = avoiders(T) + sum_{j<=T} hits(j) q^(T-j) exactly
std::vector<CheckResult> check_series(const CountSeries& s);

// Word-structure checks over exhaustive ranges (overlap periodicity closure,
// primitive tail bound, overlap class cover, period multiple gaps, complement
// invariance, minimal-period facts).
std::vector<CheckResult> check_word_structure(CheckLevel level);

// Series + class-identity + enumeration-equivalence sweeps.
std::vector<CheckResult> check_counting(CheckLevel level, int threads = 0);

// Everything above in one deterministic list.
std::vector<CheckResult> run_invariant_suite(CheckLevel level, int threads = 0);

}  // namespace fpl
