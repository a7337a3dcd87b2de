#pragma once

#include <string>

#include "fpl/bigint.hpp"

namespace fpl {

// A dyadic-style exact probability num / q^exp. Kept unreduced; comparisons
// cross-multiply so no floating point ever enters the core.
struct ExactProbability {
    Int num;
    int exp = 0;
    int q = 2;

    bool operator==(const ExactProbability& o) const;
};

// -1, 0, 1. Both operands must share q.
int compare(const ExactProbability& a, const ExactProbability& b);

// Decimal rendering, round half to even at `precision` digits, trailing
// zeros stripped. Used only at serialization boundaries.
std::string to_decimal(const ExactProbability& p, int precision = 12);
std::string to_decimal(const Int& num, int q, int exp, int precision = 12);

}  // namespace fpl
