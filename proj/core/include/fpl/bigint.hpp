#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fpl {

// All counting is exact. Counts grow like q^n and the interesting horizons
// reach n ~ 500 at q = 2, so machine integers are never an option.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int pow_int(int base, int exp) {
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace fpl
