#include "fpl/exact_prob.hpp"

#include <stdexcept>

namespace fpl {

bool ExactProbability::operator==(const ExactProbability& o) const {
    return compare(*this, o) == 0;
}

int compare(const ExactProbability& a, const ExactProbability& b) {
    if (a.q != b.q) throw std::invalid_argument("compare: probability bases differ");
    Int lhs = a.num * pow_int(a.q, b.exp);
    Int rhs = b.num * pow_int(b.q, a.exp);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string to_decimal(const Int& num, int q, int exp, int precision) {
    if (precision < 1) precision = 1;
    bool neg = num < 0;
    Int mag = neg ? Int(-num) : num;
    Int den = pow_int(q, exp);
    Int scaled = mag * pow_int(10, precision);
    Int quot = scaled / den;
    Int rem = scaled % den;
    // round half to even
    Int twice = rem * 2;
    if (twice > den || (twice == den && (quot & 1) != 0)) ++quot;

    Int ip = quot / pow_int(10, precision);
    Int frac = quot % pow_int(10, precision);
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<size_t>(precision) - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0') fs.pop_back();

    std::string out = ip.str();
    if (!fs.empty()) out += "." + fs;
    if (neg && (ip != 0 || !fs.empty())) out.insert(out.begin(), '-');
    return out;
}

std::string to_decimal(const ExactProbability& p, int precision) {
    return to_decimal(p.num, p.q, p.exp, precision);
}

}  // namespace fpl
