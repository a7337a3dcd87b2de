#include "fpl/series.hpp"

#include <algorithm>

#include "fpl/errors.hpp"

namespace fpl {

int default_horizon(int k) {
    int exp = std::min(k + 1, 16);
    return std::max(12 * k, 1 << exp);
}

CountSeries compute_series(const Word& w, int horizon) {
    const int k = w.length();
    const int q = w.q();
    if (horizon < 2 * k)
        throw HorizonTooSmall("compute_series: horizon " + std::to_string(horizon) +
                              " < 2k = " + std::to_string(2 * k));

    CountSeries s{w, autocorrelation(w), horizon, {}, {}, {}};
    const auto& bits = s.cor.bits;
    s.hits.assign(static_cast<size_t>(horizon) + 1, Int(0));
    s.returns.assign(static_cast<size_t>(horizon) + 1, Int(0));
    s.hits[static_cast<size_t>(k)] = 1;
    s.returns[static_cast<size_t>(k)] = -1;
    for (int n = k + 1; n <= horizon; ++n) {
        Int acc = q * s.hits[static_cast<size_t>(n - 1)] - s.hits[static_cast<size_t>(n - k)];
        for (int t = 1; t < k; ++t) {
            if (bits[static_cast<size_t>(t)]) acc += s.returns[static_cast<size_t>(n - k + t)];
        }
        s.returns[static_cast<size_t>(n)] = q * s.hits[static_cast<size_t>(n - 1)] - acc;
        s.hits[static_cast<size_t>(n)] = std::move(acc);
    }

    s.avoiders.assign(static_cast<size_t>(horizon) + 1, Int(0));
    Int pw = 1;
    for (int n = 0; n <= horizon; ++n) {
        if (n < k) {
            s.avoiders[static_cast<size_t>(n)] = pw;
            pw *= q;
        } else {
            s.avoiders[static_cast<size_t>(n)] =
                q * s.avoiders[static_cast<size_t>(n - 1)] - s.hits[static_cast<size_t>(n)];
        }
    }
    return s;
}

HitCurve hit_curve(const CountSeries& s) {
    HitCurve c{s.word, {}};
    const int k = s.k();
    c.p.reserve(static_cast<size_t>(s.horizon - k) + 1);
    for (int t = 0; t + k <= s.horizon; ++t)
        c.p.push_back({s.hits[static_cast<size_t>(t + k)], t + k, s.q()});
    return c;
}

SurvivalCurve survival_curve(const CountSeries& s) {
    SurvivalCurve c{s.word, {}};
    c.p.reserve(static_cast<size_t>(s.horizon) + 1);
    for (int n = 0; n <= s.horizon; ++n)
        c.p.push_back({s.avoiders[static_cast<size_t>(n)], n, s.q()});
    return c;
}

ReturnCurve return_curve(const CountSeries& s) {
    ReturnCurve c{s.word, {}};
    c.p.reserve(static_cast<size_t>(s.horizon) + 1);
    for (int n = 0; n <= s.horizon; ++n)
        c.p.push_back({s.returns[static_cast<size_t>(n)], n, s.q()});
    return c;
}

}  // namespace fpl
