#include "fpl/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "fpl/errors.hpp"
#include "fpl/parallel.hpp"

namespace fpl {

DeltaSeries delta_series(const CountSeries& dominant, const CountSeries& other) {
    const int k = dominant.k();
    const int kp = other.k();
    const int horizon = std::min(dominant.horizon, other.horizon);
    DeltaSeries d{dominant.word, other.word, horizon, {}};
    d.delta.assign(static_cast<size_t>(horizon) + 1, Int(0));
    const Int mul = pow_int(dominant.q(), k - kp);
    for (int n = 0; n <= horizon; ++n) {
        int m = n - k + kp;
        d.delta[static_cast<size_t>(n)] = dominant.hits[static_cast<size_t>(n)];
        if (m >= 0 && m <= other.horizon)
            d.delta[static_cast<size_t>(n)] -= mul * other.hits[static_cast<size_t>(m)];
    }
    return d;
}

namespace {

// nullopt when the crossing or its certificate window does not fit the horizon.
std::optional<CrossingReport> try_analyze(const CountSeries& dom, const CountSeries& oth,
                                          bool swapped) {
    const int q = dom.q();
    const int k = dom.k();
    auto d = delta_series(dom, oth);
    const int horizon = d.horizon;
    const auto& delta = d.delta;

    int first_nonzero = -1;
    int crossing = -1;
    for (int n = 0; n <= horizon; ++n) {
        if (first_nonzero < 0 && delta[static_cast<size_t>(n)] != 0) first_nonzero = n;
        if (delta[static_cast<size_t>(n)] > 0) {
            crossing = n;
            break;
        }
    }
    if (crossing < 0 || crossing + k - 1 > horizon) return std::nullopt;

    bool window = true;
    for (int n = crossing; n < crossing + k; ++n) {
        if (delta[static_cast<size_t>(n)] < (q - 1) * delta[static_cast<size_t>(n - 1)]) {
            window = false;
            break;
        }
    }
    // The scan already guarantees delta <= 0 before the crossing; positivity
    // up to the horizon is part of the single-sign-change claim.
    for (int n = crossing + 1; n <= horizon; ++n) {
        if (delta[static_cast<size_t>(n)] <= 0)
            throw InvariantFalsified("single crossing falsified for pair " + dom.word.str() +
                                     "/" + oth.word.str() + " at n = " + std::to_string(n));
    }

    CrossingReport r;
    r.w = dom.word;
    r.wp = oth.word;
    r.swapped = swapped;
    r.k = k;
    r.kp = oth.k();
    r.coincidence_end = first_nonzero - 1;
    r.crossing = crossing;
    r.certified = window;
    r.horizon_used = horizon;
    if (!window)
        throw InvariantFalsified("growth certificate failed for pair " + dom.word.str() + "/" +
                                 oth.word.str() + " at N = " + std::to_string(crossing));
    return r;
}

struct OrientedPair {
    Word dom, oth;
    bool swapped;
};

OrientedPair orient(const Word& w, const Word& wp) {
    if (w.q() != wp.q()) throw MismatchedAlphabet("compare_pair: alphabet sizes differ");
    auto pp = pair_profile(w, wp);
    if (pp.order == CorOrder::Equal)
        throw EqualAutocorrelations(
            "compare_pair: equal autocorrelations; use equal_class_check");
    if (pp.order == CorOrder::FirstLarger) return {w, wp, false};
    return {wp, w, true};
}

}  // namespace

CrossingReport compare_pair(const Word& w, const Word& wp, int horizon) {
    auto o = orient(w, wp);
    if (horizon <= 0) horizon = default_horizon(o.dom.length());
    auto rep = try_analyze(compute_series(o.dom, horizon), compute_series(o.oth, horizon),
                           o.swapped);
    if (!rep) throw HorizonExhausted(horizon, "no certified crossing for " + o.dom.str() + "/" +
                                                  o.oth.str());
    return *rep;
}

CrossingReport compare_pair_adaptive(const Word& w, const Word& wp, int initial_horizon,
                                     int cap) {
    auto o = orient(w, wp);
    int horizon = initial_horizon > 0 ? initial_horizon : default_horizon(o.dom.length());
    horizon = std::max(horizon, 2 * o.dom.length());
    while (true) {
        auto rep = try_analyze(compute_series(o.dom, horizon), compute_series(o.oth, horizon),
                               o.swapped);
        if (rep) return *rep;
        if (horizon >= cap)
            throw HorizonExhausted(horizon, "no certified crossing for " + o.dom.str() + "/" +
                                                o.oth.str() + " within cap");
        horizon = std::min(horizon * 2, cap);
    }
}

bool equal_class_check(const Word& w, const Word& wp, int horizon) {
    if (w.q() != wp.q()) throw MismatchedAlphabet("equal_class_check: alphabet sizes differ");
    if (w.length() != wp.length()) return false;
    if (!(autocorrelation(w) == autocorrelation(wp))) return false;
    if (horizon <= 0) horizon = default_horizon(w.length());
    auto sa = compute_series(w, horizon);
    auto sb = compute_series(wp, horizon);
    return sa.hits == sb.hits;
}

bool bound_check(const CrossingReport& r) {
    const int k = r.k, kp = r.kp, n = r.crossing;
    if (k != kp) return n > k + 1;
    int s = autocorrelation(r.w).longest_overlap;
    int sp = autocorrelation(r.wp).longest_overlap;
    if (s == sp) return n >= 4 * k;
    return n >= 3 * k - s;  // orientation implies s > sp
}

std::vector<CorrelationClass> correlation_classes(int q, int k) {
    if (q < 2 || k < 1) throw std::invalid_argument("correlation_classes: need q >= 2, k >= 1");
    double words = std::pow(static_cast<double>(q), k);
    if (words > static_cast<double>(1 << 22))
        throw TooLarge("correlation_classes: q^k too large to enumerate");

    std::map<std::vector<std::uint8_t>, CorrelationClass> groups;
    std::vector<int> digits(static_cast<size_t>(k), 0);
    while (true) {
        Word w(q, digits);
        auto cor = autocorrelation(w);
        auto it = groups.find(cor.bits);
        if (it == groups.end()) {
            // lexicographic enumeration, so the first member is the representative
            auto key = cor.bits;
            groups.emplace(std::move(key), CorrelationClass{std::move(cor), std::move(w), 1});
        } else {
            ++it->second.member_count;
        }
        int pos = k - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == q - 1) {
            digits[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }

    std::vector<CorrelationClass> out;
    out.reserve(groups.size());
    for (auto& [bits, cls] : groups) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const CorrelationClass& a, const CorrelationClass& b) {
                  return a.cor.value < b.cor.value;
              });
    return out;
}

IntervalPartition interval_partition(int q, int k, int horizon, int threads) {
    if (q < 2 || k < 2) throw std::invalid_argument("interval_partition: need q >= 2, k >= 2");
    threads = resolve_threads(threads);
    const bool adaptive = horizon <= 0;
    int h = adaptive ? default_horizon(k) : horizon;
    constexpr int kCap = 1 << 16;

    IntervalPartition part;
    part.q = q;
    part.k = k;
    part.classes = correlation_classes(q, k);
    const int nc = static_cast<int>(part.classes.size());

    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) idx.emplace_back(i, j);

    while (true) {
        std::vector<CountSeries> series(static_cast<size_t>(nc));
        parallel_for(nc, threads, [&](int i) {
            series[static_cast<size_t>(i)] =
                compute_series(part.classes[static_cast<size_t>(i)].representative, h);
        });

        std::vector<std::optional<CrossingReport>> reports(idx.size());
        parallel_for(static_cast<int>(idx.size()), threads, [&](int p) {
            auto [i, j] = idx[static_cast<size_t>(p)];
            // classes ascend by cor value, so j dominates
            reports[static_cast<size_t>(p)] = try_analyze(series[static_cast<size_t>(j)],
                                                          series[static_cast<size_t>(i)],
                                                          /*swapped=*/false);
        });

        bool complete = std::all_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.has_value(); });
        if (complete) {
            part.pairs.clear();
            part.split_moment = h + 1;
            part.first_crossing = h + 1;
            part.last_crossing = 0;
            for (size_t p = 0; p < idx.size(); ++p) {
                const auto& rep = *reports[p];
                part.split_moment = std::min(part.split_moment, rep.coincidence_end + 1);
                part.first_crossing = std::min(part.first_crossing, rep.crossing);
                part.last_crossing = std::max(part.last_crossing, rep.crossing);
                part.pairs.push_back({idx[p].first, idx[p].second, rep});
            }
            part.horizon_used = h;
            return part;
        }
        if (!adaptive || h >= kCap)
            throw HorizonExhausted(h, "interval_partition incomplete");
        h = std::min(h * 2, kCap);
    }
}

TowerRanking tower_rank(int q, int k, int horizon, int threads) {
    auto part = interval_partition(q, k, horizon, threads);
    TowerRanking t;
    t.q = q;
    t.k = k;
    t.order = part.classes;
    t.horizon_used = part.horizon_used;

    const int nc = static_cast<int>(t.order.size());
    std::vector<bool> beaten(static_cast<size_t>(nc), false);
    for (const auto& pc : part.pairs) {
        // smaller cor value = eventually smaller first-return tails = better
        t.relation.push_back({pc.a, pc.b, pc.report.crossing - k});
        beaten[static_cast<size_t>(pc.b)] = true;
    }
    for (int i = 0; i < nc; ++i) {
        int per = t.order[static_cast<size_t>(i)].cor.k -
                  t.order[static_cast<size_t>(i)].cor.longest_overlap;
        if (per == k) t.optimal.push_back(i);
    }
    std::vector<int> maximal;
    for (int i = 0; i < nc; ++i)
        if (!beaten[static_cast<size_t>(i)]) maximal.push_back(i);
    if (maximal != t.optimal)
        throw InvariantFalsified(
            "tower_rank: maximal-period classes do not match the unbeaten classes");
    return t;
}

}  // namespace fpl
