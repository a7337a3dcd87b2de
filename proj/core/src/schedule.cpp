#include "fpl/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "fpl/errors.hpp"
#include "fpl/series.hpp"

namespace fpl {

HoleSchedule greedy_schedule(int q, int k, int horizon) {
    if (q < 2 || k < 1) throw std::invalid_argument("greedy_schedule: need q >= 2, k >= 1");
    if (horizon < 1) throw std::invalid_argument("greedy_schedule: need horizon >= 1");

    auto classes = correlation_classes(q, k);
    const int nc = static_cast<int>(classes.size());
    const int n_max = std::max(horizon + k - 1, 2 * k);
    std::vector<CountSeries> series;
    series.reserve(static_cast<size_t>(nc));
    for (const auto& c : classes) series.push_back(compute_series(c.representative, n_max));

    HoleSchedule sched{q, k, horizon, {}};
    int open = -1;
    for (int t = 0; t < horizon; ++t) {
        const int n = t + k;
        // classes ascend by cor value, so ties resolve to the minimal
        // autocorrelation (the curve on top before the pair's crossing)
        int best = 0;
        for (int i = 1; i < nc; ++i) {
            if (series[static_cast<size_t>(i)].hits[static_cast<size_t>(n)] >
                series[static_cast<size_t>(best)].hits[static_cast<size_t>(n)])
                best = i;
        }
        if (best != open) {
            if (!sched.segments.empty()) sched.segments.back().t_end = t;
            sched.segments.push_back({t, horizon, classes[static_cast<size_t>(best)].representative});
            open = best;
        }
    }
    return sched;
}

ScheduleEvaluation schedule_survival(const HoleSchedule& sched) {
    const int q = sched.q;
    const int k = sched.k;
    if (q < 2 || k < 1) throw std::invalid_argument("schedule_survival: invalid schedule");
    if (sched.segments.empty() || sched.segments.front().t_begin != 0)
        throw std::invalid_argument("schedule_survival: segments must start at t = 0");
    int expect = 0;
    for (const auto& seg : sched.segments) {
        if (seg.t_begin != expect || seg.t_end <= seg.t_begin)
            throw std::invalid_argument("schedule_survival: segments must tile [0, horizon)");
        if (seg.hole.q() != q || seg.hole.length() != k)
            throw std::invalid_argument("schedule_survival: hole shape mismatch");
        expect = seg.t_end;
    }
    if (expect != sched.horizon)
        throw std::invalid_argument("schedule_survival: segments must tile [0, horizon)");

    double state_count = std::pow(static_cast<double>(q), k - 1);
    if (state_count > static_cast<double>(1 << 20))
        throw TooLarge("schedule_survival: q^(k-1) suffix states too large");
    const long states = static_cast<long>(state_count);

    ScheduleEvaluation ev;
    ev.schedule = sched;
    const int n_max = sched.horizon + k - 1;

    // open[t] as (suffix-state of the hole's first k-1 symbols, final symbol)
    std::vector<std::pair<long, int>> open(static_cast<size_t>(sched.horizon));
    for (const auto& seg : sched.segments) {
        long prefix = 0;
        for (int i = 0; i + 1 < k; ++i) prefix = prefix * q + seg.hole.at(i);
        for (int t = seg.t_begin; t < seg.t_end; ++t)
            open[static_cast<size_t>(t)] = {prefix, seg.hole.at(k - 1)};
    }

    // counts of live strings of the current length, by their (k-1)-suffix
    std::vector<Int> alive(static_cast<size_t>(states), Int(1));
    std::vector<Int> next(static_cast<size_t>(states));
    ev.scheduled.reserve(static_cast<size_t>(n_max) + 1);
    Int pw = 1;
    for (int n = 0; n < k && n <= n_max; ++n) {
        ev.scheduled.push_back({pw, n, q});
        pw *= q;
    }
    for (int p = k; p <= n_max; ++p) {
        const auto [hole_state, hole_sym] = open[static_cast<size_t>(p - k)];
        std::fill(next.begin(), next.end(), Int(0));
        for (long st = 0; st < states; ++st) {
            const Int& cnt = alive[static_cast<size_t>(st)];
            if (cnt == 0) continue;
            for (int c = 0; c < q; ++c) {
                if (st == hole_state && c == hole_sym) continue;  // completes the hole
                long ns = (st * q + c) % states;
                next[static_cast<size_t>(ns)] += cnt;
            }
        }
        alive.swap(next);
        Int total = 0;
        for (const auto& v : alive) total += v;
        ev.scheduled.push_back({std::move(total), p, q});
    }

    for (const auto& cls : correlation_classes(q, k)) {
        auto s = compute_series(cls.representative, std::max(n_max, 2 * k));
        std::vector<ExactProbability> surv;
        surv.reserve(static_cast<size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n)
            surv.push_back({s.avoiders[static_cast<size_t>(n)], n, q});
        ev.statics.emplace_back(cls.representative, std::move(surv));
    }
    return ev;
}

}  // namespace fpl
