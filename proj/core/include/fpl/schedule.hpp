#pragma once

// Hole switching. A schedule opens one cylinder of the k-th refinement per
// time step; the greedy rule keeps open whichever class currently has the
// largest static first-hitting probability, so segments start with the
// minimal-autocorrelation class and every later boundary is a pairwise
// crossing moment of the outgoing and incoming curves.

#include <utility>
#include <vector>

#include "fpl/crossing.hpp"
#include "fpl/exact_prob.hpp"
#include "fpl/word.hpp"

namespace fpl {

struct HoleSchedule {
    int q = 0, k = 0;
    int horizon = 0;  // covers probability time [0, horizon)
    struct Segment {
        int t_begin = 0, t_end = 0;  // half-open [t_begin, t_end)
        Word hole;                   // class representative kept open
    };
    std::vector<Segment> segments;
};

// Argmax of the exact static hit curves at every step; ties go to the class
// with the smaller autocorrelation value (between distinct classes ties only
// occur before their crossing, where the smaller value is the one that ends
// up on top, so no spurious boundaries appear).
HoleSchedule greedy_schedule(int q, int k, int horizon);

// Exact survival of the switched open system, by string length n. Computed
// on the suffix automaton over the q^(k-1) states of (k-1)-suffixes: at the
// step completing length n, the single transition that would complete the
// hole open at time n-k is deleted. Trajectories absorbed earlier stay
// absorbed; survivors carry their conditioned suffix distribution across
// switches (no re-normalization).
struct ScheduleEvaluation {
    HoleSchedule schedule;
    std::vector<ExactProbability> scheduled;  // index n in [0, horizon + k - 1]
    std::vector<std::pair<Word, std::vector<ExactProbability>>> statics;
};

ScheduleEvaluation schedule_survival(const HoleSchedule& schedule);

}  // namespace fpl
