#include "fpl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fpl/errors.hpp"
#include "fpl/parallel.hpp"

namespace fpl {

BruteCounts brute_counts(const Word& w, int n) {
    const int q = w.q();
    const int k = w.length();
    if (n < 0) throw std::invalid_argument("brute_counts: n must be nonnegative");
    double total = std::pow(static_cast<double>(q), n);
    if (total > static_cast<double>(1 << 24)) throw TooLarge("brute_counts: q^n exceeds 2^24");

    BruteCounts out{w, n, 0, 0, 0};
    std::vector<int> s(static_cast<size_t>(n), 0);
    std::vector<int> occ;
    while (true) {
        occ.clear();
        for (int p = 0; p + k <= n; ++p) {
            bool match = true;
            for (int i = 0; i < k; ++i) {
                if (s[static_cast<size_t>(p + i)] != w.at(i)) {
                    match = false;
                    break;
                }
            }
            if (match) occ.push_back(p);
        }
        if (occ.empty()) ++out.avoiders;
        if (occ.size() == 1 && occ[0] == n - k) ++out.hits;
        if (n > k && occ.size() == 2 && occ[0] == 0 && occ[1] == n - k) ++out.returns;

        int pos = n - 1;
        while (pos >= 0 && s[static_cast<size_t>(pos)] == q - 1) {
            s[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++s[static_cast<size_t>(pos)];
    }
    if (n == k) out.returns = -1;  // series seed convention
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// unbiased symbol draw, stable across platforms
int draw_symbol(std::mt19937_64& rng, int q) {
    const std::uint64_t qq = static_cast<std::uint64_t>(q);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % qq;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<int>(v % qq);
}

// prefix-automaton transitions: state = length of the longest suffix of the
// stream that is a prefix of w
std::vector<int> match_table(const Word& w) {
    const int k = w.length();
    const int q = w.q();
    std::vector<int> pi(static_cast<size_t>(k), 0);
    for (int i = 1; i < k; ++i) {
        int j = pi[static_cast<size_t>(i) - 1];
        while (j > 0 && w.at(i) != w.at(j)) j = pi[static_cast<size_t>(j) - 1];
        if (w.at(i) == w.at(j)) ++j;
        pi[static_cast<size_t>(i)] = j;
    }
    std::vector<int> delta(static_cast<size_t>(k + 1) * static_cast<size_t>(q));
    for (int st = 0; st <= k; ++st) {
        for (int c = 0; c < q; ++c) {
            if (st < k && w.at(st) == c) {
                delta[static_cast<size_t>(st) * q + c] = st + 1;
            } else if (st == 0) {
                delta[c] = 0;
            } else {
                int back = st == k ? pi[static_cast<size_t>(k) - 1] : pi[static_cast<size_t>(st) - 1];
                delta[static_cast<size_t>(st) * q + c] = delta[static_cast<size_t>(back) * q + c];
            }
        }
    }
    return delta;
}

}  // namespace

EmpiricalHits monte_carlo_hits(const Word& w, long trials, int horizon, std::uint64_t seed,
                               int threads) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_hits: trials must be >= 1");
    if (horizon < 1) throw std::invalid_argument("monte_carlo_hits: horizon must be >= 1");
    const int q = w.q();
    const int k = w.length();

    EmpiricalHits out{w, trials, horizon, seed, "mt19937_64", {}, 0};
    out.histogram.assign(static_cast<size_t>(horizon), 0);

    constexpr long kBatch = 1 << 13;
    const long batches = (trials + kBatch - 1) / kBatch;
    const auto delta = match_table(w);
    const int last_pos = horizon + k - 1;  // a hit at time t completes at position t+k

    std::vector<std::vector<long>> hist(static_cast<size_t>(batches));
    std::vector<long> censored(static_cast<size_t>(batches), 0);
    parallel_for(static_cast<int>(batches), resolve_threads(threads), [&](int b) {
        auto& h = hist[static_cast<size_t>(b)];
        h.assign(static_cast<size_t>(horizon), 0);
        long n = std::min(kBatch, trials - static_cast<long>(b) * kBatch);
        std::mt19937_64 rng(splitmix64(seed ^ (0x51ed2701a3c5e9b7ULL + static_cast<std::uint64_t>(b))));
        for (long i = 0; i < n; ++i) {
            int st = 0;
            bool hit = false;
            for (int pos = 1; pos <= last_pos; ++pos) {
                st = delta[static_cast<size_t>(st) * q + draw_symbol(rng, q)];
                if (st == k) {
                    ++h[static_cast<size_t>(pos - k)];
                    hit = true;
                    break;
                }
            }
            if (!hit) ++censored[static_cast<size_t>(b)];
        }
    });
    for (long b = 0; b < batches; ++b) {
        out.censored += censored[static_cast<size_t>(b)];
        for (int t = 0; t < horizon; ++t)
            out.histogram[static_cast<size_t>(t)] += hist[static_cast<size_t>(b)][static_cast<size_t>(t)];
    }
    return out;
}

MapKernel MapKernel::doubling(int q) { return {MapKind::Doubling, q}; }
MapKernel MapKernel::tent() { return {MapKind::Tent, 2}; }
MapKernel MapKernel::von_neumann_ulam() { return {MapKind::VonNeumannUlam, 2}; }
MapKernel MapKernel::baker() { return {MapKind::Baker, 2}; }

int MapKernel::symbols() const { return kind == MapKind::Doubling ? q : 2; }

std::string MapKernel::name() const {
    switch (kind) {
        case MapKind::Doubling: return "doubling";
        case MapKind::Tent: return "tent";
        case MapKind::VonNeumannUlam: return "von-neumann-ulam";
        case MapKind::Baker: return "baker";
    }
    return "?";
}

namespace {

void check_unit_interval(const Rational& x) {
    if (x < 0 || x >= 1)
        throw std::invalid_argument("map_itinerary: starting point must lie in [0, 1)");
}

Rational mul_int(const Rational& x, int m) { return x * m; }

int floor_int(const Rational& x) {
    Int fl = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    return static_cast<int>(fl);
}

void guard_denominator(const Rational& x) {
    if (boost::multiprecision::msb(boost::multiprecision::denominator(x)) > (1u << 16))
        throw TooLarge("map_itinerary: rational denominator exceeded the growth guard");
}

}  // namespace

std::vector<int> map_itinerary(const MapKernel& kernel, const Rational& x0, int steps) {
    if (kernel.kind == MapKind::Baker) return map_itinerary(kernel, x0, Rational(0), steps);
    check_unit_interval(x0);
    if (steps < 0) throw std::invalid_argument("map_itinerary: steps must be nonnegative");

    std::vector<int> out;
    out.reserve(static_cast<size_t>(steps));
    Rational x = x0;
    const Rational half(1, 2);
    for (int t = 0; t < steps; ++t) {
        switch (kernel.kind) {
            case MapKind::Doubling: {
                Rational scaled = mul_int(x, kernel.q);
                int sym = floor_int(scaled);
                out.push_back(sym);
                x = scaled - sym;
                break;
            }
            case MapKind::Tent: {
                out.push_back(x < half ? 0 : 1);
                x = x < half ? mul_int(x, 2) : Rational(2) - mul_int(x, 2);
                break;
            }
            case MapKind::VonNeumannUlam: {
                out.push_back(x < half ? 0 : 1);
                x = mul_int(x * (Rational(1) - x), 4);
                guard_denominator(x);
                break;
            }
            case MapKind::Baker:
                break;  // handled above
        }
    }
    return out;
}

std::vector<int> map_itinerary(const MapKernel& kernel, const Rational& x0, const Rational& y0,
                               int steps) {
    if (kernel.kind != MapKind::Baker) return map_itinerary(kernel, x0, steps);
    check_unit_interval(x0);
    if (y0 < 0 || y0 > 1) throw std::invalid_argument("map_itinerary: y must lie in [0, 1]");
    if (steps < 0) throw std::invalid_argument("map_itinerary: steps must be nonnegative");

    std::vector<int> out;
    out.reserve(static_cast<size_t>(steps));
    Rational x = x0, y = y0;
    const Rational half(1, 2);
    for (int t = 0; t < steps; ++t) {
        if (x < half) {
            out.push_back(0);
            x = mul_int(x, 2);
            y = y / 2;
        } else {
            out.push_back(1);
            x = mul_int(x, 2) - 1;
            y = y / 2 + half;
        }
    }
    return out;
}

std::vector<int> random_itinerary(const MapKernel& kernel, std::uint64_t seed, int steps) {
    if (steps < 0) throw std::invalid_argument("random_itinerary: steps must be nonnegative");
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<int> out;
    out.reserve(static_cast<size_t>(steps));
    const int q = kernel.symbols();
    for (int t = 0; t < steps; ++t) out.push_back(draw_symbol(rng, q));
    return out;
}

}  // namespace fpl
