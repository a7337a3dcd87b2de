// fpl -- exact first-passage statistics for full-shift symbolic dynamics.
//
// Subcommands: cor, profile, series, compare, classes, partition, towers,
// schedule, oracle-check, simulate. CSV on stdout by default, --format json
// for machine consumption (exact integers travel as decimal strings).
// Exit codes: 0 ok, 1 usage/parse error, 2 horizon exhausted, 3 invariant
// falsified.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fpl/checks.hpp"
#include "fpl/crossing.hpp"
#include "fpl/errors.hpp"
#include "fpl/oracle.hpp"
#include "fpl/schedule.hpp"
#include "fpl/series.hpp"
#include "fpl/word.hpp"

using nlohmann::json;

namespace {

struct Output {
    std::string format = "csv";
    std::string path;
    int precision = 12;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << text;
    }
    void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write to a file instead of stdout");
    cmd->add_option("--precision", out.precision, "Decimal digits for probabilities")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
}

std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string join_map(const std::map<int, int>& m) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) s += ",";
        s += std::to_string(k) + ":" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(text);
            return {k, k};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--k", "expected an integer or a range like 4..8");
    }
}

fpl::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return fpl::Rational(fpl::Int(text));
        fpl::Int num(text.substr(0, slash));
        fpl::Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return fpl::Rational(num, den);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--x", "expected an integer or a fraction like 2/5");
    }
}

// ---------------------------------------------------------------------------

void run_cor(const std::string& text, int q, const Output& out) {
    auto w = fpl::Word::parse(text, q);
    auto c = fpl::autocorrelation(w);
    if (out.format == "csv") {
        out.emit(c.bit_string() + "\n");
        return;
    }
    json j{{"word", text},      {"q", w.q()},
           {"k", c.k},          {"bits", c.bit_string()},
           {"value", c.value.str()}, {"s", c.longest_overlap}};
    out.emit(j);
}

void run_profile(const std::string& text, int q, const Output& out) {
    auto w = fpl::Word::parse(text, q);
    auto p = fpl::structure_profile(w);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "word=" << text << "\n"
           << "q=" << w.q() << "\n"
           << "k=" << p.cor.k << "\n"
           << "cor=" << p.cor.bit_string() << "\n"
           << "value=" << p.cor.value.str() << "\n"
           << "s=" << p.cor.longest_overlap << "\n"
           << "per=" << p.period << "\n"
           << "I=" << join_ints(p.primitives) << "\n"
           << "d=" << p.min_primitive << "\n"
           << "S=" << join_ints(p.top_family) << "\n"
           << "T=" << join_map(p.tail_match) << "\n";
        out.emit(os.str());
        return;
    }
    json t = json::object();
    for (const auto& [i, v] : p.tail_match) t[std::to_string(i)] = v;
    json j{{"word", text},
           {"q", w.q()},
           {"k", p.cor.k},
           {"cor", p.cor.bit_string()},
           {"value", p.cor.value.str()},
           {"s", p.cor.longest_overlap},
           {"per", p.period},
           {"I", p.primitives},
           {"d", p.min_primitive},
           {"S", p.top_family},
           {"T", t}};
    out.emit(j);
}

void run_series(const std::string& text, int q, int horizon, const Output& out) {
    auto w = fpl::Word::parse(text, q);
    if (horizon <= 0) horizon = 12 * w.length();
    auto s = fpl::compute_series(w, horizon);
    const int prec = out.precision;
    auto dec = [&](const fpl::Int& num, int n) { return fpl::to_decimal(num, s.q(), n, prec); };
    if (out.format == "csv") {
        std::ostringstream os;
        os << "n,a,h,H,P_hit,P_surv,P_ret\n";
        for (int n = 0; n <= horizon; ++n) {
            os << n << "," << s.avoiders[n].str() << "," << s.hits[n].str() << ","
               << s.returns[n].str() << "," << dec(s.hits[n], n) << "," << dec(s.avoiders[n], n)
               << "," << dec(s.returns[n], n) << "\n";
        }
        out.emit(os.str());
        return;
    }
    json j{{"word", text}, {"q", s.q()}, {"k", s.k()}, {"horizon", horizon}, {"precision", prec}};
    json a = json::array(), h = json::array(), H = json::array();
    json ph = json::array(), ps = json::array(), pr = json::array();
    for (int n = 0; n <= horizon; ++n) {
        a.push_back(s.avoiders[n].str());
        h.push_back(s.hits[n].str());
        H.push_back(s.returns[n].str());
        ph.push_back(dec(s.hits[n], n));
        ps.push_back(dec(s.avoiders[n], n));
        pr.push_back(dec(s.returns[n], n));
    }
    j["a"] = a;
    j["h"] = h;
    j["H"] = H;
    j["P_hit"] = ph;
    j["P_surv"] = ps;
    j["P_ret"] = pr;
    out.emit(j);
}

void run_compare(const std::string& ta, const std::string& tb, int q, int horizon,
                 const Output& out) {
    auto wa = fpl::Word::parse(ta, q);
    auto wb = fpl::Word::parse(tb, q);
    auto pp = fpl::pair_profile(wa, wb);
    if (pp.order == fpl::CorOrder::Equal) {
        if (!fpl::equal_class_check(wa, wb, horizon))
            throw fpl::InvariantFalsified("equal autocorrelations but different hit series: " +
                                          ta + " vs " + tb);
        if (out.format == "csv") {
            out.emit(std::string("identical curves (equal autocorrelation)\n"));
        } else {
            out.emit(json{{"w", ta}, {"w'", tb}, {"identical", true},
                          {"reason", "equal autocorrelation"}});
        }
        return;
    }
    auto rep = horizon > 0 ? fpl::compare_pair(wa, wb, horizon)
                           : fpl::compare_pair_adaptive(wa, wb);
    bool bound = fpl::bound_check(rep);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "w=" << rep.w.str() << "\n"
           << "w'=" << rep.wp.str() << "\n"
           << "q=" << rep.w.q() << "\n"
           << "k=" << rep.k << "\n"
           << "k'=" << rep.kp << "\n"
           << "cor=" << fpl::autocorrelation(rep.w).bit_string() << "\n"
           << "cor'=" << fpl::autocorrelation(rep.wp).bit_string() << "\n"
           << "swapped=" << (rep.swapped ? "true" : "false") << "\n"
           << "coincidence_end=" << rep.coincidence_end << "\n"
           << "N=" << rep.crossing << "\n"
           << "t_star=" << rep.crossing - rep.k << "\n"
           << "certified=" << (rep.certified ? "true" : "false") << "\n"
           << "bound_ok=" << (bound ? "true" : "false") << "\n"
           << "horizon=" << rep.horizon_used << "\n";
        out.emit(os.str());
        return;
    }
    json j{{"w", rep.w.str()},
           {"w'", rep.wp.str()},
           {"q", rep.w.q()},
           {"k", rep.k},
           {"k'", rep.kp},
           {"cor", fpl::autocorrelation(rep.w).bit_string()},
           {"cor'", fpl::autocorrelation(rep.wp).bit_string()},
           {"swapped", rep.swapped},
           {"coincidence_end", rep.coincidence_end},
           {"N", rep.crossing},
           {"t_star", rep.crossing - rep.k},
           {"certified", rep.certified},
           {"bound_ok", bound},
           {"horizon", rep.horizon_used}};
    out.emit(j);
}

void run_classes(int q, int k, const Output& out) {
    auto classes = fpl::correlation_classes(q, k);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "cor,value,s,per,size,representative\n";
        for (const auto& c : classes) {
            os << c.cor.bit_string() << "," << c.cor.value.str() << "," << c.cor.longest_overlap
               << "," << c.cor.k - c.cor.longest_overlap << "," << c.member_count << ","
               << c.representative.str() << "\n";
        }
        out.emit(os.str());
        return;
    }
    json arr = json::array();
    for (const auto& c : classes) {
        arr.push_back(json{{"cor", c.cor.bit_string()},
                           {"value", c.cor.value.str()},
                           {"s", c.cor.longest_overlap},
                           {"per", c.cor.k - c.cor.longest_overlap},
                           {"size", c.member_count},
                           {"representative", c.representative.str()}});
    }
    out.emit(json{{"q", q}, {"k", k}, {"classes", arr}});
}

void run_partition(int q, const std::string& krange, int horizon, int threads,
                   const Output& out) {
    auto [klo, khi] = parse_k_range(krange);
    std::ostringstream csv;
    csv << "k,begin,end\n";
    json results = json::array();
    for (int k = klo; k <= khi; ++k) {
        auto part = fpl::interval_partition(q, k, horizon, threads);
        csv << k << "," << part.first_crossing << "," << part.last_crossing << "\n";
        if (out.format == "json") {
            json pairs = json::array();
            for (const auto& pc : part.pairs) {
                pairs.push_back(json{
                    {"hi", part.classes[pc.b].representative.str()},
                    {"lo", part.classes[pc.a].representative.str()},
                    {"coincidence_end", pc.report.coincidence_end},
                    {"N", pc.report.crossing},
                    {"certified", pc.report.certified}});
            }
            results.push_back(json{{"k", k},
                                   {"begin", part.first_crossing},
                                   {"end", part.last_crossing},
                                   {"split", part.split_moment},
                                   {"classes", static_cast<int>(part.classes.size())},
                                   {"horizon", part.horizon_used},
                                   {"pairs", pairs}});
        }
    }
    if (out.format == "csv") {
        out.emit(csv.str());
    } else {
        out.emit(json{{"q", q}, {"results", results}});
    }
}

void run_towers(int q, int k, int horizon, int threads, const Output& out) {
    auto t = fpl::tower_rank(q, k, horizon, threads);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "rank,cor,value,representative,s,per,optimal\n";
        for (size_t i = 0; i < t.order.size(); ++i) {
            const auto& c = t.order[i];
            bool opt = std::find(t.optimal.begin(), t.optimal.end(), static_cast<int>(i)) !=
                       t.optimal.end();
            os << i + 1 << "," << c.cor.bit_string() << "," << c.cor.value.str() << ","
               << c.representative.str() << "," << c.cor.longest_overlap << ","
               << c.cor.k - c.cor.longest_overlap << "," << (opt ? "yes" : "no") << "\n";
        }
        out.emit(os.str());
        return;
    }
    json order = json::array();
    for (const auto& c : t.order) {
        order.push_back(json{{"cor", c.cor.bit_string()},
                             {"value", c.cor.value.str()},
                             {"representative", c.representative.str()},
                             {"s", c.cor.longest_overlap},
                             {"per", c.cor.k - c.cor.longest_overlap}});
    }
    json rel = json::array();
    for (const auto& e : t.relation) {
        rel.push_back(json{{"better", t.order[e.better].representative.str()},
                           {"worse", t.order[e.worse].representative.str()},
                           {"witness", e.witness}});
    }
    out.emit(json{{"q", q},
                  {"k", k},
                  {"order", order},
                  {"optimal", t.optimal},
                  {"relation", rel},
                  {"horizon", t.horizon_used}});
}

void run_schedule(int q, int k, int horizon, const Output& out) {
    if (horizon <= 0) horizon = 10 * k;
    auto sched = fpl::greedy_schedule(q, k, horizon);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "t_begin,t_end,hole\n";
        for (const auto& seg : sched.segments)
            os << seg.t_begin << "," << seg.t_end << "," << seg.hole.str() << "\n";
        out.emit(os.str());
        return;
    }
    auto ev = fpl::schedule_survival(sched);
    json segs = json::array();
    for (const auto& seg : sched.segments)
        segs.push_back(json{{"t_begin", seg.t_begin}, {"t_end", seg.t_end},
                            {"hole", seg.hole.str()}});
    const auto& fin = ev.scheduled.back();
    json statics = json::array();
    for (const auto& [hole, curve] : ev.statics) {
        statics.push_back(json{{"hole", hole.str()},
                               {"survival_final", fpl::to_decimal(curve.back(), out.precision)}});
    }
    out.emit(json{{"q", q},
                  {"k", k},
                  {"horizon", horizon},
                  {"segments", segs},
                  {"n_final", fin.exp},
                  {"scheduled_final", fpl::to_decimal(fin, out.precision)},
                  {"scheduled_final_num", fin.num.str()},
                  {"statics", statics}});
}

int run_oracle_check(const std::string& level, int threads, const Output& out) {
    auto results = fpl::run_invariant_suite(
        level == "full" ? fpl::CheckLevel::Full : fpl::CheckLevel::Quick, threads);
    int failed = 0;
    if (out.format == "csv") {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
            if (!r.pass) ++failed;
        }
        os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks FAILED")
           << " (" << results.size() << " run, level " << level << ")\n";
        out.emit(os.str());
    } else {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!r.pass) ++failed;
        }
        out.emit(json{{"level", level}, {"failed", failed}, {"results", arr}});
    }
    return failed == 0 ? 0 : 3;
}

void run_simulate_mc(const std::string& text, int q, long trials, int horizon,
                     std::uint64_t seed, int threads, const Output& out) {
    auto w = fpl::Word::parse(text, q);
    auto e = fpl::monte_carlo_hits(w, trials, horizon, seed, threads);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "record,key,value\n"
           << "meta,word," << text << "\n"
           << "meta,q," << w.q() << "\n"
           << "meta,generator," << e.generator << "\n"
           << "meta,seed," << e.seed << "\n"
           << "meta,trials," << e.trials << "\n"
           << "meta,horizon," << e.horizon << "\n"
           << "meta,censored," << e.censored << "\n";
        for (int t = 0; t < e.horizon; ++t) os << "bin," << t << "," << e.histogram[t] << "\n";
        out.emit(os.str());
        return;
    }
    out.emit(json{{"word", text},
                  {"q", w.q()},
                  {"generator", e.generator},
                  {"seed", e.seed},
                  {"trials", e.trials},
                  {"horizon", e.horizon},
                  {"censored", e.censored},
                  {"histogram", e.histogram}});
}

void run_simulate_map(const std::string& map_name, const std::string& x_text,
                      const std::string& y_text, int q, int steps, std::uint64_t seed,
                      bool have_x, const Output& out) {
    fpl::MapKernel kernel;
    if (map_name == "doubling") kernel = fpl::MapKernel::doubling(q >= 2 ? q : 2);
    else if (map_name == "tent") kernel = fpl::MapKernel::tent();
    else if (map_name == "vnu") kernel = fpl::MapKernel::von_neumann_ulam();
    else if (map_name == "baker") kernel = fpl::MapKernel::baker();
    else throw CLI::ValidationError("--map", "expected doubling, tent, vnu or baker");

    std::vector<int> itin;
    if (have_x) {
        auto x = parse_rational(x_text);
        if (kernel.kind == fpl::MapKind::Baker) {
            auto y = y_text.empty() ? fpl::Rational(0) : parse_rational(y_text);
            itin = fpl::map_itinerary(kernel, x, y, steps);
        } else {
            itin = fpl::map_itinerary(kernel, x, steps);
        }
    } else {
        itin = fpl::random_itinerary(kernel, seed, steps);
    }
    if (out.format == "csv") {
        std::string line;
        for (int s : itin) line += static_cast<char>('0' + s);
        out.emit(line + "\n");
        return;
    }
    json j{{"map", kernel.name()}, {"steps", steps}, {"itinerary", itin}};
    if (have_x) j["x"] = x_text;
    else j["seed"] = seed;
    if (kernel.kind == fpl::MapKind::Baker && !y_text.empty()) j["y"] = y_text;
    out.emit(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact first-passage statistics for fair-dice-like shifts"};
    app.require_subcommand(1);

    std::string word, word2, krange = "2", map_name, x_text, y_text, level = "full";
    int q = 0, k = 2, horizon = 0, steps = 32, threads = 0;
    long trials = 100000;
    std::uint64_t seed = 1;
    Output out;
    int exit_code = 0;

    auto* c_cor = app.add_subcommand("cor", "Autocorrelation of a word");
    c_cor->add_option("word", word, "")->required();
    c_cor->add_option("--q", q, "Alphabet size (0 = infer)");
    add_output_flags(c_cor, out);
    c_cor->callback([&] { run_cor(word, q, out); });

    auto* c_prof = app.add_subcommand("profile", "Overlap structure of a word");
    c_prof->add_option("word", word, "")->required();
    c_prof->add_option("--q", q, "Alphabet size (0 = infer)");
    add_output_flags(c_prof, out);
    c_prof->callback([&] { run_profile(word, q, out); });

    auto* c_ser = app.add_subcommand("series", "Exact counting series and probability curves");
    c_ser->add_option("word", word, "")->required();
    c_ser->add_option("--q", q, "Alphabet size (0 = infer)");
    c_ser->add_option("--horizon", horizon, "Max index n (0 = 12k)");
    add_output_flags(c_ser, out);
    c_ser->callback([&] { run_series(word, q, horizon, out); });

    auto* c_cmp = app.add_subcommand("compare", "Certified crossing point of two hit curves");
    c_cmp->add_option("word", word, "")->required();
    c_cmp->add_option("word2", word2, "")->required();
    c_cmp->add_option("--q", q, "Alphabet size (0 = infer)");
    c_cmp->add_option("--horizon", horizon, "Fixed horizon (0 = adaptive)");
    add_output_flags(c_cmp, out);
    c_cmp->callback([&] { run_compare(word, word2, q, horizon, out); });

    auto* c_cls = app.add_subcommand("classes", "Correlation classes of a refinement");
    c_cls->add_option("--q", q, "Alphabet size")->required();
    c_cls->add_option("--k", k, "Word length")->required();
    add_output_flags(c_cls, out);
    c_cls->callback([&] { run_classes(q, k, out); });

    auto* c_part = app.add_subcommand("partition",
                                      "First/last crossing moments over all class pairs");
    c_part->add_option("--q", q, "Alphabet size")->required();
    c_part->add_option("--k", krange, "Word length or range a..b")->required();
    c_part->add_option("--horizon", horizon, "Fixed horizon (0 = adaptive)");
    c_part->add_option("--threads", threads, "Worker threads (0 = auto)");
    add_output_flags(c_part, out);
    c_part->callback([&] { run_partition(q, krange, horizon, threads, out); });

    auto* c_tow = app.add_subcommand("towers", "Rank tower bases by first-return tails");
    c_tow->add_option("--q", q, "Alphabet size")->required();
    c_tow->add_option("--k", k, "Word length")->required();
    c_tow->add_option("--horizon", horizon, "Fixed horizon (0 = adaptive)");
    c_tow->add_option("--threads", threads, "Worker threads (0 = auto)");
    add_output_flags(c_tow, out);
    c_tow->callback([&] { run_towers(q, k, horizon, threads, out); });

    auto* c_sch = app.add_subcommand("schedule", "Greedy hole-switching schedule");
    c_sch->add_option("--q", q, "Alphabet size")->required();
    c_sch->add_option("--k", k, "Word length")->required();
    c_sch->add_option("--horizon", horizon, "Probability-time horizon (0 = 10k)");
    add_output_flags(c_sch, out);
    c_sch->callback([&] { run_schedule(q, k, horizon, out); });

    auto* c_chk = app.add_subcommand("oracle-check", "Run the invariant suite");
    c_chk->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    c_chk->add_option("--threads", threads, "Worker threads (0 = auto)");
    add_output_flags(c_chk, out);
    c_chk->callback([&] { exit_code = run_oracle_check(level, threads, out); });

    auto* c_sim = app.add_subcommand("simulate",
                                     "Monte Carlo first hits or exact map itineraries");
    auto* opt_word = c_sim->add_option("--word", word, "Word for first-hit sampling");
    c_sim->add_option("--q", q, "Alphabet size (0 = infer)");
    c_sim->add_option("--trials", trials, "Trial count")->capture_default_str();
    c_sim->add_option("--horizon", horizon, "Histogram bins (first-hit times)");
    c_sim->add_option("--seed", seed, "RNG seed")->capture_default_str();
    c_sim->add_option("--threads", threads, "Worker threads (0 = auto)");
    auto* opt_map = c_sim->add_option("--map", map_name, "doubling, tent, vnu or baker");
    auto* opt_x = c_sim->add_option("--x", x_text, "Exact rational start, e.g. 2/5");
    c_sim->add_option("--y", y_text, "Second coordinate for the baker map");
    c_sim->add_option("--steps", steps, "Itinerary length")->capture_default_str();
    opt_word->excludes(opt_map);
    add_output_flags(c_sim, out);
    c_sim->callback([&] {
        if (!word.empty()) {
            run_simulate_mc(word, q, trials, horizon > 0 ? horizon : 48, seed, threads, out);
        } else if (!map_name.empty()) {
            run_simulate_map(map_name, x_text, y_text, q, steps, seed, !opt_x->empty(), out);
        } else {
            throw CLI::ValidationError("simulate", "need --word or --map");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const fpl::HorizonExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fpl::InvariantFalsified& e) {
        std::cerr << "INVARIANT FALSIFIED: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
