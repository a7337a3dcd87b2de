#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef FPL_BIN
#error "FPL_BIN must point at the fpl executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(FPL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cor prints the overlap bits") {
    auto r = run("cor 10100101");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10000101\n");
    CHECK(run("cor 1").out == "1\n");
    CHECK(run("cor 1111").out == "1111\n");
    CHECK(run("cor 012 --q 3").out == "100\n");
}

TEST_CASE("profile prints the structure fields") {
    auto r = run("profile 1000");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "per=4"));
    CHECK(contains(r.out, "I={}"));
    CHECK(contains(r.out, "s=0"));

    auto r2 = run("profile 10100101");
    CHECK(contains(r2.out, "I={1,3}"));
    CHECK(contains(r2.out, "S={3}"));
    CHECK(contains(r2.out, "T={1:1,3:0}"));
    CHECK(contains(r2.out, "per=5"));
}

TEST_CASE("series emits the counting columns") {
    auto r = run("series 11 --horizon 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n,a,h,H,P_hit,P_surv,P_ret"));
    CHECK(contains(r.out, "2,3,1,-1,0.25,0.75,-0.25"));
    CHECK(contains(r.out, "4,8,2,0,0.125,0.5,0"));

    CHECK(run("series 11 --horizon 2").exit_code == 1);  // horizon below 2k
}

TEST_CASE("compare reports the certified crossing") {
    auto r = run("compare 11 10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "N=7"));
    CHECK(contains(r.out, "t_star=5"));
    CHECK(contains(r.out, "certified=true"));
    CHECK(contains(r.out, "bound_ok=true"));

    CHECK(contains(run("compare 1010 0101").out,
                   "identical curves (equal autocorrelation)"));

    CHECK(run("compare 11 10 --horizon 7").exit_code == 2);
    CHECK(run("compare 11 10 --horizon 8").exit_code == 0);
}

TEST_CASE("partition reproduces the crossing-moment table") {
    auto r = run("partition --q 2 --k 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,begin,end\n4,20,26\n");

    auto range = run("partition --q 2 --k 2..3");
    CHECK(contains(range.out, "2,7,7"));
    CHECK(contains(range.out, "3,12,13"));
}

TEST_CASE("partition output is byte-identical across thread counts") {
    auto a = run("partition --q 2 --k 5 --threads 1 --format json");
    auto b = run("partition --q 2 --k 5 --threads 4 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run("partition --q 2 --k 5 --format json", "FPL_THREADS=3");
    CHECK(a.out == c.out);
}

TEST_CASE("classes lists the refinement grouped by autocorrelation") {
    auto r = run("classes --q 2 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "cor,value,s,per,size,representative"));
    CHECK(contains(r.out, "100,4,0,3,4,001"));
    CHECK(contains(r.out, "111,7,2,1,2,000"));
}

TEST_CASE("towers ranks the no-overlap class first") {
    auto r = run("towers --q 2 --k 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "rank,cor,value,representative,s,per,optimal"));
    CHECK(contains(r.out, "1,100,4,001,0,3,yes"));
    CHECK(contains(r.out, "3,111,7,000,2,1,no"));
}

TEST_CASE("schedule emits the segment table") {
    auto r = run("schedule --q 2 --k 2 --horizon 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t_begin,t_end,hole\n0,5,01\n5,40,00\n");
}

TEST_CASE("simulate is reproducible and maps are exact") {
    auto a = run("simulate --word 11 --trials 2000 --horizon 10 --seed 7");
    auto b = run("simulate --word 11 --trials 2000 --horizon 10 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "meta,generator,mt19937_64"));
    CHECK(contains(a.out, "meta,seed,7"));

    CHECK(run("simulate --map tent --x 2/5 --steps 8").out == "01010101\n");
    CHECK(run("simulate --map doubling --x 1/3 --steps 6").out == "010101\n");
    CHECK(run("simulate --map baker --x 1/3 --y 1/2 --steps 4").out == "0101\n");
    CHECK(run("simulate --trials 10").exit_code == 1);  // neither --word nor --map
}

TEST_CASE("output file and precision flags") {
    const std::string path = "/tmp/fpl_cli_series.csv";
    auto r = run("series 11 --horizon 6 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(contains(content, "2,3,1,-1,0.25,0.75,-0.25"));

    // 3/16 = 0.1875 rounds half-to-even up to 0.188 at three digits
    auto p = run("series 10 --horizon 6 --precision 3");
    CHECK(contains(p.out, "0.188"));
}

TEST_CASE("json output round-trips byte for byte") {
    for (const std::string& args :
         {std::string("series 11 --horizon 6 --format json"),
          std::string("compare 11 10 --format json"),
          std::string("partition --q 2 --k 3 --format json"),
          std::string("profile 10100101 --format json"),
          std::string("classes --q 2 --k 4 --format json"),
          std::string("towers --q 2 --k 3 --format json"),
          std::string("cor 10100101 --format json"),
          std::string("simulate --word 11 --trials 500 --horizon 8 --seed 3 --format json"),
          std::string("schedule --q 2 --k 2 --horizon 20 --format json")}) {
        auto r = run(args);
        REQUIRE(r.exit_code == 0);
        auto parsed = nlohmann::json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("cor").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
    CHECK(run("cor 012 --q 2").exit_code == 1);
    CHECK(run("partition --q 2 --k x..y").exit_code == 1);
}

TEST_CASE("quick oracle check flags exactly the falsified growth window") {
    auto r = run("oracle-check --level quick");
    CHECK(r.exit_code == 3);  // a falsified claim surfaces loudly
    CHECK(contains(r.out, "FAIL return-growth"));
    CHECK(contains(r.out, "PASS return-growth-delayed"));
    size_t fails = 0;
    for (size_t pos = 0; (pos = r.out.find("FAIL", pos)) != std::string::npos; ++pos) ++fails;
    CHECK(fails == 2);  // the FAIL line plus the summary count
    CHECK(contains(r.out, "1 checks FAILED"));
}
