#include "doctest.h"

#include "esa/cli.hpp"
#include "esa/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace esa;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("esa_cli_" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

std::vector<std::string> lines_of(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("exit codes") {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> matrix{
        {{"decide", "--m", "2", "--n", "8", "--l", "0", "--c", "0"}, 0},
        {{"decide", "--m", "2", "--n", "7", "--l", "0", "--c", "0"}, 10},
        {{"decide", "--m", "5", "--n", "20", "--l", "0", "--c", "15000000000"}, 10},
        {{"decide", "--m", "5", "--n", "20", "--l", "0", "--c", "1.5e10"}, 10},
        {{"decide", "--m", "2", "--n", "3", "--l", "0", "--c", "45"}, 0},
        {{"decide", "--m", "2", "--n", "3", "--l", "0", "--c", "44.9"}, 10},
        {{"decide", "--m", "2", "--n", "3", "--c", "4/0"}, 2},
        {{"decide", "--m", "2", "--n", "3", "--c", "abc"}, 2},
        {{"decide", "--m", "0", "--n", "3", "--c", "1"}, 2},
        {{"decide", "--m", "2", "--n", "3"}, 2},
        {{"frobnicate"}, 2},
        {{}, 2},
        {{"region", "--m", "2", "--n", "5", "--l", "1", "--all-l"}, 2},
        {{"region", "--m", "3", "--n", "12", "--l", "0"}, 0},
        {{"table", "--which", "gamma2"}, 0},
        {{"table", "--which", "signs520"}, 0},
        {{"table", "--which", "gamma3"}, 2},
        {{"basis", "--c1", "0", "--c2", "x"}, 2},
        {{"basis", "--c1", "0", "--c2", "-1"}, 0},
        {{"conjecture", "--m-max", "3"}, 0},
        {{"conjecture", "--m-max", "99"}, 2},
        {{"--help"}, 0},
    };
    for (const auto& c : matrix) {
        Run r = run(c.args);
        std::string joined;
        for (const auto& a : c.args) joined += a + " ";
        INFO(joined);
        CHECK(r.code == c.code);
    }
}

TEST_CASE("region rendering") {
    CHECK(first_line(run({"region", "--m", "5", "--n", "20", "--l", "0", "--digits", "5"}).out) ==
          "[0, 1.0436e10] ∪ [1.8324e10, ∞)");
    CHECK(first_line(run({"region", "--m", "2", "--n", "5", "--all-l", "--lmax", "50"}).out) == "[21, ∞)");
    CHECK(first_line(run({"region", "--m", "3", "--n", "12", "--l", "0"}).out) == "[0, ∞)");
}

TEST_CASE("table output and golden mismatch") {
    Run g = run({"table", "--which", "gamma2"});
    CHECK(g.out.find("231/16") != std::string::npos);
    CHECK(g.out.find("-3465/16") != std::string::npos);

    auto dir = scratch("golden");
    {
        std::ofstream f(dir / "gamma2.txt");
        f << "48 45 36 21 15 231/16 0 -585/16 -105 -3465/16 -383\n";
    }
    Run bad = run({"table", "--which", "gamma2", "--golden", (dir / "gamma2.txt").string()});
    CHECK(bad.code == 20);
    CHECK(bad.out.find("n=12: engine -384, golden -383") != std::string::npos);
    {
        std::ofstream f(dir / "signs.txt");
        f << "-++++++++++++++++++++++++++++++\n--+++++++--------------------++\n-++----+++++++++++++++++++++++-\n";
    }
    CHECK(run({"table", "--which", "signs520", "--golden", (dir / "signs.txt").string()}).code == 20);
    CHECK(run({"table", "--which", "gamma2", "--golden", (dir / "missing.txt").string()}).code == 2);
}

TEST_CASE("basis cases") {
    CHECK(run({"basis", "--c1", "0", "--c2", "-1"}).out.find("case: Generic") != std::string::npos);
    Run p0 = run({"basis", "--c1", "0", "--c2", "1"});
    CHECK(p0.out.find("case: A3b_lower") != std::string::npos);
    CHECK(p0.out.find("P_0") != std::string::npos);
    Run l0 = run({"basis", "--c1", "0", "--c2", "-9/16"});
    CHECK(l0.out.find("case: A3a_lower") != std::string::npos);
    CHECK(l0.out.find("L_0") != std::string::npos);
}

TEST_CASE("json round trip") {
    const std::vector<std::vector<std::string>> invocations{
        {"decide", "--m", "2", "--n", "8", "--l", "0", "--c", "0", "--json"},
        {"decide", "--m", "5", "--n", "20", "--l", "0", "--c", "15000000000", "--json"},
        {"region", "--m", "5", "--n", "20", "--l", "0", "--json"},
        {"region", "--m", "2", "--n", "5", "--all-l", "--lmax", "10", "--json"},
        {"table", "--which", "signs520", "--json"},
        {"basis", "--c1", "0", "--c2", "-1", "--lambda", "2,1", "--json"},
        {"basis", "--c1", "0", "--c2", "1", "--json"},
        {"conjecture", "--m-max", "3", "--json"},
    };
    for (const auto& args : invocations) {
        Run r = run(args);
        INFO(args[0]);
        Json j = Json::parse(r.out);
        CHECK(validate_envelope(j) == "");
        Json again = Json::parse(j.dump());
        CHECK(again == j);
        CHECK(validate_envelope(again) == "");
    }
    Json d = Json::parse(run(invocations[1]).out);
    CHECK(d["result"]["verdict"] == "NotESA");
    CHECK(d["result"]["counts"]["left"] == 3);

    Json reg = Json::parse(run(invocations[3]).out);
    CHECK(reg["result"]["text"] == "[21, ∞)");
    CHECK(reg["certification"]["oracle"] == "agrees");
    CHECK(reg["result"]["certification"]["mode"] == "closed-form");

    Json broken = d;
    broken["result"].erase("counts");
    CHECK(validate_envelope(broken) != "");
    Json no_bound = Json::parse(run(invocations[5]).out);
    no_bound["result"]["alpha"][0].erase("error_bound");
    CHECK(validate_envelope(no_bound) != "");
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> a{"region", "--m", "5", "--n", "20", "--l", "0", "--json"};
    CHECK(run(a).out == run(a).out);
    const std::vector<std::string> b{"basis", "--c1", "3", "--c2", "7", "--json"};
    CHECK(run(b).out == run(b).out);
    Run t = run({"--timing", "decide", "--m", "2", "--n", "8", "--c", "0", "--json"});
    CHECK(t.err.find("elapsed") != std::string::npos);
    CHECK(t.out == run({"decide", "--m", "2", "--n", "8", "--c", "0", "--json"}).out);
}

TEST_CASE("figure data") {
    auto dir = scratch("figures");
    REQUIRE(run({"figure", "--which", "fig1", "--c1", "-3", "--out", dir.string()}).code == 0);
    auto f1 = lines_of(dir / "fig1.csv");
    CHECK(f1.front() == "c2,re_alpha1,re_alpha2,re_alpha3,re_alpha4,red_j");
    CHECK(f1.size() > 100);

    REQUIRE(run({"figure", "--which", "fig2", "--out", dir.string()}).code == 0);
    auto f2 = lines_of(dir / "fig2.csv");
    CHECK(f2.front() == "locus,k,c1,c2,esa_flag");
    std::set<std::string> series;
    for (std::size_t i = 1; i < f2.size(); ++i) {
        auto a = f2[i].find(','), b = f2[i].find(',', a + 1);
        series.insert(f2[i].substr(0, b));
    }
    CHECK(series.count("line,5") == 1);
    CHECK(series.count("line,6") == 0);
    CHECK(series.count("parabola,3") == 1);
    CHECK(series.count("parabola,4") == 0);
    CHECK(series.count("region,-1") == 1);

    REQUIRE(run({"figure", "--which", "fig3", "--out", dir.string()}).code == 0);
    auto f3 = lines_of(dir / "fig3.csv");
    CHECK(f3.front() == "l,c,j,re,im,radius,red");
    std::set<std::pair<int, int>> lj;
    int red = 0;
    for (std::size_t i = 1; i < f3.size(); ++i) {
        std::istringstream in(f3[i]);
        std::string l, c, j;
        std::getline(in, l, ',');
        std::getline(in, c, ',');
        std::getline(in, j, ',');
        lj.insert({std::stoi(l), std::stoi(j)});
        if (f3[i].back() == '1') {
            ++red;
            CHECK(l == "0");
            CHECK(j == "5");
        }
    }
    CHECK(lj.size() == 50);
    CHECK(red > 0);

    CHECK(run({"figure", "--which", "fig1", "--out", dir.string()}).code == 2);
    CHECK(run({"figure", "--which", "fig9", "--out", dir.string()}).code == 2);
}

TEST_CASE("configuration file") {
    auto dir = scratch("config");
    {
        std::ofstream f(dir / "good.conf");
        f << "# smaller run\nlmax = 5\n";
    }
    {
        std::ofstream f(dir / "bad.conf");
        f << "no_such_key = 1\n";
    }
    setenv("ESA_CONFIG", (dir / "good.conf").string().c_str(), 1);
    Json j = Json::parse(run({"region", "--m", "2", "--n", "5", "--all-l", "--json"}).out);
    CHECK(j["certification"]["lmax"] == 5);
    j = Json::parse(run({"region", "--m", "2", "--n", "5", "--all-l", "--lmax", "7", "--json"}).out);
    CHECK(j["certification"]["lmax"] == 7);
    setenv("ESA_CONFIG", (dir / "bad.conf").string().c_str(), 1);
    CHECK(run({"decide", "--m", "2", "--n", "8", "--c", "0"}).code == 2);
    unsetenv("ESA_CONFIG");
}
