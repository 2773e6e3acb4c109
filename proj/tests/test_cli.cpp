#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <algorithm>
#include <unistd.h>

#include <json.hpp>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("dseries_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

Result run(const std::string& args, const std::string& env = "") {
    const auto out = scratch() / "out.txt";
    const auto err = scratch() / "err.txt";
    const std::string cmd = env + " " + DSERIES_CLI_PATH + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::filesystem::path write_config(const std::string& name, const std::string& body) {
    const auto p = scratch() / name;
    std::ofstream(p) << body;
    return p;
}

const double kLog2 = 0.693147180559945309417232121458;

}  // namespace

TEST_CASE("eval examples") {
    Result r = run("eval cos-odd --m 1 --x 3.14159265358979");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(-kLog2).epsilon(1e-12));

    r = run("eval hurwitz --s -1 --a 1");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(-1.0 / 12).epsilon(1e-15));

    r = run("eval example-j2 --x 3.14159265358979 --with-oracle");
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["oracle_value"].is_number());
    CHECK(j["rel_diff"].get<double>() <= 1e-9);
}

TEST_CASE("exit codes") {
    CHECK(run("eval cos-odd --m 1 --x 7").code == 3);
    CHECK(run("eval cos-odd --m 1 --x 7").err.find("x_out_of_domain") != std::string::npos);
    CHECK(run("eval trig --s 2 --x 1").code == 3);
    CHECK(run("eval cos-odd --x 1").code == 2);
    CHECK(run("eval nosuch --x 1").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("eval hurwitz --s 1 --a 0.5 --format yaml").code == 2);
    CHECK(run("verify nosuch").code == 2);
    CHECK(run("verify zeta --grid 1:2").code == 2);
    CHECK(run("verify zeta --tol 1e-300").code == 1);
    CHECK(run("--help").code == 0);
}

TEST_CASE("verify zeta with explicit tolerance") {
    const Result r = run("verify zeta --tol 1e-8 --no-timing");
    CHECK(r.code == 0);
    const auto summary = nlohmann::json::parse(lines(r.err).back());
    CHECK(summary["checks"] == summary["passed"]);
    CHECK(summary["checks"].get<int>() > 0);
    CHECK(lines(r.out).size() == summary["checks"].get<std::size_t>());
}

TEST_CASE("verify failure still reports") {
    const Result r = run("verify zeta --tol 1e-300 --no-timing");
    CHECK(r.code == 1);
    CHECK(r.err.find("FAIL") != std::string::npos);
    CHECK_FALSE(r.out.empty());
}

TEST_CASE("schema: json field set") {
    const Result r = run("eval spherical-closed --p 1 --m 1 --grid 1:5:5 --with-oracle");
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    const std::vector<std::string> want = {"elapsed_ns", "est_abs_error", "op_name",  "oracle_tail",
                                           "oracle_value", "params",      "rel_diff", "value"};
    for (const auto& l : ls) {
        const auto j = nlohmann::json::parse(l);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        std::sort(keys.begin(), keys.end());
        CHECK(keys == want);
    }
}

TEST_CASE("schema: csv and plain") {
    Result r = run("eval zeta-poch --m 2 --grid 1:3:3 --format csv");
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "op_name,params,value,est_abs_error,oracle_value,oracle_tail,rel_diff,elapsed_ns");

    r = run("eval zeta-poch --m 2 --grid 1:3:3 --format plain");
    REQUIRE(r.code == 0);
    ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0].rfind("op_name", 0) == 0);
    const std::size_t col = ls[0].find("value");
    for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i][col - 1] == ' ');
}

TEST_CASE("determinism without timing") {
    for (const char* fmt : {"json", "csv"}) {
        const std::string args = std::string("eval bessel-half --m 2 --grid 0.5:5.5:6 --with-oracle --no-timing --format ") + fmt;
        const Result a = run(args);
        const Result b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const Result a = run("verify trig --no-timing --threads 3");
    const Result b = run("verify trig --no-timing --threads 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("config precedence") {
    const auto strict = write_config("strict.cfg", "# impossible\ntol = 1e-300\n");
    const auto loose = write_config("loose.cfg", "tol=1e-8\nmax_terms=1000000\n");
    const auto broken = write_config("broken.cfg", "tol=abc\n");

    CHECK(run("verify zeta --config " + strict.string()).code == 1);
    CHECK(run("verify zeta --config " + strict.string() + " --tol 1e-8").code == 0);
    CHECK(run("verify zeta", "DSERIES_CONFIG=" + strict.string()).code == 1);
    CHECK(run("verify zeta --config " + loose.string(), "DSERIES_CONFIG=" + strict.string()).code == 0);
    CHECK(run("verify zeta --tol 1e-8", "DSERIES_CONFIG=" + strict.string()).code == 0);
    CHECK(run("verify zeta --config " + broken.string()).code == 2);
    CHECK(run("verify zeta --config " + (scratch() / "missing.cfg").string()).code == 2);
}

TEST_CASE("bench") {
    Result r = run("bench cos-odd --m 1 --grid 0.5:5.5:11 --repetitions 3 --format csv");
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() == 12);

    r = run("bench bessel-half --x 2 --m 2 --repetitions 3");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["speedup"].get<double>() > 0);

    r = run("bench zeta-poch --m 3 --x 3 --repetitions 3");
    REQUIRE(r.code == 0);
    const auto z = nlohmann::json::parse(r.out);
    CHECK(z.contains("closed_median_ns"));
    CHECK(z.contains("oracle_median_ns"));
    CHECK(run("bench nosuch --x 1").code == 2);
}
