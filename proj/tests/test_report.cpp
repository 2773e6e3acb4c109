#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <algorithm>

#include <json.hpp>

#include "dseries/report.hpp"
#include "dseries/verify.hpp"

using namespace dseries;

namespace {

RunRecord sample() {
    RunRecord r;
    r.op_name = "cos_odd_series";
    r.params = {{"m", 1.0}, {"x", 0.1}, {"kind", std::string("a,b \"q\"")}};
    r.value = -0.1;
    r.est_abs_error = 1e-18;
    r.elapsed_ns = 1234;
    return r;
}

std::string render(const RunRecord& r, Format f, bool timing = true) {
    Table t{run_record_fields(), {to_cells(r, timing)}};
    std::ostringstream os;
    write_table(os, t, f);
    return os.str();
}

}  // namespace

TEST_CASE("rel_diff and attach_oracle") {
    CHECK(rel_diff(1.5, 0.5) == 1.0);
    CHECK(rel_diff(3.0, 2.0) == 0.5);
    RunRecord r = sample();
    CHECK_FALSE(r.rel_diff);
    r.attach_oracle(-0.2, 1e-9);
    REQUIRE(r.oracle_value);
    REQUIRE(r.rel_diff);
    CHECK(*r.rel_diff == doctest::Approx(0.1));
    CHECK(*r.oracle_tail == 1e-9);
}

TEST_CASE("field set") {
    CHECK(run_record_fields() == std::vector<std::string>{"op_name", "params", "value", "est_abs_error", "oracle_value",
                                                          "oracle_tail", "rel_diff", "elapsed_ns"});
}

TEST_CASE("json line round trips") {
    RunRecord r = sample();
    r.value = 0.1 + 0.2;
    r.attach_oracle(0.3, std::nullopt);
    const std::string line = render(r, Format::json);
    CHECK(std::count(line.begin(), line.end(), '\n') == 1);
    const auto j = nlohmann::json::parse(line);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> want = run_record_fields();
    std::sort(want.begin(), want.end());
    CHECK(keys == want);
    CHECK(j["value"].get<double>() == r.value);
    CHECK(j["params"]["x"].get<double>() == 0.1);
    CHECK(j["params"]["kind"].get<std::string>() == "a,b \"q\"");
    CHECK(j["oracle_tail"].is_null());
    CHECK(j["elapsed_ns"].get<std::int64_t>() == 1234);
    CHECK(nlohmann::json::parse(render(r, Format::json, false))["elapsed_ns"] == 0);
}

TEST_CASE("csv header and quoting") {
    const std::string out = render(sample(), Format::csv);
    std::istringstream is(out);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "op_name,params,value,est_abs_error,oracle_value,oracle_tail,rel_diff,elapsed_ns");
    CHECK(row.rfind("cos_odd_series,\"m=1;x=0.10000000000000001;kind=a,b \"\"q\"\"\",-0.10000000000000001,", 0) == 0);
    CHECK(row.substr(row.size() - 8) == ",,,,1234");
}

TEST_CASE("plain columns align") {
    Table t{{"a", "bbbb"}, {{std::string("xxxxxx"), 1.0}, {std::string("y"), 2.5}}};
    std::ostringstream os;
    write_table(os, t, Format::plain);
    std::istringstream is(os.str());
    std::string line;
    std::vector<std::size_t> col;
    while (std::getline(is, line)) col.push_back(line.find_first_not_of(' ', line.find(' ')));
    REQUIRE(col.size() == 3);
    CHECK(col[0] == col[1]);
    CHECK(col[1] == col[2]);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.1, Format::json) == "0.10000000000000001");
    CHECK(format_number(0.1, Format::plain) == "0.1");
    CHECK(std::stod(format_number(1.0 / 3, Format::csv)) == 1.0 / 3);
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN(), Format::json) == "null");
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
    CHECK(parse_format("csv") == Format::csv);
}

TEST_CASE("grid parsing") {
    const auto g = parse_grid("0.5:5.5:11");
    REQUIRE(g.size() == 11);
    CHECK(g.front() == 0.5);
    CHECK(g.back() == 5.5);
    CHECK(g[1] == doctest::Approx(1.0));
    CHECK(parse_grid("2:9:1") == std::vector<double>{2});
    CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:2:3"), std::invalid_argument);
}

TEST_CASE("suites are ordered and thread-count independent") {
    CHECK(suite_names() == std::vector<std::string>{"specfun", "trig", "zeta", "bessel", "all"});
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions four;
    four.threads = 4;
    const SuiteResult a = run_suite("zeta", one);
    const SuiteResult b = run_suite("zeta", four);
    REQUIRE(a.checks.size() == b.checks.size());
    CHECK(a.passed == a.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].record.op_name == b.checks[i].record.op_name);
        CHECK(a.checks[i].record.value == b.checks[i].record.value);
    }
}

TEST_CASE("verify tolerance override") {
    VerifyOptions o;
    o.tol = 1e-300;
    const SuiteResult r = run_suite("zeta", o);
    CHECK(r.passed < r.checks.size());
}
