// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dseries/besselsum.hpp"
#include "dseries/oracle.hpp"
#include "dseries/specfun.hpp"
#include "dseries/trigsum.hpp"
#include "dseries/verify.hpp"
#include "dseries/zetasum.hpp"

using namespace dseries;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const std::vector<double> kTrigGrid = {kPi / 6, kPi / 3, kPi / 2, 2, kPi, 4, 5.5};
const std::vector<double> kZetaGrid = {0.5, 1, 2, kPi, 4, 5.5};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Tallies checks for one criterion and remembers the worst offender.
struct Tally {
    int checks = 0;
    int failed = 0;
    double worst = 0.0;  // largest deviation / allowed
    std::string first_failure;

    void check(bool ok, const std::string& what, double deviation = 0.0, double allowed = 1.0) {
        ++checks;
        if (allowed > 0) worst = std::max(worst, deviation / allowed);
        if (!ok) {
            if (failed == 0) first_failure = what;
            ++failed;
        }
    }
    void within(double deviation, double allowed, const std::string& what) {
        check(std::isfinite(deviation) && deviation <= allowed, what, deviation, allowed);
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool report(int n, const std::string& title, const Tally& t, double elapsed, double budget) {
    const bool fast = elapsed < budget;
    const bool ok = t.failed == 0 && fast;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  checks=" << t.checks
              << " failed=" << t.failed << " worst/allowed=" << fmt(t.worst) << " time=" << fmt(elapsed) << "s (limit "
              << fmt(budget) << "s)";
    if (t.failed) std::cout << "  first failure: " << t.first_failure;
    if (!fast) std::cout << "  too slow";
    std::cout << std::endl;
    return ok;
}

std::string describe(const RunRecord& r) {
    std::string s = r.op_name;
    for (const auto& [k, v] : r.params) {
        s += " " + k + "=";
        s += std::holds_alternative<double>(v) ? fmt(std::get<double>(v)) : std::get<std::string>(v);
    }
    return s;
}

void absorb(Tally& t, const SuiteResult& r) {
    for (const Check& c : r.checks) t.check(c.passed, describe(c.record), c.deviation, c.tolerance);
}

template <class F>
void guarded(Tally& t, const std::string& what, F f) {
    try {
        f();
    } catch (const std::exception& e) {
        t.check(false, what + ": " + e.what());
    }
}

// ---------------------------------------------------------------- criteria

bool criterion1() {
    const auto t0 = Clock::now();
    Tally t;
    guarded(t, "specfun suite", [&] { absorb(t, run_suite("specfun")); });
    return report(1, "specfun identities", t, seconds_since(t0), 5);
}

bool criterion2() {
    const auto t0 = Clock::now();
    Tally t;
    OracleConfig cfg;
    cfg.max_terms = 10'000'000;
    cfg.target_tol = 1e-7 / 3;
    for (double s : {1.5, 2.5, 3.5}) {
        for (double x : kTrigGrid) {
            for (double y : {0.0, 1.0, kPi / 2}) {
                for (TrigKind k : {TrigKind::sine, TrigKind::cosine}) {
                    const std::string what = "trig " + std::string(to_string(k)) + " s=" + fmt(s) + " x=" + fmt(x) +
                                             " y=" + fmt(y);
                    guarded(t, what, [&] {
                        const OracleReport o = sum_trig(k, s, x, y, cfg);
                        const double v = trig_series_closed(TrigQuery(s, x, y, k)).value;
                        t.within(std::abs(v - o.value), std::max(1e-7, 3 * o.tail_bound), what);
                    });
                }
            }
        }
    }
    return report(2, "trig closed forms vs oracle", t, seconds_since(t0), 120);
}

bool criterion3() {
    const auto t0 = Clock::now();
    Tally t;
    guarded(t, "anchors", [&] {
        t.within(std::abs(cos_odd_series(1, kPi).value + std::log(2.0)), 1e-10, "m=1 x=pi");
        t.within(std::abs(cos_odd_series(1, kPi / 2).value + 0.5 * std::log(2.0)), 1e-10, "m=1 x=pi/2");
        t.within(std::abs(cos_odd_series(2, kPi).value + 0.75 * riemann_zeta(3).value), 1e-10, "m=2 x=pi");
    });
    OracleConfig cfg;
    cfg.max_terms = 10'000'000;
    for (unsigned m = 1; m <= 3; ++m) {
        const double tol = m == 1 ? 1e-6 : 1e-8;
        OracleConfig c = cfg;
        c.target_tol = tol / 10;
        if (m == 1) c.acceleration = Acceleration::aitken;
        for (double x : kTrigGrid) {
            const std::string what = "cos_odd m=" + std::to_string(m) + " x=" + fmt(x);
            guarded(t, what, [&] {
                const OracleReport o = sum_trig(TrigKind::cosine, 2.0 * m - 1, x, 0, c);
                t.within(std::abs(cos_odd_series(m, x).value - o.value), tol, what);
            });
        }
    }
    return report(3, "odd cosine anchors and sweep", t, seconds_since(t0), 120);
}

bool criterion4() {
    const auto t0 = Clock::now();
    Tally t;
    OracleConfig cfg;
    cfg.target_tol = 1e-15;
    auto rel = [](double v, double o) { return std::abs(v - o) / std::abs(o); };
    for (double x : kZetaGrid) {
        for (unsigned m = 1; m <= 4; ++m) {
            const std::string sx = " m=" + std::to_string(m) + " x=" + fmt(x);
            guarded(t, "base" + sx, [&] {
                t.within(rel(zeta_poch_base(m, x).value, sum_zeta_poch(ZetaPochWeight::base(m), x, cfg).value), 1e-8,
                         "base" + sx);
            });
            guarded(t, "even" + sx, [&] {
                t.within(rel(zeta_poch_even(m, x).value, sum_zeta_poch(ZetaPochWeight::even(m), x, cfg).value), 1e-8,
                         "even" + sx);
            });
            for (unsigned p = 1; p <= 3; ++p) {
                const std::string what = "general p=" + std::to_string(p) + sx;
                guarded(t, what, [&] {
                    const double o = sum_zeta_poch(ZetaPochWeight::general(m, p), x, cfg).value;
                    t.within(rel(zeta_poch_general(PochZetaQuery(m, p, x)).value, o), 1e-8, what);
                });
            }
        }
    }
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned p = 1; p <= 4; ++p) {
            const PartialFractionPlan plan = heaviside_plan(m, p);
            for (unsigned n = 0; n <= p; ++n)
                t.check(plan.reconstruct(rational(n)) == 1,
                        "heaviside m=" + std::to_string(m) + " p=" + std::to_string(p) + " n=" + std::to_string(n));
        }
    }
    return report(4, "zeta-Pochhammer closed forms and Heaviside plans", t, seconds_since(t0), 30);
}

bool criterion5() {
    const auto t0 = Clock::now();
    Tally t;
    const double catalan_over = [] {
        OracleConfig c;
        c.acceleration = Acceleration::euler_alternating;
        c.target_tol = 1e-13;
        return 2 / kPi * sum_trig(TrigKind::sine, 2, kPi / 2, 0, c).value;
    }();
    guarded(t, "anchors", [&] {
        t.within(std::abs(bessel_sum_even(0.5, 1, kPi / 2).value - kPi * kPi / 16), 1e-9, "even pi^2/16");
        t.within(std::abs(bessel_sum_odd(0.5, 1, kPi / 2).value - catalan_over), 1e-9, "odd 2G/pi");
        t.within(std::abs(bessel_half_sum(1, kPi / 2).value - catalan_over), 1e-9, "half 2G/pi");
        for (unsigned m = 1; m <= 3; ++m) {
            t.within(std::abs(bessel_sum_even(0.5, m, kPi).value), 1e-9, "even zero m=" + std::to_string(m));
            t.within(std::abs(bessel_sum_odd(0.5, m, kPi).value), 1e-9, "odd zero m=" + std::to_string(m));
            t.within(std::abs(bessel_half_sum(m, kPi).value), 1e-9, "half zero m=" + std::to_string(m));
        }
        for (double alpha : {2.1, 2.7, 3.9})
            t.within(std::abs(bessel_sum_raw(0.5, alpha, kPi).value), 1e-9, "raw zero alpha=" + fmt(alpha));
    });
    // sweeps at 1e-6 (capped general orders) and 1e-8 (half-integer orders)
    guarded(t, "bessel suite", [&] { absorb(t, run_suite("bessel")); });
    return report(5, "Bessel closed forms", t, seconds_since(t0), 300);
}

bool criterion6() {
    const auto t0 = Clock::now();
    Tally t;
    OracleConfig cfg;
    cfg.target_tol = 1e-12;
    for (double x : {1.0, 2.0, kPi, 4.0}) {
        const std::string sx = " x=" + fmt(x);
        guarded(t, "example" + sx, [&] {
            const double e = example_j2(x).value;
            const double c = spherical_sum_closed(2, 3, x).value;
            const double o = sum_bessel(BesselKind::spherical(2), 7, x, cfg).value;
            t.within(std::abs(e - c), 1e-9, "example vs closed" + sx);
            t.within(std::abs(e - o), 1e-9, "example vs oracle" + sx);
            t.within(std::abs(c - o), 1e-9, "closed vs oracle" + sx);
        });
    }
    return report(6, "worked example regression", t, seconds_since(t0), 60);
}

// ---------------------------------------------------------------- cli

struct Run {
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

Run cli(const std::string& args) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto out = dir / "dseries_acceptance_out.txt";
    const auto err = dir / "dseries_acceptance_err.txt";
    const std::string cmd = std::string(DSERIES_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

bool criterion7() {
    Tally t;
    t.check(cli("eval cos-odd --m 1 --x 3.14159265358979").code == 0, "exit 0");
    t.check(cli("eval cos-odd --m 1 --x 7").code == 3, "exit 3 on domain error");
    t.check(cli("eval cos-odd --x 1").code == 2, "exit 2 on missing flag");
    t.check(cli("bogus").code == 2, "exit 2 on unknown command");
    t.check(cli("verify zeta --tol 1e-300").code == 1, "exit 1 on failed verification");

    const std::vector<std::string> fields = {"op_name", "params", "value", "est_abs_error", "oracle_value",
                                             "oracle_tail", "rel_diff", "elapsed_ns"};
    guarded(t, "json schema", [&] {
        const Run r = cli("eval example-j2 --grid 1:4:4 --with-oracle");
        const auto ls = lines(r.out);
        t.check(r.code == 0 && ls.size() == 4, "json record count");
        for (const auto& l : ls) {
            const auto j = nlohmann::json::parse(l);
            std::vector<std::string> keys;
            for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
            auto want = fields;
            std::sort(keys.begin(), keys.end());
            std::sort(want.begin(), want.end());
            t.check(keys == want, "json field set");
        }
    });
    guarded(t, "csv schema", [&] {
        const auto ls = lines(cli("eval hurwitz --s 2.5 --a 0.5 --format csv").out);
        std::string header;
        for (const auto& f : fields) header += (header.empty() ? "" : ",") + f;
        t.check(ls.size() == 2 && ls[0] == header, "csv header");
    });
    for (const char* fmt_name : {"json", "csv"}) {
        const std::string args =
            std::string("eval bessel-odd --nu 0.3 --m 1 --grid 1:5:5 --with-oracle --no-timing --format ") + fmt_name;
        const Run a = cli(args);
        const Run b = cli(args);
        t.check(a.code == 0 && a.out == b.out, std::string("determinism ") + fmt_name);
    }
    t.check(lines(cli("bench cos-odd --m 1 --grid 0.5:5.5:11 --repetitions 3 --format csv").out).size() == 12,
            "bench rows");

    const auto t0 = Clock::now();
    const Run all = cli("verify all --no-timing");
    const double elapsed = seconds_since(t0);
    std::string summary = lines(all.err).empty() ? "" : lines(all.err).back();
    t.check(all.code == 0, "verify all exit 0: " + summary);
    return report(7, "CLI contract and verify all", t, elapsed, 600);
}

}  // namespace

int main() {
    bool ok = true;
    const std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7};
    for (const auto& c : criteria) ok = c() && ok;
    return ok ? 0 : 1;
}
