#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dseries/besselsum.hpp"
#include "dseries/oracle.hpp"
#include "dseries/report.hpp"
#include "dseries/specfun.hpp"
#include "dseries/trigsum.hpp"
#include "dseries/verify.hpp"
#include "dseries/zetasum.hpp"

namespace dseries::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flag values; unset means "not given".
struct Flags {
    std::optional<double> s, a, x, y, nu, alpha, tol;
    std::optional<unsigned> m, p, q;
    std::optional<std::uint64_t> max_terms;
    std::optional<std::string> grid, config;
    std::string format = "json";
    std::string kind = "both";
    bool with_oracle = false;
    bool no_timing = false;
    unsigned repetitions = 5;
    unsigned threads = 0;
};

/// Defaults from the config file (--config, else $DSERIES_CONFIG); flags win.
struct Settings {
    std::optional<double> tol;
    std::optional<std::uint64_t> max_terms;
};

Settings load_settings(const Flags& f) {
    Settings s;
    std::string path;
    if (f.config) {
        path = *f.config;
    } else if (const char* env = std::getenv("DSERIES_CONFIG"); env && *env) {
        path = env;
    }
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read config file " + path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            const auto eq = line.find('=');
            auto trim = [](std::string t) {
                const auto b = t.find_first_not_of(" \t\r");
                const auto e = t.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
            };
            if (trim(line).empty()) continue;
            if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
            const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            try {
                std::size_t used = 0;
                if (key == "tol") {
                    s.tol = std::stod(value, &used);
                } else if (key == "max_terms") {
                    s.max_terms = std::stoull(value, &used);
                } else {
                    throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
                }
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception&) {
                throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for " + key);
            }
        }
    }
    if (f.tol) s.tol = f.tol;
    if (f.max_terms) s.max_terms = f.max_terms;
    return s;
}

// ---------------------------------------------------------------- operations

struct Point {
    Params params;
    std::function<EvalResult()> closed;
    std::function<OracleReport(const OracleConfig&)> oracle;  // empty when there is none
};

struct Op {
    std::string name;
    std::string op_name;
    std::vector<std::string> params;  // flags this op takes, in output order
    bool uses_x = true;
    std::function<std::vector<Point>(const Flags&, double x)> points;
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing --") + flag);
    return *v;
}
unsigned need(const std::optional<unsigned>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing --") + flag);
    return *v;
}

Acceleration trig_acceleration(double s) { return s <= 2 ? Acceleration::aitken : Acceleration::none; }

OracleConfig with_acceleration(OracleConfig c, Acceleration a) {
    c.acceleration = a;
    return c;
}

const std::vector<Op>& operations() {
    static const std::vector<Op> ops = [] {
        std::vector<Op> v;
        v.push_back({"hurwitz", "hurwitz_zeta", {"s", "a"}, false, [](const Flags& f, double) {
                         const double s = need(f.s, "s"), a = need(f.a, "a");
                         return std::vector<Point>{{{{"s", s}, {"a", a}}, [=] { return hurwitz_zeta(HurwitzArg(s, a)); }, {}}};
                     }});
        v.push_back({"hurwitz-deriv", "hurwitz_zeta_sderiv", {"s", "a"}, false, [](const Flags& f, double) {
                         const double s = need(f.s, "s"), a = need(f.a, "a");
                         return std::vector<Point>{
                             {{{"s", s}, {"a", a}}, [=] { return hurwitz_zeta_sderiv(HurwitzArg(s, a)); }, {}}};
                     }});
        v.push_back({"trig", "trig_series_closed", {"s", "x", "y", "kind"}, true, [](const Flags& f, double x) {
                         const double s = need(f.s, "s"), y = f.y.value_or(0.0);
                         std::vector<TrigKind> kinds;
                         if (f.kind == "sine" || f.kind == "both") kinds.push_back(TrigKind::sine);
                         if (f.kind == "cosine" || f.kind == "both") kinds.push_back(TrigKind::cosine);
                         std::vector<Point> pts;
                         for (TrigKind k : kinds) {
                             pts.push_back({{{"s", s}, {"x", x}, {"y", y}, {"kind", std::string(to_string(k))}},
                                            [=] { return trig_series_closed(TrigQuery(s, x, y, k)); },
                                            [=](const OracleConfig& c) {
                                                return sum_trig(k, s, x, y, with_acceleration(c, trig_acceleration(s)));
                                            }});
                         }
                         return pts;
                     }});
        v.push_back({"cos-odd", "cos_odd_series", {"m", "x"}, true, [](const Flags& f, double x) {
                         const unsigned m = need(f.m, "m");
                         return std::vector<Point>{{{{"m", double(m)}, {"x", x}}, [=] { return cos_odd_series(m, x); },
                                                    [=](const OracleConfig& c) {
                                                        const double s = 2.0 * m - 1;
                                                        return sum_trig(TrigKind::cosine, s, x, 0.0,
                                                                        with_acceleration(c, trig_acceleration(s)));
                                                    }}};
                     }});
        v.push_back({"zeta-poch", "zeta_poch", {"m", "q", "x"}, true, [](const Flags& f, double x) {
                         if (f.m.has_value() == f.q.has_value()) throw UsageError("zeta-poch takes exactly one of --m, --q");
                         if (f.m) {
                             const unsigned m = *f.m;
                             return std::vector<Point>{{{{"m", double(m)}, {"x", x}}, [=] { return zeta_poch_base(m, x); },
                                                        [=](const OracleConfig& c) {
                                                            return sum_zeta_poch(ZetaPochWeight::base(m), x, c);
                                                        }}};
                         }
                         const unsigned q = *f.q;
                         return std::vector<Point>{{{{"q", double(q)}, {"x", x}}, [=] { return zeta_poch_length(q, x); },
                                                    [=](const OracleConfig& c) {
                                                        if (q == 0) throw DomainError(ErrorCode::parameter_out_of_range, "q must be >= 1");
                                                        return sum_zeta_poch(ZetaPochWeight::length(q), x, c);
                                                    }}};
                     }});
        v.push_back({"zeta-poch-general", "zeta_poch_general", {"m", "p", "x"}, true, [](const Flags& f, double x) {
                         const unsigned m = need(f.m, "m"), p = need(f.p, "p");
                         return std::vector<Point>{{{{"m", double(m)}, {"p", double(p)}, {"x", x}},
                                                    [=] { return zeta_poch_general(PochZetaQuery(m, p, x)); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_zeta_poch(ZetaPochWeight::general(m, p), x, c);
                                                    }}};
                     }});
        v.push_back({"bessel-raw", "bessel_sum_raw", {"nu", "alpha", "x"}, true, [](const Flags& f, double x) {
                         const double nu = need(f.nu, "nu"), alpha = need(f.alpha, "alpha");
                         return std::vector<Point>{{{{"nu", nu}, {"alpha", alpha}, {"x", x}},
                                                    [=] { return bessel_sum_raw(nu, alpha, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::J(nu), alpha, x, c);
                                                    }}};
                     }});
        v.push_back({"bessel-even", "bessel_sum_even", {"nu", "m", "x"}, true, [](const Flags& f, double x) {
                         const double nu = need(f.nu, "nu");
                         const unsigned m = need(f.m, "m");
                         return std::vector<Point>{{{{"nu", nu}, {"m", double(m)}, {"x", x}},
                                                    [=] { return bessel_sum_even(nu, m, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::J(nu), nu + 2.0 * m, x, c);
                                                    }}};
                     }});
        v.push_back({"bessel-odd", "bessel_sum_odd", {"nu", "m", "x"}, true, [](const Flags& f, double x) {
                         const double nu = need(f.nu, "nu");
                         const unsigned m = need(f.m, "m");
                         return std::vector<Point>{{{{"nu", nu}, {"m", double(m)}, {"x", x}},
                                                    [=] { return bessel_sum_odd(nu, m, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::J(nu), nu + 2.0 * m - 1, x, c);
                                                    }}};
                     }});
        v.push_back({"bessel-half", "bessel_half_sum", {"m", "x"}, true, [](const Flags& f, double x) {
                         const unsigned m = need(f.m, "m");
                         return std::vector<Point>{{{{"m", double(m)}, {"x", x}}, [=] { return bessel_half_sum(m, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::J(0.5), 2.0 * m - 0.5, x, c);
                                                    }}};
                     }});
        v.push_back({"spherical-base", "spherical_sum_base", {"p", "alpha", "x"}, true, [](const Flags& f, double x) {
                         const unsigned p = need(f.p, "p");
                         const double alpha = need(f.alpha, "alpha");
                         return std::vector<Point>{{{{"p", double(p)}, {"alpha", alpha}, {"x", x}},
                                                    [=] { return spherical_sum_base(p, alpha, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::spherical(p), alpha, x, c);
                                                    }}};
                     }});
        v.push_back({"spherical-closed", "spherical_sum_closed", {"p", "m", "x"}, true, [](const Flags& f, double x) {
                         const unsigned p = need(f.p, "p"), m = need(f.m, "m");
                         return std::vector<Point>{{{{"p", double(p)}, {"m", double(m)}, {"x", x}},
                                                    [=] { return spherical_sum_closed(p, m, x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::spherical(p), p + 2.0 * m - 1, x, c);
                                                    }}};
                     }});
        v.push_back({"example-j2", "example_j2", {"x"}, true, [](const Flags&, double x) {
                         return std::vector<Point>{{{{"x", x}}, [=] { return example_j2(x); },
                                                    [=](const OracleConfig& c) {
                                                        return sum_bessel(BesselKind::spherical(2), 7.0, x, c);
                                                    }}};
                     }});
        return v;
    }();
    return ops;
}

void add_param_flags(CLI::App* sub, const Op& op, Flags& f) {
    for (const auto& p : op.params) {
        if (p == "s") sub->add_option("--s", f.s, "order s");
        if (p == "a") sub->add_option("--a", f.a, "Hurwitz parameter a");
        if (p == "x") sub->add_option("--x", f.x, "point x in (0, 2pi)");
        if (p == "y") sub->add_option("--y", f.y, "phase y (default 0)");
        if (p == "kind") sub->add_option("--kind", f.kind, "sine, cosine or both")->check(CLI::IsMember({"sine", "cosine", "both"}));
        if (p == "m") sub->add_option("--m", f.m, "index m");
        if (p == "p") sub->add_option("--p", f.p, "order p");
        if (p == "q") sub->add_option("--q", f.q, "Pochhammer length q");
        if (p == "nu") sub->add_option("--nu", f.nu, "Bessel order nu");
        if (p == "alpha") sub->add_option("--alpha", f.alpha, "exponent alpha");
    }
    if (op.uses_x) sub->add_option("--grid", f.grid, "start:stop:count over x, inclusive");
}

void add_common_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--format", f.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--tol", f.tol, "oracle target tolerance");
    sub->add_option("--max-terms", f.max_terms, "oracle term budget");
    sub->add_option("--config", f.config, "key=value file with tol, max_terms");
    sub->add_flag("--no-timing", f.no_timing, "report elapsed_ns as 0");
}

std::vector<double> x_values(const Op& op, const Flags& f) {
    if (!op.uses_x) return {0.0};
    if (f.grid && f.x) throw UsageError("--x and --grid are mutually exclusive");
    if (f.grid) {
        try {
            return parse_grid(*f.grid);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (!f.x) throw UsageError("missing --x or --grid");
    return {*f.x};
}

OracleConfig oracle_config(const Settings& s) {
    OracleConfig c;
    if (s.tol) c.target_tol = *s.tol;
    if (s.max_terms) c.max_terms = *s.max_terms;
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return c;
}

std::int64_t since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
}

Table record_table(const std::vector<RunRecord>& records, bool timing) {
    Table t{run_record_fields(), {}};
    for (const auto& r : records) t.rows.push_back(to_cells(r, timing));
    return t;
}

int cmd_eval(const Op& op, const Flags& f, std::ostream& out) {
    const Settings settings = load_settings(f);
    const OracleConfig cfg = oracle_config(settings);
    std::vector<RunRecord> records;
    for (double x : x_values(op, f)) {
        for (auto& pt : op.points(f, x)) {
            RunRecord r;
            r.op_name = op.op_name;
            r.params = pt.params;
            const auto t0 = std::chrono::steady_clock::now();
            const EvalResult v = pt.closed();
            r.elapsed_ns = since(t0);
            r.value = v.value;
            r.est_abs_error = v.est_abs_error;
            if (f.with_oracle) {
                if (!pt.oracle) throw UsageError(op.name + " has no oracle");
                const OracleReport o = pt.oracle(cfg);
                r.attach_oracle(o.value, o.tail_bound);
            }
            records.push_back(std::move(r));
        }
    }
    write_table(out, record_table(records, !f.no_timing), parse_format(f.format));
    return ok;
}

std::int64_t percentile(std::vector<std::int64_t> v, double q) {
    std::sort(v.begin(), v.end());
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
    return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

int cmd_bench(const Op& op, const Flags& f, std::ostream& out) {
    const Settings settings = load_settings(f);
    const OracleConfig cfg = oracle_config(settings);
    if (f.repetitions < 1) throw UsageError("--repetitions must be >= 1");
    Table t{{"op_name", "params", "closed_median_ns", "closed_p95_ns", "oracle_median_ns", "oracle_p95_ns", "speedup"},
            {}};
    for (double x : x_values(op, f)) {
        for (auto& pt : op.points(f, x)) {
            if (!pt.oracle) throw UsageError(op.name + " has no oracle to compare against");
            std::vector<std::int64_t> closed, oracle;
            for (unsigned i = 0; i < f.repetitions; ++i) {
                auto t0 = std::chrono::steady_clock::now();
                volatile double sink = pt.closed().value;
                closed.push_back(since(t0));
                t0 = std::chrono::steady_clock::now();
                sink = pt.oracle(cfg).value;
                oracle.push_back(since(t0));
                (void)sink;
            }
            const auto cm = percentile(closed, 0.5), om = percentile(oracle, 0.5);
            t.rows.push_back({op.op_name, pt.params, cm, percentile(closed, 0.95), om, percentile(oracle, 0.95),
                              static_cast<double>(om) / static_cast<double>(std::max<std::int64_t>(cm, 1))});
        }
    }
    write_table(out, t, parse_format(f.format));
    return ok;
}

int cmd_verify(const std::string& suite, const Flags& f, std::ostream& out, std::ostream& err) {
    const Settings settings = load_settings(f);
    VerifyOptions opts;
    opts.tol = settings.tol;
    opts.max_terms = settings.max_terms;
    opts.threads = f.threads;
    if (f.grid) {
        try {
            opts.grid = parse_grid(*f.grid);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (opts.max_terms) {
        OracleConfig c;
        c.max_terms = *opts.max_terms;
        try {
            c.validate();
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    const SuiteResult res = run_suite(suite, opts);
    std::vector<RunRecord> records;
    for (const auto& c : res.checks) records.push_back(c.record);
    write_table(out, record_table(records, !f.no_timing), parse_format(f.format));
    for (const auto& c : res.checks) {
        if (c.passed) continue;
        err << "FAIL " << c.record.op_name;
        for (const auto& [k, v] : c.record.params) {
            err << ' ' << k << '=';
            if (const auto* d = std::get_if<double>(&v))
                err << format_number(*d, Format::plain);
            else
                err << std::get<std::string>(v);
        }
        err << " deviation=" << format_number(c.deviation, Format::plain)
            << " tolerance=" << format_number(c.tolerance, Format::plain) << '\n';
    }
    err << "{\"checks\":" << res.checks.size() << ",\"passed\":" << res.passed
        << ",\"max_rel_diff\":" << format_number(res.max_rel_diff, Format::json) << "}\n";
    return res.passed == res.checks.size() ? ok : verify_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms for Dirichlet-type trigonometric, zeta and Bessel series, with brute-force oracles"};
    app.require_subcommand(1);
    Flags f;
    std::function<int()> action;

    auto* eval = app.add_subcommand("eval", "evaluate a closed form");
    eval->require_subcommand(1);
    auto* bench = app.add_subcommand("bench", "time a closed form against its oracle");
    bench->require_subcommand(1);
    for (const auto& op : operations()) {
        auto* e = eval->add_subcommand(op.name, op.op_name);
        add_param_flags(e, op, f);
        add_common_flags(e, f);
        e->add_flag("--with-oracle", f.with_oracle, "also run the brute-force oracle");
        e->callback([&, &op = op] { action = [&] { return cmd_eval(op, f, out); }; });

        auto* b = bench->add_subcommand(op.name, op.op_name);
        add_param_flags(b, op, f);
        add_common_flags(b, f);
        b->add_option("--repetitions", f.repetitions, "timed runs per point (default 5)");
        b->callback([&, &op = op] { action = [&] { return cmd_bench(op, f, out); }; });
    }

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "specfun, trig, zeta, bessel or all")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--grid", f.grid, "start:stop:count replacing the default x grid");
    verify->add_option("--threads", f.threads, "worker threads (default: all cores)");
    add_common_flags(verify, f);
    verify->callback([&] { action = [&] { return cmd_verify(suite, f, out, err); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace dseries::cli
