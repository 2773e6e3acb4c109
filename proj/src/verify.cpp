#include "dseries/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include <boost/math/constants/constants.hpp>

#include "dseries/besselsum.hpp"
#include "dseries/oracle.hpp"
#include "dseries/specfun.hpp"
#include "dseries/trigsum.hpp"
#include "dseries/zetasum.hpp"
#include "wide.hpp"

namespace dseries {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kCatalan = 0.915965594177219015054603514932384110774;

enum class Metric { absolute, relative };

using Task = std::function<Check()>;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::int64_t ns() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
    }
};

/// Relative deviations divide by max(|reference|, floor), so structural zeros compare absolutely.
Check finish(RunRecord r, double reference, std::optional<double> tail, Metric metric, double tol,
             double floor = 1e-30) {
    r.attach_oracle(reference, tail);
    Check c;
    const double d = std::abs(r.value - reference);
    c.deviation = metric == Metric::absolute ? d : d / std::max(std::abs(reference), floor);
    c.tolerance = tol;
    c.passed = std::isfinite(r.value) && c.deviation <= tol;
    c.record = std::move(r);
    return c;
}

/// value() is the timed closed form, reference() the other route.
template <class Value, class Reference>
Task compare(std::string op, Params params, Metric metric, double tol, Value value, Reference reference,
             double floor = 1e-30) {
    return [=]() {
        RunRecord r;
        r.op_name = op;
        r.params = params;
        Timer t;
        const EvalResult v = value();
        r.elapsed_ns = t.ns();
        r.value = v.value;
        r.est_abs_error = v.est_abs_error;
        return finish(std::move(r), reference(), std::nullopt, metric, tol, floor);
    };
}

/// Closed form vs an oracle report; the allowed deviation is max(tol, tail_factor * tail_bound).
template <class Value, class Oracle>
Task against_oracle(std::string op, Params params, double tol, double tail_factor, Value value, Oracle oracle,
                    double oracle_scale = 1.0) {
    return [=]() {
        RunRecord r;
        r.op_name = op;
        r.params = params;
        Timer t;
        const EvalResult v = value();
        r.elapsed_ns = t.ns();
        r.value = v.value;
        r.est_abs_error = v.est_abs_error;
        const OracleReport o = oracle();
        const double tail = oracle_scale * o.tail_bound;
        const double allowed = tail_factor > 0 ? std::max(tol, tail_factor * tail) : tol;
        Check c = finish(std::move(r), oracle_scale * o.value, tail, Metric::absolute, allowed);
        if (tail_factor == 0 && !(tail <= tol)) c.passed = false;  // the oracle must be tighter than the check
        return c;
    };
}

struct Context {
    double tol_override = 0;
    bool has_tol = false;
    std::uint64_t max_terms = 10'000'000;
    std::optional<std::vector<double>> grid;

    double tol(double dflt) const { return has_tol ? tol_override : dflt; }
    std::vector<double> xs(std::vector<double> dflt) const { return grid ? *grid : dflt; }
    OracleConfig cfg(double target, Acceleration acc = Acceleration::none) const {
        OracleConfig c;
        c.max_terms = max_terms;
        c.target_tol = std::max(target, 1e-15);
        c.acceleration = acc;
        return c;
    }
};

Params P(std::initializer_list<std::pair<std::string, ParamValue>> l) { return Params(l); }

// ---------------------------------------------------------------- specfun

void specfun_suite(const Context& ctx, std::vector<Task>& out) {
    const double as[] = {0.1, 0.25, 0.5, 0.75, 1.0};
    for (unsigned n = 0; n <= 10; ++n) {
        for (double a : as) {
            out.push_back(compare(
                "hurwitz_zeta", P({{"check", "bernoulli_vs_euler_maclaurin"}, {"s", -double(n)}, {"a", a}}),
                Metric::relative, ctx.tol(1e-12), [=] { return hurwitz_zeta(HurwitzArg(-double(n), a)); },
                [=] {
                    using detail::W;
                    const auto em = kernel::euler_maclaurin<W>(W(-double(n)), W(a), 25, 31, kernel::epsilon<W>(), false);
                    return em.value.convert_to<double>();
                }));
        }
        for (double a : as) {
            out.push_back(compare("hurwitz_zeta", P({{"check", "bernoulli_polynomial"}, {"s", -double(n)}, {"a", a}}),
                                  Metric::relative, ctx.tol(1e-12),
                                  [=] { return hurwitz_zeta(HurwitzArg(-double(n), a)); },
                                  [=] { return -bernoulli_poly(n + 1, a).value / (n + 1); }));
        }
    }
    for (double a : as) {
        out.push_back(compare("hurwitz_zeta_sderiv", P({{"check", "lerch"}, {"s", 0.0}, {"a", a}}), Metric::absolute,
                              ctx.tol(1e-10), [=] { return hurwitz_zeta_sderiv(HurwitzArg(0.0, a)); },
                              [=] { return log_gamma(a).value - 0.5 * std::log(kTwoPi); }));
    }
    for (unsigned m = 1; m <= 5; ++m) {
        for (double a : {0.1, 0.25, 0.3, 0.6, 0.9}) {
            const double s = 2.0 - 2.0 * m;
            out.push_back(compare("hurwitz_zeta", P({{"check", "odd_antisymmetry"}, {"s", s}, {"a", a}}),
                                  Metric::absolute, ctx.tol(1e-12),
                                  [=] {
                                      const auto u = hurwitz_zeta(HurwitzArg(s, a));
                                      const auto v = hurwitz_zeta(HurwitzArg(s, 1 - a));
                                      return EvalResult{u.value + v.value, u.est_abs_error + v.est_abs_error,
                                                        u.method, u.terms_used + v.terms_used};
                                  },
                                  [] { return 0.0; }));
        }
    }
    for (double s : {-7.0, -3.5, -1.5, 0.5, 2.5, 4.0}) {
        for (double a : {0.25, 0.5, 0.9}) {
            out.push_back(compare("hurwitz_zeta", P({{"check", "shift"}, {"s", s}, {"a", a}}), Metric::relative,
                                  ctx.tol(1e-11),
                                  [=] {
                                      auto r = hurwitz_zeta(HurwitzArg(s, a));
                                      r.value -= std::pow(a, -s);
                                      return r;
                                  },
                                  [=] { return detail::hurwitz_zeta_unclamped(s, a + 1).value; }));
            out.push_back(compare("hurwitz_zeta_sderiv", P({{"check", "shift"}, {"s", s}, {"a", a}}),
                                  Metric::relative, ctx.tol(1e-11),
                                  [=] {
                                      auto r = hurwitz_zeta_sderiv(HurwitzArg(s, a));
                                      r.value += std::pow(a, -s) * std::log(a);
                                      return r;
                                  },
                                  [=] { return detail::hurwitz_zeta_sderiv_unclamped(s, a + 1).value; }));
        }
    }
    for (double s : {0.1, 0.3, 0.5, 0.7}) {
        out.push_back(compare("gamma", P({{"check", "reflection"}, {"s", s}}), Metric::relative, ctx.tol(1e-12),
                              [=] {
                                  const auto g1 = dseries::gamma(1 - s), g2 = dseries::gamma(s);
                                  return EvalResult{g1.value * g2.value * std::sin(kPi * s), 0.0, g1.method, 0};
                              },
                              [] { return kPi; }));
    }
    for (unsigned n = 0; n <= 8; ++n) {
        out.push_back(compare("gamma", P({{"check", "half_integer"}, {"n", double(n)}}), Metric::relative,
                              ctx.tol(1e-12),
                              [=] {
                                  auto g = dseries::gamma(n + 0.5);
                                  g.value *= std::ldexp(1.0, 2 * int(n)) * factorial(n).convert_to<double>();
                                  return g;
                              },
                              [=] { return factorial(2 * n).convert_to<double>() * std::sqrt(kPi); }));
    }
    for (unsigned n = 1; n <= 10; ++n) {
        out.push_back(compare("zeta_1_minus_2n", P({{"check", "dual_path"}, {"n", double(n)}}), Metric::relative,
                              ctx.tol(1e-12), [=] { return zeta_1_minus_2n(n); },
                              [=] { return hurwitz_zeta(HurwitzArg(1.0 - 2.0 * n, 1.0)).value; }));
    }
}

// ---------------------------------------------------------------- trig

void trig_suite(const Context& ctx, std::vector<Task>& out) {
    const auto xs = ctx.xs({kPi / 6, kPi / 3, kPi / 2, 2.0, kPi, 4.0, 5.5});
    const double tol = ctx.tol(1e-7);
    for (double s : {1.5, 2.5, 3.5}) {
        for (double x : xs) {
            for (double y : {0.0, 1.0, kPi / 2}) {
                for (TrigKind kind : {TrigKind::sine, TrigKind::cosine}) {
                    out.push_back(against_oracle(
                        "trig_series_closed",
                        P({{"s", s}, {"x", x}, {"y", y}, {"kind", std::string(to_string(kind))}}), tol, 3.0,
                        [=] { return trig_series_closed(TrigQuery(s, x, y, kind)); },
                        [=] { return sum_trig(kind, s, x, y, ctx.cfg(tol / 3)); }));
                }
            }
        }
    }
    for (unsigned m = 1; m <= 3; ++m) {
        const double t = ctx.tol(m == 1 ? 1e-6 : 1e-8);
        for (double x : xs) {
            const Acceleration acc = m == 1 ? Acceleration::aitken : Acceleration::none;
            out.push_back(against_oracle("cos_odd_series", P({{"m", double(m)}, {"x", x}}), t, 0.0,
                                         [=] { return cos_odd_series(m, x); },
                                         [=] { return sum_trig(TrigKind::cosine, 2.0 * m - 1, x, 0.0, ctx.cfg(t / 3, acc)); }));
        }
    }
    for (double x : xs) {
        out.push_back(compare("cos_odd_series", P({{"check", "log_sine"}, {"m", 1.0}, {"x", x}}), Metric::absolute,
                              ctx.tol(1e-9), [=] { return cos_odd_series(1, x); },
                              [=] { return -std::log(2 * std::sin(x / 2)); }));
    }
    const double zeta3 = riemann_zeta(3.0).value;
    struct Anchor {
        unsigned m;
        double x, truth;
        const char* name;
    };
    for (const Anchor& a : {Anchor{1, kPi, -std::log(2.0), "-log2"}, Anchor{1, kPi / 2, -0.5 * std::log(2.0), "-log2/2"},
                            Anchor{2, kPi, -0.75 * zeta3, "-3zeta(3)/4"}}) {
        out.push_back(compare("cos_odd_series", P({{"check", std::string("anchor ") + a.name}, {"m", double(a.m)}, {"x", a.x}}),
                              Metric::absolute, ctx.tol(1e-10), [=] { return cos_odd_series(a.m, a.x); },
                              [=] { return a.truth; }));
    }
    for (double s : {1.5, 2.5, 3.5}) {
        for (double x : xs) {
            for (double y : {0.0, 1.0, kPi / 2}) {
                out.push_back(compare("trig_series_closed", P({{"check", "phase"}, {"s", s}, {"x", x}, {"y", y}}),
                                      Metric::relative, ctx.tol(1e-12),
                                      [=] { return trig_series_closed(TrigQuery(s, x, y, TrigKind::sine)); },
                                      [=] { return trig_series_closed(TrigQuery(s, x, y - kPi / 2, TrigKind::cosine)).value; },
                                      1.0));
            }
        }
    }
}

// ---------------------------------------------------------------- zeta

void zeta_suite(const Context& ctx, std::vector<Task>& out) {
    const auto xs = ctx.xs({0.5, 1.0, 2.0, kPi, 4.0, 5.5});
    const auto geometric = ctx.cfg(1e-15);
    auto relative_to_oracle = [&](std::string op, Params params, double tol, auto value, ZetaPochWeight w, double x) {
        return [=]() {
            RunRecord r;
        r.op_name = op;
        r.params = params;
            Timer t;
            const EvalResult v = value();
            r.elapsed_ns = t.ns();
            r.value = v.value;
            r.est_abs_error = v.est_abs_error;
            const OracleReport o = sum_zeta_poch(w, x, geometric);
            Check c = finish(std::move(r), o.value, o.tail_bound, Metric::relative, tol);
            if (o.tail_bound > tol * std::abs(o.value)) c.passed = false;
            return c;
        };
    };
    for (unsigned m = 1; m <= 4; ++m) {
        for (double x : xs) {
            out.push_back(relative_to_oracle("zeta_poch_base", P({{"m", double(m)}, {"x", x}}), ctx.tol(1e-9),
                                             [=] { return zeta_poch_base(m, x); }, ZetaPochWeight::base(m), x));
            out.push_back(relative_to_oracle("zeta_poch_even", P({{"m", double(m)}, {"x", x}}), ctx.tol(1e-9),
                                             [=] { return zeta_poch_even(m, x); }, ZetaPochWeight::even(m), x));
        }
    }
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned p = 1; p <= 3; ++p) {
            for (double x : xs) {
                out.push_back(relative_to_oracle("zeta_poch_general", P({{"m", double(m)}, {"p", double(p)}, {"x", x}}),
                                                 ctx.tol(1e-8), [=] { return zeta_poch_general(PochZetaQuery(m, p, x)); },
                                                 ZetaPochWeight::general(m, p), x));
            }
        }
    }
    // Exact rational identities: deviation is 0 or 1.
    auto exact = [](std::string op, Params params, std::function<bool()> holds) -> Task {
        return [=]() {
            RunRecord r;
        r.op_name = op;
        r.params = params;
            Timer t;
            const bool ok = holds();
            r.elapsed_ns = t.ns();
            r.value = ok ? 1.0 : 0.0;
            return finish(std::move(r), 1.0, std::nullopt, Metric::absolute, 0.0);
        };
    };
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned p = 1; p <= 4; ++p) {
            out.push_back(exact("heaviside_plan", P({{"check", "reconstruction"}, {"m", double(m)}, {"p", double(p)}}), [=] {
                const auto plan = heaviside_plan(m, p);
                for (unsigned n = 0; n <= p; ++n)
                    if (plan.reconstruct(rational(n)) != rational(1)) return false;
                return true;
            }));
        }
    }
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned k = 1; k <= 3; ++k) {
            out.push_back(exact("heaviside_plan", P({{"check", "c_table"}, {"m", double(m)}, {"k", double(k)}}), [=] {
                auto poch = [](unsigned a, unsigned len) {
                    integer r = 1;
                    for (unsigned i = 0; i < len; ++i) r *= a + i;
                    return r;
                };
                for (unsigned n = 1; n <= 3; ++n) {
                    const rational lhs(integer(1), poch(2 * n, 2 * m) * integer(2 * n + 2 * m + 2 * k - 1));
                    rational rhs = 0;
                    integer c = 1;
                    for (unsigned j = 0; j <= 2 * k - 1; ++j) {
                        if (j > 0) c *= -integer(2 * k - j);
                        rhs += rational(c, poch(2 * n, 2 * m + j + 1));
                    }
                    if (lhs != rhs) return false;
                }
                return true;
            }));
        }
    }
}

// ---------------------------------------------------------------- bessel

void bessel_suite(const Context& ctx, std::vector<Task>& out) {
    const auto xs = ctx.xs({0.5, 1.0, 2.0, kPi, 4.0, 5.5});
    for (double nu : {0.0, 0.5, 1.0, 2.5}) {
        for (double z : {0.1, 1.0, 5.0, 10.0}) {
            out.push_back(compare("bessel_j_series", P({{"check", "series_vs_poisson"}, {"nu", nu}, {"z", z}}),
                                  Metric::absolute, ctx.tol(1e-10), [=] { return bessel_j_series(nu, z); },
                                  [=] { return bessel_j_poisson(nu, z).value; }));
        }
    }
    for (unsigned p = 0; p <= 6; ++p) {
        for (double z : {0.5, 1.0, 5.0}) {
            out.push_back(compare("spherical_j", P({{"check", "linkage"}, {"p", double(p)}, {"z", z}}), Metric::absolute,
                                  ctx.tol(1e-10), [=] { return spherical_j(p, z); },
                                  [=] { return std::sqrt(kPi / (2 * z)) * bessel_j_series(p + 0.5, z).value; }));
        }
    }

    const double t_exact = ctx.tol(1e-8);
    const double t_capped = ctx.tol(1e-6);
    for (unsigned m = 1; m <= 3; ++m) {
        for (double x : xs) {
            out.push_back(against_oracle(
                "bessel_half_sum", P({{"check", "trig_reduction"}, {"m", double(m)}, {"x", x}}), t_exact, 0.0,
                [=] {
                    auto r = bessel_half_sum(m, x);
                    r.value *= std::sqrt(kPi * x / 2);
                    return r;
                },
                [=] { return sum_trig(TrigKind::sine, 2.0 * m, x, 0.0, ctx.cfg(t_exact / 10)); }));
            out.push_back(against_oracle(
                "bessel_sum_even", P({{"check", "trig_ladder"}, {"nu", 0.5}, {"m", double(m)}, {"x", x}}), t_exact, 0.0,
                [=] { return bessel_sum_even(0.5, m, x); },
                [=] { return sum_trig(TrigKind::sine, 2.0 * m + 1, x, 0.0, ctx.cfg(t_exact / 10)); },
                std::sqrt(2 / (kPi * x))));
        }
    }

    for (unsigned m = 1; m <= 3; ++m) {
        auto zero = [&](std::string op, Params params, std::function<EvalResult()> f) {
            out.push_back(compare(op, params, Metric::absolute, ctx.tol(1e-9), f, [] { return 0.0; }));
        };
        zero("bessel_sum_even", P({{"check", "termwise_zero"}, {"nu", 0.5}, {"m", double(m)}, {"x", kPi}}),
             [=] { return bessel_sum_even(0.5, m, kPi); });
        zero("bessel_sum_odd", P({{"check", "termwise_zero"}, {"nu", 0.5}, {"m", double(m)}, {"x", kPi}}),
             [=] { return bessel_sum_odd(0.5, m, kPi); });
        zero("bessel_half_sum", P({{"check", "termwise_zero"}, {"m", double(m)}, {"x", kPi}}),
             [=] { return bessel_half_sum(m, kPi); });
        const double alpha = 1.7 + m;
        zero("bessel_sum_raw", P({{"check", "termwise_zero"}, {"nu", 0.5}, {"alpha", alpha}, {"x", kPi}}),
             [=] { return bessel_sum_raw(0.5, alpha, kPi); });
        zero("spherical_sum_base", P({{"check", "termwise_zero"}, {"p", 0.0}, {"alpha", alpha}, {"x", kPi}}),
             [=] { return spherical_sum_base(0, alpha, kPi); });
    }

    {
        const auto alt = [&] {
            OracleConfig c = ctx.cfg(1e-12);
            c.tail_policy = TailPolicy::alternating_bound;
            return sum_trig(TrigKind::sine, 2.0, kPi / 2, 0.0, c);
        };
        const double tol = ctx.tol(1e-9);
        out.push_back(against_oracle("bessel_sum_odd", P({{"check", "catalan"}, {"nu", 0.5}, {"m", 1.0}, {"x", kPi / 2}}),
                                     tol, 0.0, [] { return bessel_sum_odd(0.5, 1, kPi / 2); }, alt, 2 / kPi));
        out.push_back(against_oracle("bessel_half_sum", P({{"check", "catalan"}, {"m", 1.0}, {"x", kPi / 2}}), tol, 0.0,
                                     [] { return bessel_half_sum(1, kPi / 2); }, alt, 2 / kPi));
        out.push_back(compare("bessel_sum_odd", P({{"check", "catalan_constant"}, {"nu", 0.5}, {"m", 1.0}, {"x", kPi / 2}}),
                              Metric::absolute, tol, [] { return bessel_sum_odd(0.5, 1, kPi / 2); },
                              [] { return 2 / kPi * kCatalan; }));
        out.push_back(compare("bessel_sum_even", P({{"check", "pi^2/16"}, {"nu", 0.5}, {"m", 1.0}, {"x", kPi / 2}}),
                              Metric::absolute, tol, [] { return bessel_sum_even(0.5, 1, kPi / 2); },
                              [] { return kPi * kPi / 16; }));
    }

    auto is_half = [](double nu) { return std::fmod(2 * nu, 2.0) == 1.0; };
    auto sweep = [&](std::string op, Params params, double tol, std::function<EvalResult()> f, BesselKind kind,
                     double exponent, double x) {
        out.push_back(against_oracle(op, params, tol, 0.0, f,
                                     [=] { return sum_bessel(kind, exponent, x, ctx.cfg(tol / 10)); }));
    };
    for (double x : xs) {
        for (auto [nu, alpha] : {std::pair{0.3, 2.1}, {1.2, 3.5}, {0.0, 1.7}, {0.5, 2.7}}) {
            sweep("bessel_sum_raw", P({{"nu", nu}, {"alpha", alpha}, {"x", x}}), is_half(nu) ? t_exact : t_capped,
                  [=] { return bessel_sum_raw(nu, alpha, x); }, BesselKind::J(nu), alpha, x);
        }
        for (double nu : {0.0, 0.3, 1.0, 0.5}) {
            for (unsigned m = 1; m <= 2; ++m) {
                const double t = is_half(nu) ? t_exact : t_capped;
                sweep("bessel_sum_even", P({{"nu", nu}, {"m", double(m)}, {"x", x}}), t,
                      [=] { return bessel_sum_even(nu, m, x); }, BesselKind::J(nu), nu + 2 * m, x);
                sweep("bessel_sum_odd", P({{"nu", nu}, {"m", double(m)}, {"x", x}}), t,
                      [=] { return bessel_sum_odd(nu, m, x); }, BesselKind::J(nu), nu + 2 * m - 1, x);
            }
        }
        for (unsigned m = 1; m <= 3; ++m) {
            sweep("bessel_half_sum", P({{"m", double(m)}, {"x", x}}), t_exact, [=] { return bessel_half_sum(m, x); },
                  BesselKind::J(0.5), 2 * m - 0.5, x);
        }
        for (auto [p, alpha] : {std::pair{0u, 2.5}, {1u, 3.2}, {2u, 3.7}}) {
            sweep("spherical_sum_base", P({{"p", double(p)}, {"alpha", alpha}, {"x", x}}), t_exact,
                  [=] { return spherical_sum_base(p, alpha, x); }, BesselKind::spherical(p), alpha, x);
        }
        for (unsigned p = 1; p <= 3; ++p) {
            for (unsigned m = 1; m <= 3; ++m) {
                sweep("spherical_sum_closed", P({{"p", double(p)}, {"m", double(m)}, {"x", x}}), t_exact,
                      [=] { return spherical_sum_closed(p, m, x); }, BesselKind::spherical(p), p + 2.0 * m - 1, x);
            }
        }
    }

    for (double x : {1.0, 2.0, kPi, 4.0}) {
        const double tol = ctx.tol(1e-9);
        out.push_back(compare("example_j2", P({{"check", "vs_spherical_sum_closed"}, {"x", x}}), Metric::absolute, tol,
                              [=] { return example_j2(x); }, [=] { return spherical_sum_closed(2, 3, x).value; }));
        out.push_back(against_oracle("example_j2", P({{"check", "vs_oracle"}, {"x", x}}), tol, 0.0,
                                     [=] { return example_j2(x); },
                                     [=] { return sum_bessel(BesselKind::spherical(2), 7.0, x, ctx.cfg(tol / 10)); }));
        out.push_back(compare("example_j2_uncorrected", P({{"check", "residual -4x^6 G"}, {"x", x}}), Metric::relative,
                              tol,
                              [=] {
                                  auto r = example_j2_uncorrected(x);
                                  r.value -= example_j2(x).value;
                                  return r;
                              },
                              [=] { return -4 * std::pow(x, 6) * zeta_poch_general(PochZetaQuery(3, 2, x)).value; }));
    }
}

void collect(const std::string& name, const Context& ctx, std::vector<Task>& out) {
    if (name == "specfun") return specfun_suite(ctx, out);
    if (name == "trig") return trig_suite(ctx, out);
    if (name == "zeta") return zeta_suite(ctx, out);
    if (name == "bessel") return bessel_suite(ctx, out);
    if (name == "all") {
        for (const char* s : {"specfun", "trig", "zeta", "bessel"}) collect(s, ctx, out);
        return;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"specfun", "trig", "zeta", "bessel", "all"};
    return names;
}

std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("grid must be start:stop:count, got " + spec);
    double start, stop;
    long count;
    try {
        std::size_t used = 0;
        start = std::stod(spec.substr(0, c1), &used);
        if (used != c1) throw std::invalid_argument("");
        stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1), &used);
        if (used != c2 - c1 - 1) throw std::invalid_argument("");
        count = std::stol(spec.substr(c2 + 1), &used);
        if (used != spec.size() - c2 - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must be start:stop:count, got " + spec);
    }
    if (count < 1 || !std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("grid count must be >= 1 and bounds finite, got " + spec);
    std::vector<double> xs;
    for (long i = 0; i < count; ++i)
        xs.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
    if (count > 1) xs.back() = stop;
    return xs;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    Context ctx;
    if (opts.tol) {
        ctx.has_tol = true;
        ctx.tol_override = *opts.tol;
    }
    if (opts.max_terms) ctx.max_terms = *opts.max_terms;
    ctx.grid = opts.grid;
    OracleConfig probe;
    probe.max_terms = ctx.max_terms;
    probe.validate();

    std::vector<Task> tasks;
    collect(name, ctx, tasks);

    SuiteResult result;
    result.checks.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                result.checks[i] = tasks[i]();
            } catch (const DomainError& e) {
                Check c;
                c.record.op_name = "error";
                c.record.params = {{"message", std::string(e.what())}};
                c.record.value = std::nan("");
                c.passed = false;
                result.checks[i] = std::move(c);
            }
        }
    };
    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& c : result.checks) {
        if (c.passed) ++result.passed;
        if (c.record.rel_diff) result.max_rel_diff = std::max(result.max_rel_diff, *c.record.rel_diff);
    }
    return result;
}

}  // namespace dseries
