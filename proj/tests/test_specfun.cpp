#include <doctest.h>

#include <cmath>

#include "dseries/specfun.hpp"

using namespace dseries;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

template <class F>
ErrorCode code_of(F f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    FAIL("no DomainError");
    return ErrorCode::invalid_config;
}

}  // namespace

TEST_CASE("gamma examples") {
    CHECK(dseries::gamma(1).value == doctest::Approx(1).epsilon(1e-15));
    CHECK(rel(dseries::gamma(0.5).value, std::sqrt(kPi)) < 1e-14);
    CHECK(rel(dseries::gamma(5).value, 24) < 1e-14);
    CHECK(rel(dseries::gamma(-0.5).value, -2 * std::sqrt(kPi)) < 1e-13);
    CHECK(rel(dseries::gamma(40.5).value, std::tgamma(40.5)) < 1e-13);
    CHECK(code_of([] { dseries::gamma(0); }) == ErrorCode::pole_at_nonpositive_integer);
    CHECK(code_of([] { dseries::gamma(-3); }) == ErrorCode::pole_at_nonpositive_integer);
}

TEST_CASE("log_gamma and digamma") {
    CHECK(std::abs(log_gamma(1).value) < 1e-15);
    CHECK(std::abs(log_gamma(2).value) < 1e-15);
    CHECK(rel(log_gamma(0.5).value, 0.5 * std::log(kPi)) < 1e-14);
    CHECK(code_of([] { log_gamma(0); }) == ErrorCode::nonpositive_argument);

    CHECK(std::abs(digamma(1).value + kEulerGamma) < 1e-14);
    CHECK(std::abs(digamma(0.5).value - (-kEulerGamma - 2 * std::log(2.0))) < 1e-14);
    CHECK(std::abs(digamma(2).value - (1 - kEulerGamma)) < 1e-14);
    CHECK(code_of([] { digamma(-2); }) == ErrorCode::pole_at_nonpositive_integer);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0).exact == 0);
    CHECK(harmonic(1).exact == 1);
    CHECK(harmonic(4).exact == rational(25, 12));
    CHECK(std::abs(harmonic_general(0).value) < 1e-15);
    CHECK(std::abs(harmonic_general(0.5).value - (2 - 2 * std::log(2.0))) < 1e-14);
    CHECK(std::abs(harmonic_general(3).value - 11.0 / 6) < 1e-14);
    for (unsigned n = 0; n <= 12; ++n) CHECK(std::abs(harmonic_general(n).value - harmonic(n).value) < 1e-13);
    CHECK(code_of([] { harmonic_general(-1); }) == ErrorCode::pole);
}

TEST_CASE("bernoulli numbers and polynomials") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == rational(-1, 2));
    CHECK(bernoulli_number(2) == rational(1, 6));
    CHECK(bernoulli_number(12) == rational(-691, 2730));
    CHECK(bernoulli_number(13) == 0);
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    for (unsigned n = 1; n <= 40; ++n) {
        rational s = 0;
        for (unsigned k = 0; k <= n; ++k) s += rational(binomial(n + 1, k)) * bernoulli_number(k);
        CHECK(s == 0);
    }
    for (double a : {0.0, 0.3, 1.0}) CHECK(std::abs(bernoulli_poly(1, a).value - (a - 0.5)) < 1e-15);
    CHECK(std::abs(bernoulli_poly(2, 0.25).value - (0.0625 - 0.25 + 1.0 / 6)) < 1e-15);
    CHECK(std::abs(bernoulli_poly(3, 0.5).value) < 1e-15);
}

TEST_CASE("riemann zeta") {
    CHECK(rel(riemann_zeta(2).value, kPi * kPi / 6) < 1e-15);
    CHECK(riemann_zeta(0).value == -0.5);
    CHECK(rel(riemann_zeta(3).value, 1.2020569031595942854) < 1e-14);
    CHECK(rel(riemann_zeta(-1).value, -1.0 / 12) < 1e-15);
    CHECK(rel(riemann_zeta(60).value, 1.0) < 1e-15);
    CHECK(code_of([] { riemann_zeta(1); }) == ErrorCode::pole_at_one);
}

TEST_CASE("zeta(1-2n) both paths") {
    CHECK(rel(zeta_1_minus_2n(1).value, -1.0 / 12) < 1e-14);
    CHECK(rel(zeta_1_minus_2n(2).value, 1.0 / 120) < 1e-14);
    CHECK(rel(zeta_1_minus_2n(3).value, -1.0 / 252) < 1e-14);
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(rel(zeta_1_minus_2n(n).value, hurwitz_zeta(HurwitzArg(1.0 - 2 * n, 1)).value) < 1e-12);
}

TEST_CASE("hurwitz zeta examples") {
    CHECK(rel(hurwitz_zeta(HurwitzArg(2, 1)).value, kPi * kPi / 6) < 1e-14);
    CHECK(rel(hurwitz_zeta(HurwitzArg(2, 0.5)).value, kPi * kPi / 2) < 1e-14);
    CHECK(rel(hurwitz_zeta(HurwitzArg(-1, 1)).value, -1.0 / 12) < 1e-15);
    CHECK(hurwitz_zeta(HurwitzArg(-1, 1)).method == Method::exact_bernoulli);
    CHECK(rel(hurwitz_zeta(HurwitzArg(-2.5, 0.7)).value, 0.0040023110606148412329) < 1e-12);
    CHECK(code_of([] { HurwitzArg(1, 0.5); }) == ErrorCode::pole_at_s_equal_one);
    CHECK_THROWS_AS(HurwitzArg(2, 0), DomainError);
    CHECK_THROWS_AS(HurwitzArg(2, 1.5), DomainError);
}

TEST_CASE("hurwitz zeta s-derivative examples") {
    CHECK(std::abs(hurwitz_zeta_sderiv(HurwitzArg(0, 1)).value + 0.5 * std::log(2 * kPi)) < 1e-13);
    CHECK(std::abs(hurwitz_zeta_sderiv(HurwitzArg(0, 0.5)).value + 0.5 * std::log(2.0)) < 1e-13);
    CHECK(rel(hurwitz_zeta_sderiv(HurwitzArg(-1, 1)).value, -0.16542114370045092921) < 1e-12);
    CHECK(rel(hurwitz_zeta_sderiv(HurwitzArg(-3, 0.3)).value, -0.012762444161095844732) < 1e-12);
}

TEST_CASE("EvalResult invariants") {
    for (double s : {-30.0, -7.5, -2.0, 0.5, 3.0, 12.0}) {
        for (double a : {0.1, 0.5, 1.0}) {
            for (const EvalResult& r : {hurwitz_zeta(HurwitzArg(s, a)), hurwitz_zeta_sderiv(HurwitzArg(s, a))}) {
                CHECK(std::isfinite(r.est_abs_error));
                CHECK(r.est_abs_error >= 0);
                if (r.method != Method::exact_bernoulli) CHECK(r.terms_used > 0);
            }
        }
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3, 0).value == 1);
    CHECK(pochhammer(2, 3).value == 24);
    CHECK(pochhammer(0.5, 2).value == 0.75);
}

TEST_CASE("property: zeta at nonpositive integers matches Bernoulli polynomials") {
    for (unsigned n = 0; n <= 10; ++n) {
        for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            const double want = -bernoulli_poly(n + 1, a).value / (n + 1);
            const double got = hurwitz_zeta(HurwitzArg(-double(n), a)).value;
            CHECK(std::abs(got - want) <= 1e-12 * std::max(std::abs(want), 1e-30));
        }
    }
}

TEST_CASE("property: Lerch identity") {
    for (double a = 0.05; a <= 1.0; a += 0.05)
        CHECK(std::abs(hurwitz_zeta_sderiv(HurwitzArg(0, a)).value - (log_gamma(a).value - 0.5 * std::log(2 * kPi))) <
              1e-10);
}

TEST_CASE("property: odd antisymmetry") {
    for (unsigned m = 1; m <= 5; ++m) {
        for (double a : {0.1, 0.2, 0.35, 0.5, 0.8}) {
            const double s = 2.0 - 2 * m;
            CHECK(std::abs(hurwitz_zeta(HurwitzArg(s, a)).value + hurwitz_zeta(HurwitzArg(s, 1 - a)).value) < 1e-12);
        }
    }
}

TEST_CASE("property: shift in a") {
    for (double s : {-7.0, -3.5, -1.5, 0.5, 2.5, 4.0}) {
        for (double a : {0.25, 0.5, 0.9}) {
            const double z = hurwitz_zeta(HurwitzArg(s, a)).value - std::pow(a, -s);
            const double z1 = detail::hurwitz_zeta_unclamped(s, a + 1).value;
            CHECK(std::abs(z - z1) <= 1e-11 * std::max(std::abs(z1), 1e-30));

            const double d = hurwitz_zeta_sderiv(HurwitzArg(s, a)).value + std::pow(a, -s) * std::log(a);
            const double d1 = detail::hurwitz_zeta_sderiv_unclamped(s, a + 1).value;
            CHECK(std::abs(d - d1) <= 1e-11 * std::max(std::abs(d1), 1e-30));
        }
    }
}

TEST_CASE("property: gamma reflection and half-integer values") {
    for (double s : {0.1, 0.3, 0.5, 0.7})
        CHECK(rel(dseries::gamma(1 - s).value * dseries::gamma(s).value * std::sin(kPi * s), kPi) < 1e-12);
    for (unsigned n = 0; n <= 8; ++n) {
        const double lhs = dseries::gamma(n + 0.5).value * std::ldexp(1.0, 2 * n) * factorial(n).convert_to<double>();
        CHECK(rel(lhs, factorial(2 * n).convert_to<double>() * std::sqrt(kPi)) < 1e-12);
    }
}

TEST_CASE("EMConfig changes work, not the value") {
    const HurwitzArg arg(2.5, 0.3);
    const EvalResult a = hurwitz_zeta(arg, EMConfig{10, 5});
    const EvalResult b = hurwitz_zeta(arg, EMConfig{60, 20});
    CHECK(rel(a.value, b.value) < 1e-13);
    CHECK(a.terms_used != b.terms_used);
}
