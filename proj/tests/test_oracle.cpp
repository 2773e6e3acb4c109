#include <doctest.h>

#include <cmath>
#include <cstring>

#include "dseries/oracle.hpp"

using namespace dseries;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kCatalan = 0.915965594177219015054603514932384110774;
constexpr double kZeta3 = 1.2020569031595942854;

bool same(const OracleReport& a, const OracleReport& b) {
    return std::memcmp(&a.value, &b.value, sizeof(double)) == 0 &&
           std::memcmp(&a.tail_bound, &b.tail_bound, sizeof(double)) == 0 && a.terms_used == b.terms_used &&
           a.converged == b.converged;
}

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

TEST_CASE("sum_trig examples") {
    const OracleReport a = sum_trig(TrigKind::cosine, 3, kPi, 0);
    CHECK(std::abs(a.value + 0.75 * kZeta3) <= 3 * a.tail_bound + 1e-15);

    OracleConfig alt;
    alt.acceleration = Acceleration::euler_alternating;
    alt.target_tol = 1e-12;
    const OracleReport g = sum_trig(TrigKind::sine, 2, kPi / 2, 0, alt);
    CHECK(g.converged);
    CHECK(std::abs(g.value - kCatalan) <= 3 * g.tail_bound);
    CHECK(std::abs(g.value - kCatalan) < 1e-11);

    const OracleReport z = sum_trig(TrigKind::sine, 2.5, kPi, 0);
    CHECK(std::abs(z.value) < 1e-12);
}

TEST_CASE("sum_trig with Aitken") {
    OracleConfig cfg;
    cfg.acceleration = Acceleration::aitken;
    cfg.max_terms = 10'000'000;
    cfg.target_tol = 1e-9;
    const OracleReport r = sum_trig(TrigKind::cosine, 1.5, kPi / 2, 0, cfg);
    CHECK(std::abs(r.value + 0.27052032485866811315) <= std::max(1e-8, r.tail_bound));
}

TEST_CASE("sum_zeta_poch examples") {
    OracleConfig cfg;
    cfg.target_tol = 1e-15;
    const OracleReport b = sum_zeta_poch(ZetaPochWeight::base(1), kPi, cfg);
    CHECK(b.converged);
    CHECK(std::abs(b.value - 0.5 * std::log(kPi / 2)) < 1e-15);
    const OracleReport g = sum_zeta_poch(ZetaPochWeight::general(1, 1), kPi, cfg);
    CHECK(std::abs(g.value - 0.0071193888368005231527) < 1e-16);
    const double x = 1e-3;
    const OracleReport s = sum_zeta_poch(ZetaPochWeight::base(2), x, cfg);
    const double lead = kPi * kPi / 6 / 24 * std::pow(x / (2 * kPi), 2);
    CHECK(std::abs(s.value / lead - 1) < 1e-6);
    CHECK(ZetaPochWeight::length(5).kind == ZetaPochWeight::Kind::base);
    CHECK(ZetaPochWeight::length(6).kind == ZetaPochWeight::Kind::even);
}

TEST_CASE("sum_bessel examples") {
    const OracleReport z = sum_bessel(BesselKind::J(0.5), 2.5, kPi);
    CHECK(std::abs(z.value) < 1e-12);

    OracleConfig alt;
    alt.acceleration = Acceleration::euler_alternating;
    alt.target_tol = 1e-12;
    const OracleReport eta = sum_bessel(BesselKind::spherical(1), 2.5, kPi, alt);
    // j_1(n pi)/n^{5/2} = (-1)^{n+1}/(pi n^{7/2})
    const double eta72 = 0.92755357777394803511;
    CHECK(std::abs(eta.value - eta72 / kPi) <= 3 * eta.tail_bound);

    OracleConfig cfg;
    cfg.target_tol = 1e-13;
    const OracleReport ex = sum_bessel(BesselKind::spherical(2), 7, kPi, cfg);
    CHECK(ex.tail_bound < 1e-12);
    CHECK(std::abs(ex.value - 0.30338428684074933182) <= 3 * ex.tail_bound);
}

TEST_CASE("config validation and inapplicable policies") {
    OracleConfig bad;
    bad.max_terms = kMaxOracleTerms + 1;
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::invalid_config);
    bad.max_terms = 10;
    bad.target_tol = 1e-16;
    CHECK(code_of([&] { bad.validate(); }) == ErrorCode::invalid_config);

    OracleConfig geo;
    geo.tail_policy = TailPolicy::geometric_bound;
    CHECK(code_of([&] { sum_trig(TrigKind::sine, 2.5, 1, 0, geo); }) == ErrorCode::tail_policy_not_applicable);
    CHECK(code_of([] { sum_trig(TrigKind::sine, 2.5, 0, 0); }) == ErrorCode::x_out_of_domain);

    OracleConfig alt;
    alt.acceleration = Acceleration::euler_alternating;
    CHECK(code_of([&] { sum_trig(TrigKind::sine, 2.5, 1, 0, alt); }) == ErrorCode::not_alternating);
}

TEST_CASE("property: converged implies tail within target") {
    OracleConfig cfg;
    cfg.target_tol = 1e-8;
    for (double x : {0.5, 2.0, 4.0}) {
        for (const OracleReport& r : {sum_trig(TrigKind::cosine, 2.5, x, 1), sum_zeta_poch(ZetaPochWeight::even(2), x, cfg),
                                      sum_bessel(BesselKind::J(0.5), 3.5, x, cfg)}) {
            CHECK(r.terms_used > 0);
            CHECK(r.tail_bound >= 0);
            if (r.converged) CHECK(r.tail_bound <= cfg.target_tol + 1e-10);
        }
    }
}

TEST_CASE("property: monotone budget") {
    OracleConfig cfg;
    cfg.target_tol = 1e-15;
    double prev_trig = INFINITY, prev_bessel = INFINITY, prev_zeta = INFINITY;
    for (std::uint64_t n : {10u, 100u, 1000u, 10000u, 100000u}) {
        cfg.max_terms = n;
        const OracleReport t = sum_trig(TrigKind::sine, 1.5, 2, 0.5, cfg);
        const OracleReport b = sum_bessel(BesselKind::J(0.3), 2.1, 2, cfg);
        const OracleReport z = sum_zeta_poch(ZetaPochWeight::base(2), 5.5, cfg);
        CHECK(t.tail_bound <= prev_trig);
        CHECK(b.tail_bound <= prev_bessel);
        CHECK(z.tail_bound <= prev_zeta);
        prev_trig = t.tail_bound;
        prev_bessel = b.tail_bound;
        prev_zeta = z.tail_bound;
    }
}

TEST_CASE("property: determinism") {
    OracleConfig cfg;
    cfg.max_terms = 50000;
    CHECK(same(sum_trig(TrigKind::cosine, 1.5, 1, 0.2, cfg), sum_trig(TrigKind::cosine, 1.5, 1, 0.2, cfg)));
    CHECK(same(sum_bessel(BesselKind::J(0.3), 2.1, 2, cfg), sum_bessel(BesselKind::J(0.3), 2.1, 2, cfg)));
    CHECK(same(sum_zeta_poch(ZetaPochWeight::general(2, 3), 4, cfg),
               sum_zeta_poch(ZetaPochWeight::general(2, 3), 4, cfg)));
}

TEST_CASE("property: tail honesty on known values") {
    struct Known {
        OracleReport r;
        double truth;
    };
    OracleConfig alt;
    alt.acceleration = Acceleration::euler_alternating;
    OracleConfig loose;
    loose.max_terms = 2000;
    const Known cases[] = {
        {sum_trig(TrigKind::cosine, 3, kPi, 0, loose), -0.75 * kZeta3},
        {sum_trig(TrigKind::sine, 2, kPi / 2, 0, loose), kCatalan},
        {sum_trig(TrigKind::sine, 2, kPi / 2, 0, alt), kCatalan},
        {sum_trig(TrigKind::cosine, 1.5, kPi / 2, 0, loose), -0.27052032485866811315},
        {sum_trig(TrigKind::cosine, 2, 1, 0, loose), kPi * kPi / 6 - kPi / 2 + 0.25},
        {sum_bessel(BesselKind::J(0.5), 2.5, kPi / 2, loose), kPi * kPi / 16},
        {sum_bessel(BesselKind::J(0.3), 2.1, 2, loose), 0.34924238846076311349},
        {sum_bessel(BesselKind::spherical(1), 2, 2, loose), 0.44934221527609660492},
        {sum_zeta_poch(ZetaPochWeight::base(1), kPi, loose), 0.5 * std::log(kPi / 2)},
    };
    for (const Known& k : cases) CHECK(std::abs(k.r.value - k.truth) <= 3 * k.r.tail_bound + 1e-15);
}

TEST_CASE("oracle_bessel_j") {
    CHECK(std::abs(oracle_bessel_j(1, 1) - 0.44005058574493351596) < 1e-14);
    CHECK(std::abs(oracle_bessel_j(0.5, kPi / 2) - 2 / kPi) < 1e-15);
    CHECK(std::abs(oracle_bessel_j(0, 100) - 0.019985850304223122424) < 1e-12);
}
