#include <doctest.h>

#include <cmath>

#include "dseries/oracle.hpp"
#include "dseries/zetasum.hpp"

using namespace dseries;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kGrid[] = {0.5, 1, 2, kPi, 4, 5.5};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

rational rising(const rational& q, unsigned n) {
    rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q + i;
    return r;
}

OracleConfig tight() {
    OracleConfig c;
    c.target_tol = 1e-15;
    return c;
}

}  // namespace

TEST_CASE("zeta_poch_base examples") {
    CHECK(rel(zeta_poch_base(1, kPi).value, 0.5 * std::log(kPi / 2)) < 1e-13);
    CHECK(rel(zeta_poch_base(2, kPi).value, 0.017752071166726491267) < 1e-12);
    const double x = 1e-3;
    const double lead = kPi * kPi / 6 / 2 * std::pow(x / (2 * kPi), 2);
    CHECK(rel(zeta_poch_base(1, x).value, lead) <= 1e-6);
}

TEST_CASE("zeta_poch_even examples") {
    CHECK(rel(zeta_poch_even(1, kPi).value, 0.072364942924700087072) < 1e-12);
    CHECK(rel(zeta_poch_even(2, 2).value, 0.0014024803554308447194) < 1e-12);
    const double x = 1e-3;
    const double lead = kPi * kPi / 6 / 6 * std::pow(x / (2 * kPi), 2);
    CHECK(rel(zeta_poch_even(1, x).value, lead) <= 1e-6);
}

TEST_CASE("zeta_poch_length dispatch") {
    CHECK(rel(zeta_poch_length(1, kPi).value, 0.5 * std::log(kPi / 2)) < 1e-13);
    CHECK(zeta_poch_length(2, kPi).value == zeta_poch_even(1, kPi).value);
    CHECK(zeta_poch_length(3, kPi).value == zeta_poch_base(2, kPi).value);
    // Deep cancellation: the closed form for q = 14 at small x cancels about 17 digits.
    CHECK(rel(zeta_poch_length(14, 0.5).value, 7.9665279593210596605e-15) < 1e-10);
}

TEST_CASE("heaviside_plan examples") {
    CHECK(heaviside_plan(1, 1).constants == std::vector<rational>{rational(1, 2)});
    CHECK(heaviside_plan(1, 2).constants == std::vector<rational>{rational(1, 4), rational(-1, 4)});
    CHECK(heaviside_plan(2, 1).constants == std::vector<rational>{rational(1, 2)});
    const PartialFractionPlan plan = heaviside_plan(2, 3);
    CHECK(plan.roots == std::vector<rational>{rational(-5, 2), rational(-7, 2), rational(-9, 2)});
}

TEST_CASE("zeta_poch_general examples") {
    CHECK(rel(zeta_poch_general(PochZetaQuery(1, 1, kPi)).value, 0.0071193888368005231527) < 1e-11);
    CHECK(rel(zeta_poch_general(PochZetaQuery(3, 2, kPi)).value, 2.0806531077336407982e-7) < 1e-10);
    const double x = 1e-3;
    const double lead = 2.0 / 120 * kPi * kPi / 6 * std::pow(x / (2 * kPi), 2);
    CHECK(rel(zeta_poch_general(PochZetaQuery(1, 1, x)).value, lead) <= 1e-6);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(zeta_poch_base(1, 0), DomainError);
    CHECK_THROWS_AS(zeta_poch_even(1, 2 * kPi), DomainError);
    CHECK_THROWS_AS(PochZetaQuery(0, 1, 1), DomainError);
    CHECK_THROWS_AS(PochZetaQuery(kMaxZetaOrder + 1, 1, 1), DomainError);
    CHECK_THROWS_AS(PochZetaQuery(1, 1, -1), DomainError);
}

TEST_CASE("property: Heaviside reconstruction is exact") {
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned p = 1; p <= 4; ++p) {
            const PartialFractionPlan plan = heaviside_plan(m, p);
            REQUIRE(plan.constants.size() == p);
            for (unsigned n = 0; n <= p; ++n) {
                CHECK(plan.reconstruct(rational(n)) == 1);
                // the same identity written with Q(n) = 2^p prod (n - a_j)
                rational s = 0;
                for (unsigned k = 0; k < p; ++k) {
                    rational prod = 1;
                    for (unsigned j = 0; j < p; ++j)
                        if (j != k) prod *= rational(n) - plan.roots[j];
                    s += plan.constants[k] * prod;
                }
                CHECK(s * rational(integer(1) << p) == 1);
            }
            // also off the integers
            CHECK(plan.reconstruct(rational(7, 3)) == 1);
        }
    }
}

TEST_CASE("property: c-table telescoping") {
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned k = 1; k <= 3; ++k) {
            const PartialFractionPlan plan = heaviside_plan(m, k);
            const auto& row = plan.inner[k - 1];
            REQUIRE(row.size() == 2 * k);
            CHECK(row[0] == 1);
            for (unsigned n = 1; n <= 3; ++n) {
                const rational two_n(2 * n);
                const rational lhs = 1 / (rising(two_n, 2 * m) * (two_n + 2 * m + 2 * k - 1));
                rational rhs = 0;
                for (unsigned j = 0; j < 2 * k; ++j) rhs += rational(row[j]) / rising(two_n, 2 * m + j + 1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("property: base and even forms against the oracle") {
    for (unsigned m = 1; m <= 4; ++m) {
        for (double x : kGrid) {
            const OracleReport ob = sum_zeta_poch(ZetaPochWeight::base(m), x, tight());
            const OracleReport oe = sum_zeta_poch(ZetaPochWeight::even(m), x, tight());
            CHECK(rel(zeta_poch_base(m, x).value, ob.value) <= 1e-9);
            CHECK(rel(zeta_poch_even(m, x).value, oe.value) <= 1e-9);
        }
    }
}

TEST_CASE("property: general form against the oracle") {
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned p = 1; p <= 3; ++p) {
            for (double x : kGrid) {
                const OracleReport o = sum_zeta_poch(ZetaPochWeight::general(m, p), x, tight());
                CHECK(rel(zeta_poch_general(PochZetaQuery(m, p, x)).value, o.value) <= 1e-8);
            }
        }
    }
}

TEST_CASE("general form needs p >= 1") {
    CHECK_THROWS_AS(zeta_poch_general(PochZetaQuery(1, 0, 1)), DomainError);
}
