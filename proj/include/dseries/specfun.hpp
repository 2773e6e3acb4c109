// Scalar special functions with error estimates.
//
// Values are computed at 64 decimal digits and rounded, so est_abs_error is
// normally half an ulp of the result plus the kernel's truncation estimate.
#pragma once

#include "dseries/core.hpp"
#include "dseries/rational.hpp"

namespace dseries {

/// Validated (s, a) with 0 < a <= 1 and s != 1.
class HurwitzArg {
public:
    HurwitzArg(double s, double a);
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] double a() const noexcept { return a_; }

private:
    double s_;
    double a_;
};

/// Euler–Maclaurin head length N and number of Bernoulli corrections M.
/// N is raised to ceil(|s|) + M when smaller, then doubled up to 400 as needed.
struct EMConfig {
    int head_terms = 25;
    int correction_terms = 15;
};

struct HarmonicNumber {
    rational exact;
    double value;
};

EvalResult gamma(double x);
EvalResult log_gamma(double x);
EvalResult digamma(double x);
HarmonicNumber harmonic(unsigned n);
/// H_z = gamma + psi(z + 1) for z > -1.
EvalResult harmonic_general(double z);
EvalResult bernoulli_poly(unsigned n, double a);
EvalResult riemann_zeta(double s);
/// zeta(1-2n) through (-1)^n 2 Gamma(2n) zeta(2n) / (2pi)^2n.
EvalResult zeta_1_minus_2n(unsigned n);
EvalResult hurwitz_zeta(const HurwitzArg& arg, const EMConfig& cfg = {});
/// d/ds zeta(s, a).
EvalResult hurwitz_zeta_sderiv(const HurwitzArg& arg, const EMConfig& cfg = {});
EvalResult pochhammer(double q, unsigned n);

namespace detail {
// Same evaluators without the a <= 1 clamp. Only the shift-property tests use these.
EvalResult hurwitz_zeta_unclamped(double s, double a, const EMConfig& cfg = {});
EvalResult hurwitz_zeta_sderiv_unclamped(double s, double a, const EMConfig& cfg = {});
}  // namespace detail

}  // namespace dseries
