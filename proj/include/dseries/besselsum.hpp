// Bessel evaluators and closed forms for sum_n J_nu(nx)/n^alpha and
// sum_n j_p(nx)/n^alpha on 0 < x < 2pi.
#pragma once

#include "dseries/core.hpp"

namespace dseries {

/// Largest z accepted by bessel_j_series.
inline constexpr double kSeriesReliableRange = 30.0;

/// J_nu(z) from the power series, nu > -1, 0 <= z <= 30.
EvalResult bessel_j_series(double nu, double z);

/// J_nu(z) from Poisson's integral by tanh-sinh quadrature, nu > -1/2, z >= 0.
EvalResult bessel_j_poisson(double nu, double z);

/// Spherical Bessel j_p(z), z > 0.
EvalResult spherical_j(unsigned p, double z);

/// sum J_nu(nx)/n^alpha for alpha > nu > -1/2, alpha - nu not an integer.
EvalResult bessel_sum_raw(double nu, double alpha, double x);

/// sum J_nu(nx)/n^{nu+2m}, nu > -2m - 1/2. Finite.
EvalResult bessel_sum_even(double nu, unsigned m, double x);

/// sum J_nu(nx)/n^{nu+2m-1}, nu > -1/2. The trailing k-series is summed directly.
EvalResult bessel_sum_odd(double nu, unsigned m, double x);

/// sum J_{1/2}(nx)/n^{2m-1/2} with the trailing series in closed form through S_{2m}.
EvalResult bessel_half_sum(unsigned m, double x);

/// Intermediate quantities of bessel_half_sum, exposed for testing.
struct HalfSumCheckpoints {
    double tail_series;      // sum_{k>=1} Gamma(2k) zeta(2k) (x/4pi)^{2k} / (Gamma(m+k) Gamma(m+k+1/2))
    double tail_closed;      // 2^{2m-1}/sqrt(pi) * S_{2m}(x), the same quantity
    double zeta_prime_form;  // (-1)^m 2(2pi)^{2m-1}/((2m-1)! sqrt(2pi x)) [zeta'(1-2m,1-a) - zeta'(1-2m,a)]
};
HalfSumCheckpoints bessel_half_checkpoints(unsigned m, double x);

/// sum j_p(nx)/n^alpha for alpha > p, alpha - p not an odd integer.
EvalResult spherical_sum_base(unsigned p, double alpha, double x);

/// sum j_p(nx)/n^{p+2m-1}, p >= 1, m >= 1, with the trailing zeta series reduced
/// to S_q values through heaviside_plan(m, p).
EvalResult spherical_sum_closed(unsigned p, unsigned m, double x);

/// sum j_2(nx)/n^7 as an explicit combination of zeta'(-7..-9, .):
///   8pi^7/(315x)[z'(-7,a)-z'(-7,1-a)] - 2pi^8/(105x^2)[z'(-8,a)+z'(-8,1-a)]
///   + 4pi^9/(945x^3)[z'(-9,a)-z'(-9,1-a)],  a = x/2pi.
EvalResult example_j2(double x);

/// The uncorrected variant with the polynomial, log and zeta(3), zeta(5) terms and halved
/// zeta' coefficients. It differs from example_j2 by -4x^6 G(x), G = zeta_poch_general(3, 2, x).
EvalResult example_j2_uncorrected(double x);

}  // namespace dseries
