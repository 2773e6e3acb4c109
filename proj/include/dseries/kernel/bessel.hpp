// Bessel J_nu and spherical j_p kernels templated on the scalar type.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dseries/kernel/zeta.hpp"

namespace dseries::kernel {

/// J_nu(z) = sum_m (-1)^m (z/2)^{2m+nu} / (m! Gamma(m+nu+1)), nu > -1, z >= 0.
/// The terms grow until m ~ z/2, so large z needs a wide Real.
template <class Real>
Approx<Real> bessel_j_power_series(const Real& nu, const Real& z, const Real& rel_target) {
    using std::abs;
    using std::pow;
    if (z == Real(0)) return {nu == Real(0) ? Real(1) : Real(0), Real(0), 1};
    const Real h = z / Real(2);
    const Real h2 = h * h;
    Real t = pow(h, nu) * reciprocal_gamma(Real(nu + Real(1)));
    CompensatedSum<Real> sum(t);
    Real magnitude = abs(t);
    std::uint64_t m = 0;
    for (;;) {
        t *= -h2 / (Real(m + 1) * (Real(m + 1) + nu));
        ++m;
        sum += t;
        magnitude += abs(t);
        if (Real(m) > h && abs(t) <= rel_target * abs(sum.value())) break;
        if (Real(m) > h && abs(t) <= epsilon<Real>() * magnitude) break;
    }
    return {sum.value(), Real(2) * abs(t) + Real(4) * epsilon<Real>() * magnitude, m + 1};
}

/// Hankel's asymptotic expansion of J_nu(z) for z >> nu^2.
/// Summed until the terms stop decreasing or drop below epsilon; the first
/// omitted term is the error estimate.
template <class Real>
Approx<Real> bessel_j_hankel(const Real& nu, const Real& z) {
    using std::abs;
    using std::cos;
    using std::sin;
    using std::sqrt;
    const Real mu = Real(4) * nu * nu;
    CompensatedSum<Real> p, q;
    Real term = Real(1);  // a_k(nu) / z^k
    Real prev = abs(term);
    Real omitted = Real(0);
    std::uint64_t k = 0;
    for (;; ++k) {
        // a_k/z^k enters P for even k (sign (-1)^{k/2}) and Q for odd k (sign (-1)^{(k-1)/2}).
        const bool negative = (k / 2) % 2 == 1;
        const Real signed_term = negative ? Real(-term) : term;
        if (k % 2 == 0)
            p += signed_term;
        else
            q += signed_term;
        const Real odd = Real(2 * k + 1);
        const Real next = term * (mu - odd * odd) / (Real(k + 1) * Real(8) * z);
        if (abs(next) <= epsilon<Real>() || abs(next) >= prev || k > 200) {
            omitted = abs(next);
            break;
        }
        prev = abs(next);
        term = next;
    }
    const Real omega = z - (nu / Real(2) + Real(0.25)) * pi<Real>();
    const Real amp = sqrt(Real(2) / (pi<Real>() * z));
    const Real value = amp * (p.value() * cos(omega) - q.value() * sin(omega));
    return {value, amp * (omitted + Real(4) * epsilon<Real>()), k + 1};
}

/// j_p(z), z > 0. Upward recurrence where it is stable (z > p), otherwise
/// Miller's backward recurrence normalized to whichever of |j_0|, |j_1| is larger.
template <class Real>
Real spherical_j(unsigned p, const Real& z) {
    using std::abs;
    using std::cos;
    using std::sin;
    const Real s = sin(z), c = cos(z);
    const Real j0 = s / z;
    if (p == 0) return j0;
    const Real j1 = s / (z * z) - c / z;
    if (p == 1) return j1;
    if (z > Real(p)) {
        Real a = j0, b = j1;
        for (unsigned n = 1; n < p; ++n) {
            const Real next = Real(2 * n + 1) / z * b - a;
            a = b;
            b = next;
        }
        return b;
    }
    const unsigned start = p + 20 + static_cast<unsigned>(to_long(z));
    Real above = Real(0), cur = Real(1);
    Real at_p = Real(0), f0 = Real(0), f1 = Real(0);
    const Real big = Real(1e200);
    for (unsigned n = start; n-- > 0;) {
        // f_n = (2n+3)/z f_{n+1} - f_{n+2}
        const Real f = Real(2 * n + 3) / z * cur - above;
        above = cur;
        cur = f;
        if (n + 1 == p) at_p = above;
        if (n == 1) f1 = cur;
        if (n == 0) f0 = cur;
        if (abs(cur) > big) {
            cur /= big;
            above /= big;
            at_p /= big;
            f1 /= big;
            f0 /= big;
        }
    }
    return abs(j0) >= abs(j1) ? Real(at_p * j0 / f0) : Real(at_p * j1 / f1);
}

}  // namespace dseries::kernel
