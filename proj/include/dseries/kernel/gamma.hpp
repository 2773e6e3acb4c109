// Gamma-family kernels templated on the scalar type.
//
// All functions work for double and for dseries::wide_real; accuracy tracks
// std::numeric_limits<Real>::epsilon(). Arguments are assumed validated by the
// caller (the public API in specfun.hpp does that).
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/math/constants/constants.hpp>

#include "dseries/core.hpp"
#include "dseries/rational.hpp"

namespace dseries::kernel {

template <class Real>
Real epsilon() {
    return std::numeric_limits<Real>::epsilon();
}

template <class Real>
Real pi() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
Real euler_gamma() {
    return boost::math::constants::euler<Real>();
}

template <class Real>
Real nearest_integer(const Real& x) {
    using std::floor;
    return floor(x + Real(0.5));
}

template <class Real>
long to_long(const Real& x) {
    if constexpr (std::is_floating_point_v<Real>)
        return static_cast<long>(x);
    else
        return x.template convert_to<long>();
}

template <class Real>
bool is_integer(const Real& x) {
    return x == nearest_integer(x);
}

template <class Real>
bool is_odd_integer_valued(const Real& n) {
    using std::fmod;
    using std::abs;
    return abs(fmod(n, Real(2))) == Real(1);
}

/// sin(pi x) with the integer part removed exactly, so sin_pi(n) == 0.
template <class Real>
Real sin_pi(const Real& x) {
    using std::sin;
    const Real n = nearest_integer(x);
    const Real r = x - n;
    const Real v = sin(pi<Real>() * r);
    return is_odd_integer_valued(n) ? Real(-v) : v;
}

template <class Real>
Real cos_pi(const Real& x) {
    using std::cos;
    const Real n = nearest_integer(x);
    const Real r = x - n;
    const Real v = cos(pi<Real>() * r);
    return is_odd_integer_valued(n) ? Real(-v) : v;
}

/// Argument above which the Stirling/asymptotic series reach full precision.
template <class Real>
int asymptotic_threshold() {
    return std::max(12, std::numeric_limits<Real>::digits10);
}

// (z - 1/2) log z - z + log sqrt(2 pi) + sum B_2k / (2k (2k-1) z^(2k-1)), z large.
template <class Real>
Real log_gamma_stirling(const Real& z) {
    using std::abs;
    using std::log;
    const auto& b = bernoulli_table<Real>();
    Real result = (z - Real(0.5)) * log(z) - z + boost::math::constants::log_root_two_pi<Real>();
    const Real z2 = z * z;
    Real zpow = z;
    for (int k = 1; k <= 31; ++k) {
        const Real term = b[2 * k] / (Real(2 * k) * Real(2 * k - 1) * zpow);
        result += term;
        if (abs(term) <= epsilon<Real>() * abs(result)) break;
        zpow *= z2;
    }
    return result;
}

/// log Gamma(x) for x > 0.
template <class Real>
Real log_gamma(const Real& x) {
    using std::log;
    const Real z0 = Real(asymptotic_threshold<Real>());
    if (x >= z0) return log_gamma_stirling(x);
    Real z = x;
    Real prod = Real(1);
    while (z < z0) {
        prod *= z;
        z += Real(1);
    }
    return log_gamma_stirling(z) - log(prod);
}

/// Gamma(x) for x not a nonpositive integer.
template <class Real>
Real gamma(const Real& x) {
    using std::exp;
    if (x < Real(0.5)) return pi<Real>() / (sin_pi(x) * gamma(Real(Real(1) - x)));
    const Real z0 = Real(asymptotic_threshold<Real>());
    Real z = x;
    Real prod = Real(1);
    while (z < z0) {
        prod *= z;
        z += Real(1);
    }
    return exp(log_gamma_stirling(z)) / prod;
}

/// 1/Gamma(x), zero at the poles.
template <class Real>
Real reciprocal_gamma(const Real& x) {
    if (x <= Real(0) && is_integer(x)) return Real(0);
    return Real(1) / gamma(x);
}

/// Digamma psi(x) for x not a nonpositive integer.
template <class Real>
Real digamma(const Real& x) {
    using std::abs;
    using std::log;
    if (x <= Real(0)) return digamma(Real(Real(1) - x)) - pi<Real>() * cos_pi(x) / sin_pi(x);
    const Real z0 = Real(asymptotic_threshold<Real>());
    Real z = x;
    CompensatedSum<Real> shift;
    while (z < z0) {
        shift += Real(1) / z;
        z += Real(1);
    }
    const auto& b = bernoulli_table<Real>();
    Real result = log(z) - Real(0.5) / z;
    const Real z2 = z * z;
    Real zpow = z2;
    for (int k = 1; k <= 31; ++k) {
        const Real term = b[2 * k] / (Real(2 * k) * zpow);
        result -= term;
        if (abs(term) <= epsilon<Real>() * abs(result)) break;
        zpow *= z2;
    }
    return result - shift.value();
}

/// Rising factorial (q)_n.
template <class Real>
Real pochhammer(const Real& q, unsigned n) {
    if constexpr (std::is_floating_point_v<Real>) {
        // Running product kept as an unevaluated hi + lo pair.
        Real hi = 1, lo = 0;
        for (unsigned i = 0; i < n; ++i) {
            const Real f = q + Real(i);
            const Real p = hi * f;
            const Real err = std::fma(hi, f, -p);
            lo = lo * f + err;
            hi = p;
        }
        return hi + lo;
    } else {
        Real r = Real(1);
        for (unsigned i = 0; i < n; ++i) r *= q + Real(i);
        return r;
    }
}

/// H_z = gamma + psi(z + 1).
template <class Real>
Real harmonic(const Real& z) {
    if (z >= Real(0) && is_integer(z) && z <= Real(64)) {
        CompensatedSum<Real> s;
        for (int k = 1; Real(k) <= z; ++k) s += Real(1) / Real(k);
        return s.value();
    }
    return euler_gamma<Real>() + digamma(Real(z + Real(1)));
}

}  // namespace dseries::kernel
