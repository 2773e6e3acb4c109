// Hurwitz/Riemann zeta kernels templated on the scalar type.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dseries/kernel/gamma.hpp"

namespace dseries::kernel {

/// A value with an absolute error estimate and a work counter.
template <class Real>
struct Approx {
    Real value;
    Real error;
    std::uint64_t terms;
};

/// B_2j/(2j)! for j = 0..32.
template <class Real>
const std::vector<Real>& em_coefficients() {
    static const std::vector<Real> table = [] {
        std::vector<Real> t;
        for (unsigned j = 0; j <= 32; ++j)
            t.push_back(to_real<Real>(bernoulli_number(2 * j) / rational(factorial(2 * j))));
        return t;
    }();
    return table;
}

/// B_n(a) from exact rational coefficients, n <= 64.
template <class Real>
Real bernoulli_poly(unsigned n, const Real& a) {
    // Horner in a: B_n(a) = sum_k C(n,k) B_{n-k} a^k
    Real r = Real(0);
    for (unsigned k = n + 1; k-- > 0;)
        r = r * a + to_real<Real>(rational(binomial(n, k)) * bernoulli_number(n - k));
    return r;
}

/// zeta(s,a) or its s-derivative by Euler–Maclaurin with N head terms and M
/// Bernoulli corrections. N doubles (up to 400) until the first neglected
/// correction is below rel_target times the value.
template <class Real>
Approx<Real> euler_maclaurin(const Real& s, const Real& a, int head, int corr, const Real& rel_target,
                             bool deriv) {
    using std::abs;
    using std::ceil;
    using std::log;
    using std::pow;
    const int m_corr = std::clamp(corr, 1, 31);
    const Real abs_s = abs(s);
    int n_head = std::max(head, static_cast<int>(to_long(Real(ceil(abs_s)))) + m_corr);
    const auto& coef = em_coefficients<Real>();
    const Real sm1 = s - Real(1);

    // pow with an integer exponent avoids exp/log; otherwise reuse the log the derivative needs.
    const bool integer_s = is_integer(s) && abs_s < Real(1000);
    const long s_int = integer_s ? to_long(nearest_integer(s)) : 0;
    auto power = [&](const Real& base, const Real& log_base) {
        using std::exp;
        if (integer_s) return Real(pow(base, Real(-s_int)));
        return Real(exp(-s * log_base));
    };

    for (;;) {
        CompensatedSum<Real> sum;
        Real magnitude = Real(0);
        for (int k = 0; k < n_head; ++k) {
            const Real base = Real(k) + a;
            Real t;
            if (deriv) {
                const Real lb = log(base);
                t = -power(base, lb) * lb;
            } else {
                t = integer_s ? power(base, Real(0)) : Real(pow(base, -s));
            }
            sum += t;
            magnitude += abs(t);
        }
        const Real w = Real(n_head) + a;
        const Real lw = log(w);
        const Real p = pow(w, -s);
        Real tail;
        if (!deriv)
            tail = w * p / sm1 + p / Real(2);
        else
            tail = -w * p * (lw / sm1 + Real(1) / (sm1 * sm1)) - p * lw / Real(2);
        sum += tail;
        magnitude += abs(tail);

        Real poch = s;  // (s)_{2j-1}
        Real dpoch = Real(1);
        Real wpow = p / w;  // w^{-s-2j+1}
        const Real w2inv = Real(1) / (w * w);
        Real neglected = Real(0);
        for (int j = 1; j <= m_corr + 1; ++j) {
            const Real term = coef[j] * (deriv ? Real(dpoch - poch * lw) : poch) * wpow;
            if (j == m_corr + 1) {
                neglected = abs(term);
                break;
            }
            sum += term;
            magnitude += abs(term);
            const Real u = s + Real(2 * j - 1);
            const Real v = s + Real(2 * j);
            dpoch = dpoch * u * v + poch * (u + v);
            poch *= u * v;
            wpow *= w2inv;
        }
        const Real value = sum.value();
        const Real rounding = Real(4) * epsilon<Real>() * magnitude;
        if (neglected <= rel_target * abs(value) || neglected <= rounding || n_head >= 400)
            return {value, neglected + rounding, static_cast<std::uint64_t>(n_head + m_corr)};
        n_head = std::min(2 * n_head, 400);
    }
}

/// Hurwitz's formula zeta(1-sigma, a) = 2 Gamma(sigma)(2pi)^-sigma sum cos(pi sigma/2 - 2 pi n a)/n^sigma
/// and its s-derivative. Needs sigma > 1 and 0 < a <= 1.
template <class Real>
Approx<Real> hurwitz_formula(const Real& s, const Real& a, const Real& rel_target, bool deriv) {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    using std::pow;
    using std::sin;
    const Real sigma = Real(1) - s;
    const Real two_pi = boost::math::constants::two_pi<Real>();
    const Real half_pi = boost::math::constants::half_pi<Real>();
    const Real log_two_pi = log(two_pi);
    const Real amp = Real(2) * exp(log_gamma(sigma) - sigma * log_two_pi);

    CompensatedSum<Real> f, df;
    Real magnitude = Real(0);
    std::uint64_t n = 1;
    Real bound = Real(0);
    for (;; ++n) {
        const Real nn = Real(n);
        const Real ln = log(nn);
        const Real phase = half_pi * sigma - two_pi * nn * a;
        const Real c = cos(phase);
        const Real w = pow(nn, -sigma);
        f += c * w;
        magnitude += abs(w);
        if (deriv) df += (-half_pi * sin(phase) - ln * c) * w;
        // sum_{k>n} (pi/2 + log k) k^-sigma <= n^{1-sigma}(log n + 2 + pi/2)/(sigma-1)
        bound = pow(nn, Real(1) - sigma) * (ln + Real(4)) / (sigma - Real(1));
        const Real scale = deriv ? Real(abs(f.value()) + abs(df.value())) : abs(f.value());
        if (bound <= rel_target * scale || bound <= epsilon<Real>() * magnitude || n >= 100000) break;
    }
    if (!deriv) {
        const Real value = amp * f.value();
        return {value, abs(amp) * (bound + Real(4) * epsilon<Real>() * magnitude), n};
    }
    const Real damp = amp * (digamma(sigma) - log_two_pi);
    const Real value = -(damp * f.value() + amp * df.value());
    const Real err = (abs(damp) + abs(amp)) * (bound + Real(4) * epsilon<Real>() * magnitude);
    return {value, err, n};
}

/// Below this s, Euler–Maclaurin head cancellation (about N^{1-s}) costs more
/// digits than Real carries, and Hurwitz's formula is used instead: -20 for 64 digits.
template <class Real>
int hurwitz_formula_threshold() {
    return -(std::numeric_limits<Real>::digits10 / 3 - 1);
}

/// zeta(s,a): exact Bernoulli path at nonpositive integers, Hurwitz's formula for
/// very negative s with a <= 1, Euler–Maclaurin otherwise. s != 1, a > 0.
template <class Real>
Approx<Real> hurwitz_zeta(const Real& s, const Real& a, int head = 25, int corr = 31,
                          Real rel_target = epsilon<Real>()) {
    if (s <= Real(0) && is_integer(s) && s >= Real(-63)) {
        const unsigned n = static_cast<unsigned>(-to_long(nearest_integer(s)));
        return {Real(-bernoulli_poly(n + 1, a) / Real(n + 1)), Real(0), 0};
    }
    if (s <= Real(hurwitz_formula_threshold<Real>()) && a <= Real(1)) return hurwitz_formula(s, a, rel_target, false);
    return euler_maclaurin(s, a, head, corr, rel_target, false);
}

template <class Real>
Approx<Real> hurwitz_zeta_sderiv(const Real& s, const Real& a, int head = 25, int corr = 31,
                                 Real rel_target = epsilon<Real>()) {
    if (s <= Real(hurwitz_formula_threshold<Real>()) && a <= Real(1)) return hurwitz_formula(s, a, rel_target, true);
    return euler_maclaurin(s, a, head, corr, rel_target, true);
}

/// zeta(2n) = (-1)^{n+1} B_2n (2pi)^2n / (2 (2n)!) as an exact rational times pi^2n.
template <class Real>
Real zeta_even(unsigned n) {
    using std::pow;
    const rational c = bernoulli_number(2 * n) * rational(integer(1) << (2 * n)) /
                       rational(2 * factorial(2 * n));
    const Real v = to_real<Real>(c) * pow(pi<Real>(), Real(2 * n));
    return n % 2 == 1 ? v : Real(-v);
}

/// Riemann zeta(s), s != 1.
template <class Real>
Real riemann_zeta(const Real& s) {
    using std::abs;
    using std::pow;
    if (is_integer(s)) {
        if (s <= Real(0) && s >= Real(-63)) return hurwitz_zeta(s, Real(1)).value;
        if (s >= Real(2) && s <= Real(64) && !is_odd_integer_valued(s)) {
            return zeta_even<Real>(static_cast<unsigned>(to_long(nearest_integer(s)) / 2));
        }
    }
    if (s < Real(-1)) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        using std::exp;
        using std::log;
        const Real r = Real(1) - s;
        const Real mag = exp(s * log(Real(2)) + (s - Real(1)) * log(pi<Real>()) + log_gamma(r));
        return mag * sin_pi(Real(s / Real(2))) * riemann_zeta(r);
    }
    if (s > Real(30)) {
        CompensatedSum<Real> sum(Real(1));
        for (int n = 2;; ++n) {
            const Real t = pow(Real(n), -s);
            sum += t;
            if (t <= epsilon<Real>() * Real(1e-2)) break;
        }
        return sum.value();
    }
    return hurwitz_zeta(s, Real(1)).value;
}

}  // namespace dseries::kernel
