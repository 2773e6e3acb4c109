#include "dseries/besselsum.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dseries/kernel/bessel.hpp"
#include "dseries/zetasum.hpp"
#include "zetasum_detail.hpp"

namespace dseries {

using detail::W;
using detail::WideSum;

namespace {

// Infinite k-sums stop once a term is this small relative to the running magnitude.
const W kTailTarget = W("1e-26");

std::string fmt(const char* what, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << v;
    return os.str();
}

void require_x(double x, const char* op) { require_open_period(x, op, ErrorCode::domain_violation); }

void require_order(unsigned v, unsigned lo, const char* name) {
    if (v < lo || v > kMaxZetaOrder) {
        std::ostringstream os;
        os << name << " must lie in [" << lo << ", " << kMaxZetaOrder << "], got " << v;
        throw DomainError(ErrorCode::domain_violation, os.str());
    }
}

bool is_int(double v) { return v == std::floor(v); }

W rat(const rational& r) { return to_real<W>(r); }
W fact(unsigned n) { return rat(rational(factorial(n))); }

W zeta_w(const W& s) { return kernel::riemann_zeta(s); }

// Right side of the J_nu summation formula at (nu, alpha); alpha - nu must not be an odd integer.
WideSum raw_sum(const W& nu, const W& alpha, const W& x) {
    using std::abs;
    using std::pow;
    const W d = alpha - nu;
    const W h = x / W(2);
    WideSum sum;
    const W first = detail::pi_w() * pow(h, alpha - W(1)) /
                    (kernel::cos_pi(W(d / W(2))) * W(2) * kernel::gamma(W((d + W(1)) / W(2))) *
                     kernel::gamma(W((alpha + nu + W(1)) / W(2))));
    sum.add(first);

    W c = pow(h, nu) * kernel::reciprocal_gamma(W(nu + W(1)));
    W magnitude = abs(first);
    int quiet = 0;
    for (unsigned k = 0; quiet < 3; ++k) {
        W t = c * zeta_w(W(d - W(2 * k)));
        if (k % 2 == 1) t = -t;
        sum.add(t, W(0), 1);
        magnitude += abs(t);
        quiet = abs(t) <= kTailTarget * magnitude ? quiet + 1 : 0;
        c *= h * h / (W(k + 1) * (nu + W(k + 1)));
        if (k > 100000) break;
    }
    return sum;
}

// sum_{k>=1} Gamma(2k) zeta(2k) (x/4pi)^{2k} / (Gamma(m+k) Gamma(nu+m+k))
kernel::Approx<W> trailing_series(const W& nu, unsigned m, const W& x) {
    using std::abs;
    const W r = x / (W(2) * detail::two_pi_w());
    const W r2 = r * r;
    W g = r2 / fact(m) * kernel::reciprocal_gamma(W(nu + W(m + 1)));
    CompensatedSum<W> sum;
    W magnitude = W(0);
    W last = W(0);
    unsigned k = 1;
    for (;; ++k) {
        const W z2k = k <= 32 ? kernel::zeta_even<W>(k) : kernel::riemann_zeta(W(2 * k));
        last = g * z2k;
        sum += last;
        magnitude += abs(last);
        if (abs(last) <= kTailTarget * magnitude || k > 100000) break;
        g *= W(2 * k) * W(2 * k + 1) / (W(m + k) * (nu + W(m + k))) * r2;
    }
    // The terms shrink asymptotically like (x/2pi)^{2k}.
    const W ratio = x / detail::two_pi_w();
    const W tail = abs(last) / (W(1) - ratio * ratio);
    return {sum.value(), tail + W(4) * kernel::epsilon<W>() * magnitude, k};
}

// First two groups of the odd-exponent J formula: the log/harmonic term and the zeta(odd) sum.
WideSum odd_head(const W& nu, unsigned m, const W& x) {
    using std::log;
    using std::pow;
    const W h = x / W(2);
    WideSum sum;
    W first = pow(h, nu + W(2 * m - 2)) / (W(2) * fact(m - 1)) * kernel::reciprocal_gamma(W(nu + W(m))) *
              (kernel::harmonic(W(m - 1)) + kernel::harmonic(W(nu + W(m - 1))) - W(2) * log(h));
    if (m % 2 == 0) first = -first;
    sum.add(first);
    for (unsigned k = 0; k + 2 <= m; ++k) {
        W t = zeta_w(W(2 * m - 2 * k - 1)) * pow(h, nu + W(2 * k)) / fact(k) *
              kernel::reciprocal_gamma(W(nu + W(k + 1)));
        if (k % 2 == 1) t = -t;
        sum.add(t);
    }
    return sum;
}

// 2(-1)^{m-1}(x/2)^{nu+2m-2}
W trailing_factor(const W& nu, unsigned m, const W& x) {
    using std::pow;
    const W f = W(2) * pow(x / W(2), nu + W(2 * m - 2));
    return m % 2 == 1 ? f : W(-f);
}

kernel::Approx<W> half_tail_closed(unsigned m, const W& x) {
    using std::sqrt;
    const auto s = detail::poch_zeta_w(2 * m, x);
    const W c = pow(W(2), W(2 * m - 1)) / sqrt(detail::pi_w());
    return {c * s.value, c * s.error, s.terms};
}

kernel::Approx<W> half_zeta_prime_form(unsigned m, const W& x) {
    using std::sqrt;
    const W a = x / detail::two_pi_w();
    const W s = W(1) - W(2 * m);
    W c = W(2) * pow(detail::two_pi_w(), W(2 * m - 1)) / (fact(2 * m - 1) * sqrt(detail::two_pi_w() * x));
    if (m % 2 == 1) c = -c;
    WideSum sum;
    sum.add_scaled(c, detail::zetad_w(s, W(1) - a));
    sum.add_scaled(-c, detail::zetad_w(s, a));
    return sum.approx();
}

// zeta'(s, a) -/+ zeta'(s, 1 - a)
kernel::Approx<W> zetad_pair(int s, const W& a, bool plus) {
    const auto u = detail::zetad_w(W(s), a);
    const auto v = detail::zetad_w(W(s), W(1) - a);
    return {plus ? W(u.value + v.value) : W(u.value - v.value), u.error + v.error, u.terms + v.terms};
}

}  // namespace

EvalResult bessel_j_series(double nu, double z) {
    if (!(nu > -1.0)) throw DomainError(ErrorCode::parameter_out_of_range, fmt("bessel_j_series needs nu > -1, nu = ", nu));
    if (!(z >= 0.0)) throw DomainError(ErrorCode::parameter_out_of_range, fmt("bessel_j_series needs z >= 0, z = ", z));
    if (z > kSeriesReliableRange)
        throw DomainError(ErrorCode::argument_out_of_reliable_range, fmt("bessel_j_series accepts z <= 30, z = ", z));
    if (z == 0.0 && nu < 0.0) throw DomainError(ErrorCode::parameter_out_of_range, "J_nu(0) is infinite for nu < 0");
    const auto r = kernel::bessel_j_power_series(W(nu), W(z), W(1) / pow(W(2), W(64)));
    WideSum sum;
    sum.add(r.value, r.error, r.terms);
    return sum.result(Method::closed_form);
}

EvalResult bessel_j_poisson(double nu, double z) {
    if (!(nu > -0.5)) throw DomainError(ErrorCode::parameter_out_of_range, fmt("bessel_j_poisson needs nu > -1/2, nu = ", nu));
    if (!(z >= 0.0)) throw DomainError(ErrorCode::parameter_out_of_range, fmt("bessel_j_poisson needs z >= 0, z = ", z));
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [&](double t) {
        const double st = std::sin(t);
        return (st == 0.0 ? (nu == 0.0 ? 1.0 : 0.0) : std::pow(st, 2 * nu)) * std::cos(z * std::cos(t));
    };
    double err = 0, l1 = 0;
    std::size_t levels = 0;
    const double integral = integrator.integrate(f, 0.0, M_PI / 2, 1e-15, &err, &l1, &levels);
    const double pref = 2.0 * std::pow(z / 2, nu) / (std::sqrt(M_PI) * std::tgamma(nu + 0.5));
    const double value = pref * integral;
    const double est = std::abs(pref) * err + std::abs(pref) * l1 * 1e-15;
    if (!std::isfinite(value) || est > 1e-10)
        throw DomainError(ErrorCode::quadrature_nonconvergence, fmt("Poisson integral did not converge, error estimate ", est));
    return {value, est, Method::quadrature, static_cast<std::uint64_t>(levels) + 1};
}

EvalResult spherical_j(unsigned p, double z) {
    if (!(z > 0.0)) throw DomainError(ErrorCode::zero_argument, fmt("spherical_j needs z > 0, z = ", z));
    WideSum sum;
    sum.add(kernel::spherical_j(p, W(z)), W(0), p + 1);
    return sum.result(Method::closed_form);
}

EvalResult bessel_sum_raw(double nu, double alpha, double x) {
    require_x(x, "bessel_sum_raw");
    if (!(nu > -0.5 && alpha > nu))
        throw DomainError(ErrorCode::domain_violation, "bessel_sum_raw needs alpha > nu > -1/2");
    if (is_int(alpha - nu))
        throw DomainError(ErrorCode::integer_offset,
                          "alpha - nu is an integer; use bessel_sum_even or bessel_sum_odd");
    return raw_sum(W(nu), W(alpha), W(x)).result();
}

EvalResult bessel_sum_even(double nu, unsigned m, double x) {
    using std::pow;
    require_x(x, "bessel_sum_even");
    require_order(m, 1, "m");
    if (!(nu > -2.0 * m - 0.5)) throw DomainError(ErrorCode::domain_violation, fmt("bessel_sum_even needs nu > -2m-1/2, nu = ", nu));
    const W wn(nu), wx(x), h = wx / W(2);
    WideSum sum;
    W first = fact(m) * pow(wx, wn + W(2 * m - 1)) * sqrt(detail::pi_w()) /
              (pow(W(2), wn) * fact(2 * m)) * kernel::reciprocal_gamma(W(wn + W(m) + W(0.5)));
    if (m % 2 == 1) first = -first;
    sum.add(first);
    for (unsigned k = 0; k <= m; ++k) {
        W t = kernel::riemann_zeta(W(2 * m - 2 * k)) * pow(h, wn + W(2 * k)) / fact(k) *
              kernel::reciprocal_gamma(W(wn + W(k + 1)));
        if (k % 2 == 1) t = -t;
        sum.add(t);
    }
    return sum.result();
}

EvalResult bessel_sum_odd(double nu, unsigned m, double x) {
    require_x(x, "bessel_sum_odd");
    require_order(m, 1, "m");
    if (!(nu > -0.5)) throw DomainError(ErrorCode::domain_violation, fmt("bessel_sum_odd needs nu > -1/2, nu = ", nu));
    const W wn(nu), wx(x);
    WideSum sum = odd_head(wn, m, wx);
    sum.add_scaled(trailing_factor(wn, m, wx), trailing_series(wn, m, wx));
    return sum.result();
}

EvalResult bessel_half_sum(unsigned m, double x) {
    using std::pow;
    using std::sqrt;
    require_x(x, "bessel_half_sum");
    require_order(m, 1, "m");
    const W wx(x), half(0.5);
    WideSum sum = odd_head(half, m, wx);
    // 2(-1)^{m-1}(x/2)^{2m-3/2} * 2^{2m-1}/sqrt(pi) S_{2m} = (-1)^{m-1} 4 x^{2m-3/2}/sqrt(2pi) S_{2m}
    W c = W(4) * pow(wx, W(2 * m) - W(1.5)) / sqrt(detail::two_pi_w());
    if (m % 2 == 0) c = -c;
    sum.add_scaled(c, detail::poch_zeta_w(2 * m, wx));
    return sum.result();
}

HalfSumCheckpoints bessel_half_checkpoints(unsigned m, double x) {
    require_x(x, "bessel_half_checkpoints");
    require_order(m, 1, "m");
    const W wx(x);
    return {trailing_series(W(0.5), m, wx).value.convert_to<double>(),
            half_tail_closed(m, wx).value.convert_to<double>(),
            half_zeta_prime_form(m, wx).value.convert_to<double>()};
}

EvalResult spherical_sum_base(unsigned p, double alpha, double x) {
    using std::sqrt;
    require_x(x, "spherical_sum_base");
    if (!(alpha > p)) throw DomainError(ErrorCode::domain_violation, fmt("spherical_sum_base needs alpha > p, alpha = ", alpha));
    const double d = alpha - p;
    if (is_int(d) && std::fmod(d, 2.0) == 1.0)
        throw DomainError(ErrorCode::pole_in_prefactor, "alpha - p is an odd integer: the secant factor and zeta(1) are singular");
    const W wx(x);
    const auto inner = raw_sum(W(p) + W(0.5), W(alpha) + W(0.5), wx);
    WideSum sum;
    sum.add(sqrt(detail::pi_w() / (W(2) * wx)) * inner.value(),
            sqrt(detail::pi_w() / (W(2) * wx)) * inner.error(), 1);
    return sum.result();
}

EvalResult spherical_sum_closed(unsigned p, unsigned m, double x) {
    using std::log;
    using std::pow;
    using std::sqrt;
    require_x(x, "spherical_sum_closed");
    require_order(p, 1, "p");
    require_order(m, 1, "m");
    const W wx(x), h = wx / W(2);
    WideSum sum;

    W first = pow(h, W(p + 2 * m) - W(1.5)) * sqrt(detail::pi_w() / (W(8) * wx)) / fact(m - 1) *
              kernel::reciprocal_gamma(W(W(p + m) + W(0.5))) *
              (kernel::harmonic(W(m - 1)) + kernel::harmonic(W(W(p + m) - W(0.5))) - W(2) * log(h));
    if (m % 2 == 0) first = -first;
    sum.add(first);

    const W two_x_p = pow(W(2) * wx, W(p));
    for (unsigned k = 0; k + 2 <= m; ++k) {
        W t = two_x_p * fact(p + k) * zeta_w(W(2 * m - 1 - 2 * k)) * pow(wx, W(2 * k)) /
              (fact(k) * fact(2 * p + 2 * k + 1));
        if (k % 2 == 1) t = -t;
        sum.add(t);
    }

    const auto plan = heaviside_plan(m, p);
    W c = W(4) * pow(wx, W(p + 2 * m - 2));
    if (m % 2 == 0) c = -c;
    sum.add_scaled(c, detail::heaviside_sum_w(plan, wx));
    return sum.result();
}

EvalResult example_j2(double x) {
    require_x(x, "example_j2");
    const W wx(x), a = wx / detail::two_pi_w(), pi = detail::pi_w();
    WideSum sum;
    sum.add_scaled(W(8) * pow(pi, W(7)) / (W(315) * wx), zetad_pair(-7, a, false));
    sum.add_scaled(W(-2) * pow(pi, W(8)) / (W(105) * wx * wx), zetad_pair(-8, a, true));
    sum.add_scaled(W(4) * pow(pi, W(9)) / (W(945) * wx * wx * wx), zetad_pair(-9, a, false));
    return sum.result();
}

EvalResult example_j2_uncorrected(double x) {
    using std::log;
    require_x(x, "example_j2_uncorrected");
    const W wx(x), a = wx / detail::two_pi_w(), pi = detail::pi_w();
    WideSum sum;
    sum.add(pow(wx, W(6)) * (W(3197) / W(1260) - log(wx)) / W(15120));
    sum.add(-pow(wx, W(4)) * zeta_w(W(3)) / W(420));
    sum.add(wx * wx * zeta_w(W(5)) / W(30));
    sum.add_scaled(W(4) * pow(pi, W(7)) / (W(315) * wx), zetad_pair(-7, a, false));
    sum.add_scaled(-pow(pi, W(8)) / (W(105) * wx * wx), zetad_pair(-8, a, true));
    sum.add_scaled(W(2) * pow(pi, W(9)) / (W(945) * wx * wx * wx), zetad_pair(-9, a, false));
    return sum.result();
}

}  // namespace dseries
