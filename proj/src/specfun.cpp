#include "dseries/specfun.hpp"

#include <cmath>
#include <sstream>

#include "dseries/kernel/zeta.hpp"

namespace dseries {

namespace {

using W = wide_real;

std::string describe(const char* what, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << v;
    return os.str();
}

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

EvalResult rounded(const W& v, const W& err, Method method, std::uint64_t terms) {
    const double d = v.convert_to<double>();
    return {d, rounded_error(d, err.convert_to<double>()), method, terms};
}

const W kPublicTarget = W(1) / W(std::pow(2.0, 60));

EvalResult zeta_wide(double s, double a, const EMConfig& cfg, bool deriv) {
    const W ws(s), wa(a);
    if (!deriv && s <= 0.0 && s == std::floor(s) && s >= -63.0) {
        const auto r = kernel::hurwitz_zeta(ws, wa);
        return rounded(r.value, W(0), Method::exact_bernoulli, 0);
    }
    const int m = std::clamp(cfg.correction_terms, 1, 31);
    const auto r = deriv ? kernel::hurwitz_zeta_sderiv(ws, wa, cfg.head_terms, m, kPublicTarget)
                         : kernel::hurwitz_zeta(ws, wa, cfg.head_terms, m, kPublicTarget);
    const Method method = (s <= -20.0 && a <= 1.0) ? Method::closed_form : Method::euler_maclaurin;
    return rounded(r.value, r.error, method, r.terms);
}

void require_em(const EMConfig& cfg) {
    if (cfg.head_terms < 1 || cfg.correction_terms < 1)
        throw DomainError(ErrorCode::invalid_config, "EMConfig needs N >= 1 and M >= 1");
}

}  // namespace

HurwitzArg::HurwitzArg(double s, double a) : s_(s), a_(a) {
    if (!std::isfinite(s) || !std::isfinite(a))
        throw DomainError(ErrorCode::parameter_out_of_range, "s and a must be finite");
    if (s == 1.0) throw DomainError(ErrorCode::pole_at_s_equal_one, "zeta(s, a) has a pole at s = 1");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError(ErrorCode::parameter_out_of_range, describe("need 0 < a <= 1, a", a));
}

EvalResult gamma(double x) {
    if (nonpositive_integer(x)) throw DomainError(ErrorCode::pole_at_nonpositive_integer, describe("gamma pole at x", x));
    return rounded(kernel::gamma(W(x)), W(0), Method::closed_form, 1);
}

EvalResult log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError(ErrorCode::nonpositive_argument, describe("log_gamma needs x > 0, x", x));
    return rounded(kernel::log_gamma(W(x)), W(0), Method::closed_form, 1);
}

EvalResult digamma(double x) {
    if (nonpositive_integer(x)) throw DomainError(ErrorCode::pole_at_nonpositive_integer, describe("digamma pole at x", x));
    return rounded(kernel::digamma(W(x)), W(0), Method::closed_form, 1);
}

HarmonicNumber harmonic(unsigned n) {
    rational h = 0;
    for (unsigned k = 1; k <= n; ++k) h += rational(1, k);
    return {h, h.convert_to<double>()};
}

EvalResult harmonic_general(double z) {
    if (!(z > -1.0)) {
        if (nonpositive_integer(z + 1.0)) throw DomainError(ErrorCode::pole, describe("H_z has a pole at z", z));
        throw DomainError(ErrorCode::domain_violation, describe("harmonic_general needs z > -1, z", z));
    }
    return rounded(kernel::harmonic(W(z)), W(0), Method::closed_form, 1);
}

EvalResult bernoulli_poly(unsigned n, double a) {
    if (n > 64) throw DomainError(ErrorCode::parameter_out_of_range, "bernoulli_poly supports n <= 64");
    return rounded(kernel::bernoulli_poly(n, W(a)), W(0), Method::exact_bernoulli, 0);
}

EvalResult riemann_zeta(double s) {
    if (s == 1.0) throw DomainError(ErrorCode::pole_at_one, "zeta(s) has a pole at s = 1");
    if (s >= 2.0 && s <= 64.0 && s == std::floor(s) && std::fmod(s, 2.0) == 0.0)
        return rounded(kernel::zeta_even<W>(static_cast<unsigned>(s / 2)), W(0), Method::exact_bernoulli, 0);
    return zeta_wide(s, 1.0, EMConfig{}, false);
}

EvalResult zeta_1_minus_2n(unsigned n) {
    if (n == 0) throw DomainError(ErrorCode::parameter_out_of_range, "zeta_1_minus_2n needs n >= 1");
    const W two_pi = boost::math::constants::two_pi<W>();
    const W fact = to_real<W>(rational(factorial(2 * n - 1)));
    W v = W(2) * fact * kernel::zeta_even<W>(n) / pow(two_pi, W(2 * n));
    if (n % 2 == 1) v = -v;
    return rounded(v, W(0), Method::exact_bernoulli, 0);
}

EvalResult hurwitz_zeta(const HurwitzArg& arg, const EMConfig& cfg) {
    require_em(cfg);
    return zeta_wide(arg.s(), arg.a(), cfg, false);
}

EvalResult hurwitz_zeta_sderiv(const HurwitzArg& arg, const EMConfig& cfg) {
    require_em(cfg);
    return zeta_wide(arg.s(), arg.a(), cfg, true);
}

EvalResult pochhammer(double q, unsigned n) {
    const double v = kernel::pochhammer(q, n);
    return {v, std::abs(v) * 0x1p-53 * (n + 1), Method::closed_form, std::max(1u, n)};
}

namespace detail {

EvalResult hurwitz_zeta_unclamped(double s, double a, const EMConfig& cfg) {
    if (s == 1.0) throw DomainError(ErrorCode::pole_at_s_equal_one, "zeta(s, a) has a pole at s = 1");
    if (!(a > 0.0)) throw DomainError(ErrorCode::parameter_out_of_range, describe("need a > 0, a", a));
    require_em(cfg);
    return zeta_wide(s, a, cfg, false);
}

EvalResult hurwitz_zeta_sderiv_unclamped(double s, double a, const EMConfig& cfg) {
    if (s == 1.0) throw DomainError(ErrorCode::pole_at_s_equal_one, "zeta(s, a) has a pole at s = 1");
    if (!(a > 0.0)) throw DomainError(ErrorCode::parameter_out_of_range, describe("need a > 0, a", a));
    require_em(cfg);
    return zeta_wide(s, a, cfg, true);
}

}  // namespace detail

}  // namespace dseries
