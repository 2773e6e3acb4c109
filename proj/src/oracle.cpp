#include "dseries/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "dseries/besselsum.hpp"
#include "dseries/kernel/bessel.hpp"

namespace dseries {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kCheckEvery = 64;

std::string fmt(const char* what, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << v;
    return os.str();
}

[[noreturn]] void not_applicable(const char* what) { throw DomainError(ErrorCode::tail_policy_not_applicable, what); }

bool is_half_integer(double nu) {
    const double t = 2 * nu;
    return t == std::floor(t) && std::fmod(t, 2.0) != 0.0;
}

/// How the running sum is closed off.
enum class Closing { bound, alternating, midpoint };

/// Sums term(n) for n = 1.. in ascending order with compensation.
///
/// bound(N) is a rigorous bound on |sum_{n>N} term(n)|. In the alternating
/// closings the bound is the next nonzero term instead, and the signs of the
/// nonzero terms must alternate. scale(n) is an envelope for |term(n)| used to
/// recognize terms that vanish up to rounding (sin(n pi) and similar); the
/// rounding in sin(n x) grows like n eps, so the cut is loose.
template <class Term, class Scale, class Bound>
OracleReport run(Term term, Scale scale, Bound bound, std::uint64_t cap, double tol, Closing closing) {
    CompensatedSum<double> sum;
    int last_sign = 0;
    auto significant = [&](double t, std::uint64_t n) { return std::abs(t) > 1e-6 * scale(n); };
    auto next_nonzero = [&](std::uint64_t n) {
        for (std::uint64_t k = n + 1; k <= n + 16; ++k) {
            const double t = term(k);
            if (significant(t, k)) return t;
        }
        return 0.0;
    };
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const double t = term(n);
        sum += t;
        if (closing != Closing::bound && significant(t, n)) {
            const int sign = t > 0 ? 1 : -1;
            if (sign == last_sign)
                throw DomainError(ErrorCode::not_alternating, fmt("terms do not alternate at n = ", static_cast<double>(n)));
            last_sign = sign;
        }
        if (n % kCheckEvery != 0 && n != cap) continue;
        double b;
        double value = sum.value();
        if (closing == Closing::bound) {
            b = bound(n);
        } else {
            const double a = next_nonzero(n);
            if (a != 0.0 && (a > 0 ? 1 : -1) == last_sign)
                throw DomainError(ErrorCode::not_alternating, fmt("terms do not alternate after n = ", static_cast<double>(n)));
            b = std::abs(a);
            if (closing == Closing::midpoint) {
                value += a / 2;
                b /= 2;
            }
        }
        if (b <= tol || n == cap) return {value, b, n, b <= tol};
    }
    return {sum.value(), kInf, cap, false};
}

Closing closing_for(const OracleConfig& cfg) {
    if (cfg.acceleration == Acceleration::euler_alternating) {
        if (cfg.tail_policy && *cfg.tail_policy != TailPolicy::alternating_bound)
            not_applicable("euler_alternating reports the alternating bound only");
        return Closing::midpoint;
    }
    if (cfg.tail_policy == TailPolicy::alternating_bound) return Closing::alternating;
    return Closing::bound;
}

OracleReport trig_aitken(TrigKind kind, double s, double x, double y, const OracleConfig& cfg) {
    using C = std::complex<double>;
    CompensatedSum<double> re, im;
    C s0, s1, s2;  // S_{N-2}, S_{N-1}, S_N
    const C z(std::cos(x), std::sin(x));
    const double half = std::sin(x / 2);
    const C phase(std::cos(y), std::sin(y));
    auto pick = [&](C v) { return kind == TrigKind::cosine ? (v * phase).real() : (v * phase).imag(); };
    for (std::uint64_t n = 1; n <= cfg.max_terms; ++n) {
        const double b = std::pow(static_cast<double>(n), -s);
        const double ang = static_cast<double>(n) * x;
        re += std::cos(ang) * b;
        im += std::sin(ang) * b;
        s0 = s1;
        s1 = s2;
        s2 = C(re.value(), im.value());
        if (n < 3 || (n % kCheckEvery != 0 && n != cfg.max_terms)) continue;
        const C d1 = s2 - s1;
        const C d2 = s2 - C(2.0) * s1 + s0;
        const C aitken = std::abs(d2) == 0.0 ? s2 : s2 - d1 * d1 / d2;
        const double np1 = static_cast<double>(n + 1);
        const double ang1 = np1 * x;
        const C abel = s2 + C(std::cos(ang1), std::sin(ang1)) * std::pow(np1, -s) / (C(1.0) - z);
        const double rem = s * std::pow(np1, -s - 1) / (2 * half * half);
        const double bound = std::abs(aitken - abel) + rem;
        if (bound <= cfg.target_tol || n == cfg.max_terms) return {pick(aitken), bound, n, bound <= cfg.target_tol};
    }
    return {pick(s2), kInf, cfg.max_terms, false};
}

/// Bound on |P - 1| + |Q| in Hankel's expansion at z > 0, nu >= 0: each sum stops where the
/// first neglected term bounds the remainder (DLMF 10.17(iii)).
double hankel_remainder(double nu, double z) {
    const double mu = 4 * nu * nu;
    const int lp = std::max(1, static_cast<int>(std::ceil(nu / 2 - 0.25)));
    const int lq = std::max(1, static_cast<int>(std::ceil(nu / 2 - 0.75)));
    const int kmax = std::max(2 * lp, 2 * lq + 1);
    double a = 1, total = 0;
    for (int k = 1; k <= kmax; ++k) {
        a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
        if (k % 2 == 0 ? k <= 2 * lp : k <= 2 * lq + 1) total += std::abs(a);
    }
    return total;
}

double zeta_even_double(unsigned k) {
    static const std::vector<double> table = [] {
        std::vector<double> t(33, 0.0);
        for (unsigned j = 1; j <= 32; ++j) t[j] = kernel::zeta_even<wide_real>(j).convert_to<double>();
        return t;
    }();
    return k <= 32 ? table[k] : kernel::riemann_zeta(2.0 * k);
}

}  // namespace

std::string_view to_string(Acceleration a) noexcept {
    switch (a) {
        case Acceleration::none: return "none";
        case Acceleration::aitken: return "aitken";
        case Acceleration::euler_alternating: return "euler_alternating";
    }
    return "unknown";
}

std::string_view to_string(TailPolicy t) noexcept {
    switch (t) {
        case TailPolicy::geometric_bound: return "geometric_bound";
        case TailPolicy::integral_bound: return "integral_bound";
        case TailPolicy::alternating_bound: return "alternating_bound";
    }
    return "unknown";
}

void OracleConfig::validate() const {
    if (max_terms < 1 || max_terms > kMaxOracleTerms)
        throw DomainError(ErrorCode::invalid_config, fmt("max_terms must lie in [1, 1e8], got ", static_cast<double>(max_terms)));
    if (!(target_tol >= 1e-15) || !std::isfinite(target_tol))
        throw DomainError(ErrorCode::invalid_config, fmt("target_tol must be >= 1e-15, got ", target_tol));
}

ZetaPochWeight ZetaPochWeight::length(unsigned q) {
    return q % 2 == 1 ? base((q + 1) / 2) : even(q / 2);
}

OracleReport sum_trig(TrigKind kind, double s, double x, double y, const OracleConfig& cfg) {
    cfg.validate();
    require_open_period(x, "sum_trig");
    if (!(s > 0.0)) throw DomainError(ErrorCode::parameter_out_of_range, fmt("sum_trig needs s > 0, s = ", s));
    if (cfg.acceleration == Acceleration::aitken) {
        if (cfg.tail_policy) not_applicable("aitken reports its own Abel-remainder bound");
        return trig_aitken(kind, s, x, y, cfg);
    }
    const Closing closing = closing_for(cfg);
    if (cfg.tail_policy == TailPolicy::geometric_bound) not_applicable("trigonometric series are not geometric");
    if (cfg.tail_policy == TailPolicy::integral_bound && !(s > 1.0))
        not_applicable("the integral bound needs s > 1");
    const bool integral = cfg.tail_policy == TailPolicy::integral_bound;
    const double half = std::abs(std::sin(x / 2));
    auto term = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        const double a = nn * x + y;
        return (kind == TrigKind::sine ? std::sin(a) : std::cos(a)) * std::pow(nn, -s);
    };
    auto scale = [&](std::uint64_t n) { return std::pow(static_cast<double>(n), -s); };
    auto bound = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        if (integral) return std::pow(nn, 1 - s) / (s - 1);
        return std::pow(nn + 1, -s) / half;
    };
    return run(term, scale, bound, cfg.max_terms, cfg.target_tol, closing);
}

OracleReport sum_zeta_poch(const ZetaPochWeight& w, double x, const OracleConfig& cfg) {
    cfg.validate();
    require_open_period(x, "sum_zeta_poch");
    if (w.m < 1) throw DomainError(ErrorCode::parameter_out_of_range, "sum_zeta_poch needs m >= 1");
    if (cfg.acceleration != Acceleration::none) not_applicable("zeta-Pochhammer series converge geometrically; no acceleration");
    if (cfg.tail_policy && *cfg.tail_policy != TailPolicy::geometric_bound) not_applicable("zeta-Pochhammer series use the geometric bound");

    const double t = x / kTwoPi;
    const double t2 = t * t;
    unsigned len = 0;
    switch (w.kind) {
        case ZetaPochWeight::Kind::base: len = 2 * w.m - 1; break;
        case ZetaPochWeight::Kind::even: len = 2 * w.m; break;
        case ZetaPochWeight::Kind::general: len = 2 * w.p + 2 * w.m; break;
    }
    const bool general = w.kind == ZetaPochWeight::Kind::general;
    // c_n = weight(n) t^{2n}; c_{n+1}/c_n <= t^2, and zeta(2n) <= zeta(2) < 1.65.
    double c = (general ? kernel::pochhammer(double(w.m + 1), w.p) : 1.0) / kernel::pochhammer(2.0, len) * t2;
    CompensatedSum<double> sum;
    for (std::uint64_t n = 1;; ++n) {
        sum += zeta_even_double(static_cast<unsigned>(std::min<std::uint64_t>(n, 100000))) * c;
        const double nn = static_cast<double>(n);
        double ratio = t2 * (2 * nn) * (2 * nn + 1) / ((2 * nn + len) * (2 * nn + len + 1));
        if (general) ratio *= (w.m + nn + w.p) / (w.m + nn);
        c *= ratio;
        const double bound = 1.65 * c / (1 - t2);
        const bool tight = bound <= cfg.target_tol && bound <= 0x1p-60 * std::abs(sum.value());
        if (tight || n >= cfg.max_terms || c == 0.0) return {sum.value(), bound, n, bound <= cfg.target_tol};
    }
}

double oracle_bessel_j(double nu, double z) {
    if (is_half_integer(nu) && nu > 0) {
        const auto p = static_cast<unsigned>(nu - 0.5);
        return std::sqrt(2 * z / M_PI) * kernel::spherical_j(p, z);
    }
    if (nu == -0.5) return std::sqrt(2 / (M_PI * z)) * std::cos(z);
    if (z <= kSeriesReliableRange) {
        const auto r = kernel::bessel_j_power_series(wide_real(nu), wide_real(z), wide_real(1e-20));
        return r.value.convert_to<double>();
    }
    return kernel::bessel_j_hankel(nu, z).value;
}

OracleReport sum_bessel(const BesselKind& kind, double exponent, double x, const OracleConfig& cfg) {
    cfg.validate();
    require_open_period(x, "sum_bessel", ErrorCode::domain_violation);
    if (cfg.acceleration == Acceleration::aitken) not_applicable("aitken is only defined for trigonometric series");
    if (cfg.tail_policy == TailPolicy::geometric_bound) not_applicable("Bessel series are not geometric");
    const Closing closing = closing_for(cfg);
    const bool spherical = kind.kind == BesselKind::Kind::spherical;
    const double nu = spherical ? kind.p + 0.5 : kind.nu;
    if (!(nu > -0.5) && !spherical) throw DomainError(ErrorCode::domain_violation, fmt("sum_bessel needs nu > -1/2, nu = ", nu));
    const double decay = spherical ? exponent + 1 : exponent + 0.5;  // |term| <= C n^{-decay}
    if (!(decay > 1.0)) throw DomainError(ErrorCode::domain_violation, fmt("series does not converge absolutely, exponent = ", exponent));

    const bool exact_form = spherical || is_half_integer(nu);
    const std::uint64_t cap = exact_form ? cfg.max_terms : std::min(cfg.max_terms, kGeneralBesselTermCap);

    // |J_nu(z)| <= sqrt(2/pi) (z^2 - nu^2)^{-1/4} for z > nu > 1/2, and <= sqrt(2/(pi z)) for |nu| <= 1/2.
    // For z >= 2nu the first gives sqrt(2/pi) (4/3)^{1/4} z^{-1/2}.
    const double kappa = std::abs(nu) <= 0.5 ? std::sqrt(2 / M_PI) : std::sqrt(2 / M_PI) * std::pow(4.0 / 3.0, 0.25);
    auto term = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        const double z = nn * x;
        const double f = spherical ? kernel::spherical_j(kind.p, z) : oracle_bessel_j(nu, z);
        return f * std::pow(nn, -exponent);
    };
    auto scale = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        return kappa * std::pow(nn * x, -0.5) * std::pow(nn, -exponent) * (spherical ? std::sqrt(M_PI / (2 * nn * x)) : 1.0);
    };
    auto envelope = [&](double nn) {
        if (std::abs(nu) > 0.5 && nn * x < 2 * nu) return kInf;
        // sum_{k>N} k^{-d} <= N^{1-d}/(d-1)
        const double c = spherical ? kappa * std::sqrt(M_PI / 2) / x : kappa / std::sqrt(x);
        return c * std::pow(nn, 1 - decay) / (decay - 1);
    };
    // J = sqrt(2/(pi z)) cos(z - phi) + E with |E| <= sqrt(2/pi) A z^{-3/2}: the cosine part is
    // bounded by summation by parts, E termwise.
    const double w = spherical ? exponent + 0.5 : exponent;
    const double pre = spherical ? std::sqrt(M_PI / (2 * x)) : 1.0;
    auto hankel = [&](double nn) {
        if (nu < 0 || !(w + 0.5 > 0)) return kInf;
        const double z0 = (nn + 1) * x;
        const double A = z0 * hankel_remainder(nu, z0);
        const double cosine = std::sqrt(2 / (M_PI * x)) * std::pow(nn + 1, -(w + 0.5)) / std::abs(std::sin(x / 2));
        const double rest = std::sqrt(2 / M_PI) * A * std::pow(x, -1.5) * std::pow(nn, -(w + 0.5)) / (w + 0.5);
        return pre * (cosine + rest);
    };
    auto bound = [&](std::uint64_t n) {
        const double nn = static_cast<double>(n);
        return std::min(envelope(nn), hankel(nn));
    };
    return run(term, scale, bound, cap, cfg.target_tol, closing);
}

}  // namespace dseries
