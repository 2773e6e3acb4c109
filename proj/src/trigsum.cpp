#include "dseries/trigsum.hpp"

#include <sstream>

#include "wide.hpp"

namespace dseries {

using detail::W;

std::string_view to_string(TrigKind k) noexcept { return k == TrigKind::sine ? "sine" : "cosine"; }

TrigQuery::TrigQuery(double s, double x, double y, TrigKind kind) : s_(s), x_(x), y_(y), kind_(kind) {
    require_open_period(x, "trig series");
    if (!std::isfinite(y)) throw DomainError(ErrorCode::parameter_out_of_range, "y must be finite");
    if (!(s > 1.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "trig series needs s > 1, got s = " << s;
        throw DomainError(ErrorCode::parameter_out_of_range, os.str());
    }
}

EvalResult trig_series_closed(const TrigQuery& q) {
    if (q.s() == std::floor(q.s()))
        throw DomainError(ErrorCode::integer_s,
                          "integer s has no closed form here; use cos_odd_series or the oracle");
    const W s(q.s()), y(q.y());
    const W a = detail::period_fraction(q.x());
    const W pre = pow(detail::two_pi_w(), s) / (W(2) * kernel::gamma(s) * kernel::sin_pi(s));
    const W half = detail::pi_w() * s / W(2);
    const auto z_a = detail::zeta_w(W(1) - s, a);
    const auto z_b = detail::zeta_w(W(1) - s, W(1) - a);

    detail::WideSum sum;
    if (q.kind() == TrigKind::sine) {
        sum.add_scaled(pre * cos(y - half), z_a);
        sum.add_scaled(-pre * cos(y + half), z_b);
    } else {
        sum.add_scaled(pre * sin(y + half), z_b);
        sum.add_scaled(-pre * sin(y - half), z_a);
    }
    return sum.result();
}

EvalResult cos_odd_series(unsigned m, double x) {
    require_open_period(x, "cos_odd_series");
    if (m == 0) throw DomainError(ErrorCode::parameter_out_of_range, "cos_odd_series needs m >= 1");
    const W a = detail::period_fraction(x);
    const W s = W(2) - W(2 * m);
    W coef = pow(detail::two_pi_w(), W(2 * m - 2)) / to_real<W>(rational(factorial(2 * m - 2)));
    if (m % 2 == 0) coef = -coef;
    detail::WideSum sum;
    sum.add_scaled(coef, detail::zetad_w(s, W(1) - a));
    sum.add_scaled(coef, detail::zetad_w(s, a));
    return sum.result();
}

}  // namespace dseries
