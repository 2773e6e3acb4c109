#include "dseries/zetasum.hpp"

#include <sstream>

#include "zetasum_detail.hpp"

namespace dseries {

using detail::W;
using detail::WApprox;

namespace {

void require_order(unsigned v, unsigned lo, const char* name) {
    if (v < lo || v > kMaxZetaOrder) {
        std::ostringstream os;
        os << name << " must lie in [" << lo << ", " << kMaxZetaOrder << "], got " << v;
        throw DomainError(ErrorCode::parameter_out_of_range, os.str());
    }
}

template <class Real>
Real harmonic_w(unsigned n) {
    rational h = 0;
    for (unsigned k = 1; k <= n; ++k) h += rational(1, k);
    return to_real<Real>(h);
}

template <class Real>
Real factorial_w(unsigned n) {
    return to_real<Real>(rational(factorial(n)));
}

// S_{2m-1}
template <class W>
detail::WideSumT<W> base_sum(unsigned m, const W& x) {
    using std::log;
    using std::pow;
    const W a = x / detail::two_pi_w<W>();
    const W f = factorial_w<W>(2 * m - 2);
    detail::WideSumT<W> sum;
    sum.add((log(x) - harmonic_w<W>(2 * m - 2)) / (W(2) * f));
    const W coef = pow(detail::two_pi_w<W>() / x, W(2 * m - 2)) / (W(2) * f);
    const W s = W(2) - W(2 * m);
    sum.add_scaled(coef, detail::zetad_w(s, W(1) - a));
    sum.add_scaled(coef, detail::zetad_w(s, a));
    for (unsigned k = 0; k + 2 <= m; ++k) {
        W t = pow(x, W(2 * static_cast<int>(k) - 2 * static_cast<int>(m) + 2)) *
              kernel::riemann_zeta(W(2 * m - 2 * k - 1)) / (W(2) * factorial_w<W>(2 * k));
        if ((m + k) % 2 == 1) t = -t;
        sum.add(t);
    }
    return sum;
}

// S_{2m}
template <class W>
detail::WideSumT<W> even_sum(unsigned m, const W& x) {
    using std::log;
    using std::pow;
    const W a = x / detail::two_pi_w<W>();
    const W f = factorial_w<W>(2 * m - 1);
    detail::WideSumT<W> sum;
    sum.add((log(x) - harmonic_w<W>(2 * m - 1)) / (W(2) * f));
    const W coef = pow(detail::two_pi_w<W>() / x, W(2 * m - 1)) / (W(2) * f);
    const W s = W(1) - W(2 * m);
    sum.add_scaled(coef, detail::zetad_w(s, a));
    sum.add_scaled(-coef, detail::zetad_w(s, W(1) - a));
    const W outer = W(1) / (W(2) * pow(x, W(2 * m - 1)));
    for (unsigned k = 0; k + 2 <= m; ++k) {
        W t = outer * kernel::riemann_zeta(W(2 * m - 2 * k - 1)) * pow(x, W(2 * k + 1)) /
              factorial_w<W>(2 * k + 1);
        if ((m + k) % 2 == 1) t = -t;
        sum.add(t);
    }
    return sum;
}

}  // namespace

PochZetaQuery::PochZetaQuery(unsigned m, unsigned p, double x) : m_(m), p_(p), x_(x) {
    require_open_period(x, "zeta-Pochhammer series");
    require_order(m, 1, "m");
    if (p > kMaxZetaOrder) require_order(p, 0, "p");
}

rational PartialFractionPlan::q_poly(const rational& n) const {
    rational q = 1;
    for (unsigned k = 1; k <= p; ++k) q *= 2 * n + 2 * m + 2 * k - 1;
    return q;
}

rational PartialFractionPlan::reconstruct(const rational& n) const {
    rational total = 0;
    for (unsigned k = 1; k <= p; ++k) {
        // Q(n)/(n - a_k) without dividing, so roots are valid sample points too.
        rational rest = 2;
        for (unsigned j = 1; j <= p; ++j)
            if (j != k) rest *= 2 * n + 2 * m + 2 * j - 1;
        total += constants[k - 1] * rest;
    }
    return total;
}

PartialFractionPlan heaviside_plan(unsigned m, unsigned p) {
    require_order(m, 1, "m");
    require_order(p, 1, "p");
    PartialFractionPlan plan;
    plan.m = m;
    plan.p = p;
    for (unsigned k = 1; k <= p; ++k) {
        const rational ak(-static_cast<int>(2 * m + 2 * k - 1), 2);
        plan.roots.push_back(ak);
        // Q'(a_k) = 2 prod_{j != k} (2 a_k + 2m + 2j - 1)
        rational dq = 2;
        for (unsigned j = 1; j <= p; ++j)
            if (j != k) dq *= 2 * ak + 2 * m + 2 * j - 1;
        plan.constants.push_back(1 / dq);

        std::vector<integer> row;
        integer prod = 1;
        for (unsigned j = 0; j < 2 * k; ++j) {
            if (j > 0) prod *= 2 * k - j;
            row.push_back(j % 2 == 0 ? prod : integer(-prod));
        }
        plan.inner.push_back(std::move(row));
    }
    return plan;
}

namespace detail {

namespace {

template <class Real>
kernel::Approx<Real> poch_zeta_t(unsigned q, const Real& x) {
    return q % 2 == 1 ? base_sum((q + 1) / 2, x).approx() : even_sum(q / 2, x).approx();
}

}  // namespace

WApprox poch_zeta_w(unsigned q, const W& x) {
    // Beyond q = 16 the cancellation exceeds 40 digits at small x.
    if (q <= 16) return poch_zeta_t(q, x);
    const auto r = poch_zeta_t(q, W2(x));
    return {W(r.value), W(r.error), r.terms};
}

WApprox heaviside_sum_w(const PartialFractionPlan& plan, const W& x) {
    // Only 2p distinct lengths occur; evaluate each once.
    std::vector<WApprox> s;
    for (unsigned j = 0; j < 2 * plan.p; ++j) s.push_back(poch_zeta_w(2 * plan.m + j + 1, x));
    WideSum sum;
    for (unsigned k = 1; k <= plan.p; ++k) {
        const W ck = to_real<W>(plan.constants[k - 1]);
        for (unsigned j = 0; j < 2 * k; ++j)
            sum.add_scaled(ck * to_real<W>(rational(plan.inner[k - 1][j])), s[j]);
    }
    return {sum.value(), sum.error(), 1};
}

}  // namespace detail

EvalResult zeta_poch_base(unsigned m, double x) {
    require_open_period(x, "zeta_poch_base");
    require_order(m, 1, "m");
    return base_sum(m, W(x)).result();
}

EvalResult zeta_poch_even(unsigned m, double x) {
    require_open_period(x, "zeta_poch_even");
    require_order(m, 1, "m");
    return even_sum(m, W(x)).result();
}

EvalResult zeta_poch_length(unsigned q, double x) {
    require_open_period(x, "zeta_poch_length");
    if (q == 0 || q > 4 * kMaxZetaOrder)
        throw DomainError(ErrorCode::parameter_out_of_range, "zeta_poch_length needs 1 <= q <= 32");
    const auto r = detail::poch_zeta_w(q, W(x));
    detail::WideSum sum;
    sum.add(r.value, r.error, r.terms);
    return sum.result();
}

EvalResult zeta_poch_general(const PochZetaQuery& q) {
    require_order(q.p(), 1, "p");
    const auto plan = heaviside_plan(q.m(), q.p());
    const auto inner = detail::heaviside_sum_w(plan, W(q.x()));
    const W scale = W(1) / pow(W(2), W(q.p() - 1));
    detail::WideSum sum;
    sum.add(scale * inner.value, scale * inner.error, 2 * q.p() * q.p());
    return sum.result();
}

}  // namespace dseries
