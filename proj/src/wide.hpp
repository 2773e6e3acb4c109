// Assembly helpers for closed forms evaluated in wide_real and rounded once.
#pragma once

#include <cstdint>

#include "dseries/core.hpp"
#include "dseries/kernel/zeta.hpp"

namespace dseries::detail {

using W = wide_real;
using WApprox = kernel::Approx<W>;

/// For the few closed forms whose cancellation exceeds what wide_real can absorb.
using W2 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<128>,
                                         boost::multiprecision::et_off>;

template <class Real = W>
Real two_pi_w() {
    return boost::math::constants::two_pi<Real>();
}
template <class Real = W>
Real pi_w() {
    return boost::math::constants::pi<Real>();
}

/// x/2pi with x taken exactly.
inline W period_fraction(double x) { return W(x) / two_pi_w(); }

template <class Real>
kernel::Approx<Real> zeta_w(const Real& s, const Real& a) {
    return kernel::hurwitz_zeta(s, a);
}
template <class Real>
kernel::Approx<Real> zetad_w(const Real& s, const Real& a) {
    return kernel::hurwitz_zeta_sderiv(s, a);
}

/// Compensated sum of wide terms that tracks magnitude, propagated error and work.
template <class Real>
class WideSumT {
    using W = Real;

public:
    void add(const W& term, const W& err = W(0), std::uint64_t terms = 0) {
        using std::abs;
        sum_ += term;
        magnitude_ += abs(term);
        err_ += err;
        terms_ += terms;
    }
    /// coef * approx, propagating the approximation's error.
    void add_scaled(const W& coef, const kernel::Approx<W>& a) {
        using std::abs;
        add(coef * a.value, abs(coef) * a.error, a.terms);
    }
    void count(std::uint64_t terms) { terms_ += terms; }

    [[nodiscard]] W value() const { return sum_.value(); }
    [[nodiscard]] W error() const { return err_ + W(4) * kernel::epsilon<W>() * magnitude_; }

    [[nodiscard]] kernel::Approx<W> approx() const { return {value(), error(), terms_}; }

    [[nodiscard]] EvalResult result(Method m = Method::closed_form) const {
        const double v = value().template convert_to<double>();
        return {v, rounded_error(v, error().template convert_to<double>()), m, terms_ == 0 ? 1 : terms_};
    }

private:
    CompensatedSum<W> sum_;
    W magnitude_ = W(0);
    W err_ = W(0);
    std::uint64_t terms_ = 0;
};

using WideSum = WideSumT<W>;

}  // namespace dseries::detail
