// Value types shared by every dseries module.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

namespace dseries {

/// Working type for cancellation-prone closed forms (64 decimal digits).
using wide_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                                boost::multiprecision::et_off>;

enum class Method { euler_maclaurin, exact_bernoulli, closed_form, oracle, quadrature };

std::string_view to_string(Method m) noexcept;

/// A computed value with an error estimate and work counter.
///
/// est_abs_error is finite and nonnegative; terms_used is positive unless the
/// value came from an exact Bernoulli path.
struct EvalResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    Method method = Method::closed_form;
    std::uint64_t terms_used = 0;
};

enum class ErrorCode {
    pole_at_nonpositive_integer,
    nonpositive_argument,
    pole,
    pole_at_one,
    pole_at_s_equal_one,
    integer_s,
    x_out_of_domain,
    parameter_out_of_range,
    argument_out_of_reliable_range,
    quadrature_nonconvergence,
    zero_argument,
    integer_offset,
    domain_violation,
    gamma_pole,
    pole_in_prefactor,
    zeta_pole,
    tail_policy_not_applicable,
    not_alternating,
    invalid_config,
};

std::string_view to_string(ErrorCode c) noexcept;

/// Raised when an operation's precondition is violated.
class DomainError : public std::domain_error {
public:
    DomainError(ErrorCode code, const std::string& what)
        : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Neumaier's variant of Kahan summation over any ordered field type.
template <class Real>
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(const Real& init) : sum_(init) {}

    CompensatedSum& operator+=(const Real& v) {
        using std::abs;
        const Real t = sum_ + v;
        if (abs(sum_) >= abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
        return *this;
    }
    CompensatedSum& operator-=(const Real& v) { return *this += Real(-v); }

    [[nodiscard]] Real value() const { return sum_ + comp_; }

private:
    Real sum_ = Real(0);
    Real comp_ = Real(0);
};

/// 0 < x < 2pi, the open domain shared by all trigonometric and Bessel series.
void require_open_period(double x, const char* op, ErrorCode code = ErrorCode::x_out_of_domain);

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Half an ulp of v plus a propagated error, for results rounded from wide.
inline double rounded_error(double v, double propagated) {
    return std::abs(v) * 0x1p-53 + std::abs(propagated);
}

}  // namespace dseries
