#include "dseries/core.hpp"

#include <sstream>

namespace dseries {

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::euler_maclaurin: return "euler_maclaurin";
        case Method::exact_bernoulli: return "exact_bernoulli";
        case Method::closed_form: return "closed_form";
        case Method::oracle: return "oracle";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

std::string_view to_string(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::pole_at_nonpositive_integer: return "pole_at_nonpositive_integer";
        case ErrorCode::nonpositive_argument: return "nonpositive_argument";
        case ErrorCode::pole: return "pole";
        case ErrorCode::pole_at_one: return "pole_at_one";
        case ErrorCode::pole_at_s_equal_one: return "pole_at_s_equal_one";
        case ErrorCode::integer_s: return "integer_s";
        case ErrorCode::x_out_of_domain: return "x_out_of_domain";
        case ErrorCode::parameter_out_of_range: return "parameter_out_of_range";
        case ErrorCode::argument_out_of_reliable_range: return "argument_out_of_reliable_range";
        case ErrorCode::quadrature_nonconvergence: return "quadrature_nonconvergence";
        case ErrorCode::zero_argument: return "zero_argument";
        case ErrorCode::integer_offset: return "integer_offset";
        case ErrorCode::domain_violation: return "domain_violation";
        case ErrorCode::gamma_pole: return "gamma_pole";
        case ErrorCode::pole_in_prefactor: return "pole_in_prefactor";
        case ErrorCode::zeta_pole: return "zeta_pole";
        case ErrorCode::tail_policy_not_applicable: return "tail_policy_not_applicable";
        case ErrorCode::not_alternating: return "not_alternating";
        case ErrorCode::invalid_config: return "invalid_config";
    }
    return "unknown";
}

void require_open_period(double x, const char* op, ErrorCode code) {
    if (!(x > 0.0 && x < kTwoPi)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << op << " needs 0 < x < 2pi, got x = " << x;
        throw DomainError(code, msg.str());
    }
}

}  // namespace dseries
