// Finite closed forms for Pochhammer-weighted zeta series
//   S_q(x) = sum_{n>=1} zeta(2n)/(2n)_q (x/2pi)^{2n}
// and for the general weight (m+n)_p/(2n)_{2p+2m}.
#pragma once

#include <vector>

#include "dseries/core.hpp"
#include "dseries/rational.hpp"

namespace dseries {

/// m and p above this are rejected.
inline constexpr unsigned kMaxZetaOrder = 8;

/// Validated (m, p, x): m >= 1, p >= 0, 0 < x < 2pi.
class PochZetaQuery {
public:
    PochZetaQuery(unsigned m, unsigned p, double x);
    [[nodiscard]] unsigned m() const noexcept { return m_; }
    [[nodiscard]] unsigned p() const noexcept { return p_; }
    [[nodiscard]] double x() const noexcept { return x_; }

private:
    unsigned m_, p_;
    double x_;
};

/// Partial fractions of 1/Q(n), Q(n) = prod_{k=1..p} (2n+2m+2k-1), and the
/// coefficients that split 1/((2n)_{2m}(2n+2m+2k-1)) into 1/(2n)_{2m+j+1} terms.
struct PartialFractionPlan {
    unsigned m = 0;
    unsigned p = 0;
    std::vector<rational> roots;                  // a_k = -(2m+2k-1)/2
    std::vector<rational> constants;              // C_k = 1/Q'(a_k)
    std::vector<std::vector<integer>> inner;      // inner[k-1][j] = (-1)^j prod_{i=1..j} (2k-i)

    /// sum_k C_k Q(n)/(n - a_k); equals 1 for every n.
    [[nodiscard]] rational reconstruct(const rational& n) const;
    /// Q(n).
    [[nodiscard]] rational q_poly(const rational& n) const;
};

PartialFractionPlan heaviside_plan(unsigned m, unsigned p);

/// S_{2m-1}(x).
EvalResult zeta_poch_base(unsigned m, double x);
/// S_{2m}(x).
EvalResult zeta_poch_even(unsigned m, double x);
/// S_q(x), dispatching on the parity of q.
EvalResult zeta_poch_length(unsigned q, double x);
/// sum_{n>=1} (m+n)_p/(2n)_{2p+2m} zeta(2n)(x/2pi)^{2n}
///   = 2^{1-p} sum_k C_k sum_j inner[k][j] S_{2m+j+1}(x).
EvalResult zeta_poch_general(const PochZetaQuery& q);

}  // namespace dseries
