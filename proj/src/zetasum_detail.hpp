#pragma once

#include "dseries/zetasum.hpp"
#include "wide.hpp"

namespace dseries::detail {

/// S_q(x) in wide precision, q >= 1.
WApprox poch_zeta_w(unsigned q, const W& x);

/// sum_k C_k sum_j inner[k][j] S_{2m+j+1}(x), without any prefactor.
WApprox heaviside_sum_w(const PartialFractionPlan& plan, const W& x);

}  // namespace dseries::detail
