// Exact integer/rational helpers and conversion to floating scalars.
#pragma once

#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dseries/core.hpp"

namespace dseries {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Nearest Real to an exact rational.
template <class Real>
Real to_real(const rational& r) {
    if constexpr (std::is_floating_point_v<Real>) {
        return r.template convert_to<Real>();
    } else {
        return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
    }
}

integer factorial(unsigned n);
integer binomial(unsigned n, unsigned k);

/// B_n with B_1 = -1/2. Indices up to 64 come from a table built once.
const rational& bernoulli_number(unsigned n);

/// B_0..B_n as Real, memoized per scalar type.
template <class Real>
const std::vector<Real>& bernoulli_table() {
    static const std::vector<Real> table = [] {
        std::vector<Real> t;
        for (unsigned i = 0; i <= 64; ++i) t.push_back(to_real<Real>(bernoulli_number(i)));
        return t;
    }();
    return table;
}

}  // namespace dseries
