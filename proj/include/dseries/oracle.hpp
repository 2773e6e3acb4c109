// Brute-force partial sums with rigorous tail bounds. These are the reference
// values every closed form is checked against.
#pragma once

#include <cstdint>
#include <optional>

#include "dseries/core.hpp"
#include "dseries/trigsum.hpp"

namespace dseries {

enum class Acceleration { none, aitken, euler_alternating };
enum class TailPolicy { geometric_bound, integral_bound, alternating_bound };

std::string_view to_string(Acceleration a) noexcept;
std::string_view to_string(TailPolicy t) noexcept;

inline constexpr std::uint64_t kMaxOracleTerms = 100'000'000;
/// General-order Bessel oracles stop here.
inline constexpr std::uint64_t kGeneralBesselTermCap = 1'000'000;

struct OracleConfig {
    std::uint64_t max_terms = 1'000'000;
    double target_tol = 1e-10;
    Acceleration acceleration = Acceleration::none;
    /// Unset means the series' natural bound (Dirichlet, geometric or Bessel envelope).
    std::optional<TailPolicy> tail_policy;

    /// Throws DomainError(invalid_config) unless 1 <= max_terms <= 1e8 and target_tol >= 1e-15.
    void validate() const;
};

struct OracleReport {
    double value = 0.0;
    double tail_bound = 0.0;
    std::uint64_t terms_used = 0;
    bool converged = false;
};

/// sum_{n>=1} trig(nx+y)/n^s for s > 0, 0 < x < 2pi.
OracleReport sum_trig(TrigKind kind, double s, double x, double y, const OracleConfig& cfg = {});

/// Weight of the zeta-Pochhammer series sum_n w(n) zeta(2n) (x/2pi)^{2n}.
struct ZetaPochWeight {
    enum class Kind { base, even, general };
    Kind kind;
    unsigned m;
    unsigned p = 0;

    static ZetaPochWeight base(unsigned m) { return {Kind::base, m, 0}; }            // 1/(2n)_{2m-1}
    static ZetaPochWeight even(unsigned m) { return {Kind::even, m, 0}; }            // 1/(2n)_{2m}
    static ZetaPochWeight length(unsigned q);                                        // 1/(2n)_q
    static ZetaPochWeight general(unsigned m, unsigned p) { return {Kind::general, m, p}; }  // (m+n)_p/(2n)_{2p+2m}
};

OracleReport sum_zeta_poch(const ZetaPochWeight& w, double x, const OracleConfig& cfg = {});

/// Which Bessel function the terms use.
struct BesselKind {
    enum class Kind { cylindrical, spherical };
    Kind kind;
    double nu = 0.0;
    unsigned p = 0;

    static BesselKind J(double nu) { return {Kind::cylindrical, nu, 0}; }
    static BesselKind spherical(unsigned p) { return {Kind::spherical, 0.0, p}; }
};

/// sum_{n>=1} f(nx)/n^exponent with f = J_nu (nu > -1/2) or j_p.
/// Half-integer orders use exact trigonometric forms; other orders cap N at 1e6.
OracleReport sum_bessel(const BesselKind& kind, double exponent, double x, const OracleConfig& cfg = {});

/// J_nu(z) as the Bessel oracle evaluates it, for z > 0.
double oracle_bessel_j(double nu, double z);

}  // namespace dseries
