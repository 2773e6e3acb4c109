// Closed forms for sum sin(nx+y)/n^s and sum cos(nx+y)/n^s.
#pragma once

#include "dseries/core.hpp"

namespace dseries {

enum class TrigKind { sine, cosine };

std::string_view to_string(TrigKind k) noexcept;

/// Validated query: 0 < x < 2pi and s > 1.
class TrigQuery {
public:
    TrigQuery(double s, double x, double y, TrigKind kind);
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }
    [[nodiscard]] TrigKind kind() const noexcept { return kind_; }

private:
    double s_, x_, y_;
    TrigKind kind_;
};

/// sum_{n>=1} trig(nx+y)/n^s through zeta(1-s, x/2pi) and zeta(1-s, 1-x/2pi).
/// Integer s has no finite form here (sin(pi s) = 0) and is rejected with integer_s.
EvalResult trig_series_closed(const TrigQuery& q);

/// sum_{n>=1} cos(nx)/n^{2m-1} through zeta'(2-2m, .).
EvalResult cos_odd_series(unsigned m, double x);

}  // namespace dseries
