#pragma once

#include <cstdint>

namespace poolsim {

/// Control parameter alpha, either a fixed value or the scaling form
/// alpha_n = 1 - n^{-exponent}.
struct AlphaRule {
    enum class Kind { value, exponent };

    Kind kind = Kind::value;
    double param = 0.9;

    double value(std::int64_t n) const;  // effective alpha_n, validated in (0,1)

    // True iff count_at_ell <= alpha_n * n, evaluated without forming the
    // product: the exponent form compares n - count >= n^{1-e} instead, which
    // keeps the inequality sharp on the 1/n grid.
    bool decrease_triggered(std::int64_t count_at_ell, std::int64_t n) const;

    bool operator==(const AlphaRule&) const = default;
};

/// Threshold state of the outer control loop.
struct PolicyState {
    int ell = 0;    // non-negative multiple of delta
    int delta = 1;  // step size, >= 1
    AlphaRule alpha;

    int h() const noexcept { return ell + delta; }

    void validate() const;

    bool operator==(const PolicyState&) const = default;
};

}  // namespace poolsim
