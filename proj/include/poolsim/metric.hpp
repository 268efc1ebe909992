#pragma once

#include <span>

namespace poolsim {

/// Product-topology metric on truncated real sequences:
/// d(x, y) = sum_i min{|x(i) - y(i)|, 1} / 2^i, indices from 0.
///
/// Entries beyond either span are treated as zero; callers must ensure the
/// true tails agree. The sum is truncated once the remaining geometric tail
/// bound drops below 1e-12. Range: [0, 2].
double seq_metric(std::span<const double> x, std::span<const double> y);

}  // namespace poolsim
