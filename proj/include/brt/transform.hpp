#pragma once

#include <cstddef>

#include "brt/kernel_regression.hpp"
#include "brt/signal.hpp"

namespace brt {

/// Forward transform: a cascade of n-1 kernel-regression smoothings.
///
/// Starting from s_1 = f, each step computes s_{j+1} = nw_smooth(s_j, lambda_j)
/// and keeps r_j = s_j - s_{j+1}; the last smoothed signal becomes r_n, so the
/// residuals telescope back to f.
ResidualStack forward_brt(const Signal& signal, const BrtConfig& config);

/// Inverse transform: the pointwise sum of every residual.
Signal inverse_brt(const ResidualStack& stack);

/// Sum of residuals from zero-based scale `first_scale` through r_n, i.e. the
/// cascade's smoothed signal entering that scale. coarse_sum(stack, 0) is the
/// full reconstruction.
Signal coarse_sum(const ResidualStack& stack, std::size_t first_scale);

}  // namespace brt
