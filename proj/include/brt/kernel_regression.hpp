#pragma once

#include <cstddef>
#include <span>

#include "brt/signal.hpp"

namespace brt {

struct KernelStepParams {
    double lambda = 1.0;             // Gaussian range-kernel bandwidth, amplitude units
    std::size_t window_radius = 1;   // neighbours enter from [t - radius, t + radius]
};

void validate(const KernelStepParams& params);

// Nadaraya-Watson smoothing with K(d) = exp(-d^2 / lambda^2) over a box window
// clipped at the signal edges. The estimate is accumulated as the centre
// sample plus the weighted mean of deviations from it, then clamped to the
// window's [min, max]; both are exact rewrites of sum(K x) / sum(K) that keep
// constants fixed and outputs inside the window's range under rounding.
//
// The serial and OpenMP kernels share the per-sample routine and so agree
// bit-for-bit. `out` must not alias `in`.
void nw_smooth_serial(std::span<const double> in, std::span<double> out,
                      const KernelStepParams& params);
void nw_smooth_parallel(std::span<const double> in, std::span<double> out,
                        const KernelStepParams& params);

/// Smooths a whole signal with the parallel kernel.
Signal nw_smooth(const Signal& input, const KernelStepParams& params);

}  // namespace brt
