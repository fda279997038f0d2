#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "brt/signal.hpp"

namespace brt {

/// Phi^-1(3/4): MAD / kProbit75 estimates the SD of Gaussian data.
inline constexpr double kProbit75 = 0.674489750196081743202227;

/// Median absolute deviation about the sample median. Even-length medians take
/// the midpoint of the two central order statistics.
double mad(std::span<const double> values);

/// theta = MAD(residual) / Phi^-1(3/4).
double noise_threshold(const Signal& residual);

struct ThresholdResult {
    Signal signal;
    std::size_t zeroed = 0;
};

/// Zeroes every sample with |r| < theta; samples with |r| >= theta pass
/// through untouched.
ThresholdResult hard_threshold(const Signal& residual, double theta);

struct DenoiseOptions {
    // Algorithm text loops over every scale including r_n. Off by default:
    // thresholding the coarse approximation deletes the baseline.
    bool threshold_coarsest = false;
};

struct DenoiseResult {
    Signal denoised;
    DenoiseReport report;
};

/// Applies fixed per-scale thresholds to a stack and reconstructs.
/// `thresholds` must hold one non-negative entry per scale.
DenoiseResult apply_thresholds(const ResidualStack& stack, std::span<const double> thresholds);

/// Forward transform, per-scale MAD thresholds, hard thresholding, inverse.
DenoiseResult denoise_signal(const Signal& noisy, const BrtConfig& config,
                             const DenoiseOptions& options = {});

}  // namespace brt
