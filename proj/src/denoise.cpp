#include "brt/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "brt/transform.hpp"

namespace brt {

namespace {

// Median of `v`, reordering it in place.
double median_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return lower + (upper - lower) / 2.0;
}

}  // namespace

double mad(std::span<const double> values) {
    if (values.empty()) throw Error(Errc::EmptyInput, "MAD of an empty sequence");
    std::vector<double> work(values.begin(), values.end());
    const double centre = median_inplace(work);
    for (std::size_t i = 0; i < values.size(); ++i) work[i] = std::abs(values[i] - centre);
    return median_inplace(work);
}

double noise_threshold(const Signal& residual) { return mad(residual.samples()) / kProbit75; }

ThresholdResult hard_threshold(const Signal& residual, double theta) {
    if (!(theta >= 0.0) || std::isinf(theta)) {
        throw Error(Errc::InvalidThreshold, "threshold must be finite and non-negative");
    }
    std::vector<double> out = residual.values();
    std::size_t zeroed = 0;
    for (double& v : out) {
        if (std::abs(v) < theta) {
            v = 0.0;
            ++zeroed;
        }
    }
    return {Signal(std::move(out), residual.sample_rate_hz()), zeroed};
}

DenoiseResult apply_thresholds(const ResidualStack& stack, std::span<const double> thresholds) {
    if (thresholds.size() != stack.n_scales()) {
        throw Error(Errc::MismatchedLengths, "expected " + std::to_string(stack.n_scales()) +
                                                 " thresholds, got " +
                                                 std::to_string(thresholds.size()));
    }
    DenoiseReport report;
    report.thresholds.assign(thresholds.begin(), thresholds.end());
    report.zeroed_counts.reserve(stack.n_scales());

    std::vector<Signal> kept;
    kept.reserve(stack.n_scales());
    for (std::size_t j = 0; j < stack.n_scales(); ++j) {
        auto [signal, zeroed] = hard_threshold(stack.residual(j), thresholds[j]);
        kept.push_back(std::move(signal));
        report.zeroed_counts.push_back(zeroed);
    }
    return {inverse_brt(ResidualStack(std::move(kept))), std::move(report)};
}

DenoiseResult denoise_signal(const Signal& noisy, const BrtConfig& config,
                             const DenoiseOptions& options) {
    const ResidualStack stack = forward_brt(noisy, config);
    const std::size_t n = stack.n_scales();

    std::vector<double> thresholds(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j + 1 == n && !options.threshold_coarsest) break;
        thresholds[j] = noise_threshold(stack.residual(j));
    }
    DenoiseResult result = apply_thresholds(stack, thresholds);
    result.report.coarsest_thresholded = options.threshold_coarsest;
    return result;
}

}  // namespace brt
