#include "brt/kernel_regression.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace brt {

namespace {

// Below this length the fork/join cost outweighs the work.
constexpr std::size_t kParallelMinLength = 512;

inline double smooth_at(std::span<const double> x, std::size_t t, double lambda,
                        std::size_t radius) {
    const std::size_t lo = t > radius ? t - radius : 0;
    const std::size_t hi = std::min(x.size() - 1, t + radius);
    const double centre = x[t];

    double weighted_dev = 0.0;
    double weight_sum = 0.0;
    double lo_val = centre;
    double hi_val = centre;
    for (std::size_t i = lo; i <= hi; ++i) {
        const double dev = x[i] - centre;
        const double q = dev / lambda;
        const double k = std::exp(-(q * q));
        weighted_dev += k * dev;
        weight_sum += k;
        lo_val = std::min(lo_val, x[i]);
        hi_val = std::max(hi_val, x[i]);
    }
    if (!(weight_sum > 0.0)) {
        throw Error(Errc::DegenerateWeights, "kernel weights vanished at sample " + std::to_string(t));
    }
    return std::clamp(centre + weighted_dev / weight_sum, lo_val, hi_val);
}

void check_spans(std::span<const double> in, std::span<double> out) {
    if (in.size() != out.size()) {
        throw Error(Errc::MismatchedLengths, "output span length differs from input");
    }
}

}  // namespace

void validate(const KernelStepParams& params) {
    if (!(std::isfinite(params.lambda) && params.lambda > 0.0)) {
        throw Error(Errc::NonPositiveLambda, "lambda must be positive and finite");
    }
    if (params.window_radius < 1) {
        throw Error(Errc::WindowTooSmall, "window radius must be at least one sample");
    }
}

void nw_smooth_serial(std::span<const double> in, std::span<double> out,
                      const KernelStepParams& params) {
    validate(params);
    check_spans(in, out);
    for (std::size_t t = 0; t < in.size(); ++t) {
        out[t] = smooth_at(in, t, params.lambda, params.window_radius);
    }
}

void nw_smooth_parallel(std::span<const double> in, std::span<double> out,
                        const KernelStepParams& params) {
    validate(params);
    check_spans(in, out);
    const auto n = static_cast<std::ptrdiff_t>(in.size());
    const double lambda = params.lambda;
    const std::size_t radius = params.window_radius;

    // Exceptions may not escape an OpenMP region; remember the first failure.
    bool degenerate = false;
#pragma omp parallel for schedule(static) if (in.size() >= kParallelMinLength)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        try {
            out[static_cast<std::size_t>(t)] =
                smooth_at(in, static_cast<std::size_t>(t), lambda, radius);
        } catch (const Error&) {
#pragma omp atomic write
            degenerate = true;
        }
    }
    if (degenerate) {
        throw Error(Errc::DegenerateWeights, "kernel weights vanished");
    }
}

Signal nw_smooth(const Signal& input, const KernelStepParams& params) {
    std::vector<double> out(input.size());
    nw_smooth_parallel(input.samples(), out, params);
    return Signal(std::move(out), input.sample_rate_hz());
}

}  // namespace brt
