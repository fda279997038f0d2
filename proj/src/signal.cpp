#include "brt/signal.hpp"

#include <cmath>
#include <string>

namespace brt {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidSignal: return "InvalidSignal";
        case Errc::NonPositiveLambda: return "NonPositiveLambda";
        case Errc::ScaleCountTooSmall: return "ScaleCountTooSmall";
        case Errc::WindowTooSmall: return "WindowTooSmall";
        case Errc::LambdaCountMismatch: return "LambdaCountMismatch";
        case Errc::DegenerateWeights: return "DegenerateWeights";
        case Errc::MismatchedLengths: return "MismatchedLengths";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::InvalidThreshold: return "InvalidThreshold";
        case Errc::ZeroPowerBaseline: return "ZeroPowerBaseline";
        case Errc::IdenticalSignals: return "IdenticalSignals";
        case Errc::ParseError: return "ParseError";
        case Errc::NonUniformSampling: return "NonUniformSampling";
        case Errc::MissingSampleRate: return "MissingSampleRate";
        case Errc::RateMismatch: return "RateMismatch";
        case Errc::IoError: return "IoError";
        case Errc::EmptyResult: return "EmptyResult";
        case Errc::InvalidSweep: return "InvalidSweep";
    }
    return "Unknown";
}

Signal::Signal(std::vector<double> samples, double sample_rate_hz)
    : samples_(std::move(samples)), rate_(sample_rate_hz) {
    if (samples_.size() < 2) {
        throw Error(Errc::InvalidSignal, "a signal needs at least 2 samples, got " +
                                             std::to_string(samples_.size()));
    }
    if (!(std::isfinite(rate_) && rate_ > 0.0)) {
        throw Error(Errc::InvalidSignal, "sample rate must be positive and finite");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i])) {
            throw Error(Errc::InvalidSignal, "non-finite sample at index " + std::to_string(i));
        }
    }
}

double standard_deviation(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

BrtConfig BrtConfig::defaults_for(const Signal& signal, int n_scales, double window_seconds,
                                  double lambda_multiple) {
    double sd = standard_deviation(signal.samples());
    double lambda = sd > 0.0 ? lambda_multiple * sd : 1.0;
    BrtConfig config;
    config.n_scales = n_scales;
    config.window_seconds = window_seconds;
    config.lambdas.assign(n_scales > 1 ? static_cast<std::size_t>(n_scales - 1) : 0, lambda);
    return config;
}

std::size_t validate_config(const BrtConfig& config, const Signal& signal) {
    if (config.n_scales < 2) {
        throw Error(Errc::ScaleCountTooSmall,
                    "n_scales must be >= 2, got " + std::to_string(config.n_scales));
    }
    if (config.lambdas.size() != static_cast<std::size_t>(config.n_scales - 1)) {
        throw Error(Errc::LambdaCountMismatch,
                    "expected " + std::to_string(config.n_scales - 1) + " lambdas, got " +
                        std::to_string(config.lambdas.size()));
    }
    for (std::size_t j = 0; j < config.lambdas.size(); ++j) {
        double l = config.lambdas[j];
        if (!(std::isfinite(l) && l > 0.0)) {
            throw Error(Errc::NonPositiveLambda, "lambda " + std::to_string(j + 1) +
                                                     " must be positive and finite");
        }
    }
    if (!(std::isfinite(config.window_seconds) && config.window_seconds > 0.0)) {
        throw Error(Errc::WindowTooSmall, "window_seconds must be positive");
    }
    double radius = std::round(config.window_seconds * signal.sample_rate_hz());
    if (radius < 1.0) {
        throw Error(Errc::WindowTooSmall, "window of " + std::to_string(config.window_seconds) +
                                              " s is under one sample at this rate");
    }
    return static_cast<std::size_t>(radius);
}

ResidualStack::ResidualStack(std::vector<Signal> residuals) : residuals_(std::move(residuals)) {
    if (residuals_.empty()) {
        throw Error(Errc::EmptyInput, "a residual stack needs at least one scale");
    }
    const auto& first = residuals_.front();
    for (std::size_t j = 1; j < residuals_.size(); ++j) {
        if (residuals_[j].size() != first.size() ||
            residuals_[j].sample_rate_hz() != first.sample_rate_hz()) {
            throw Error(Errc::MismatchedLengths,
                        "residual " + std::to_string(j + 1) + " disagrees with r1 in length or rate");
        }
    }
}

}  // namespace brt
