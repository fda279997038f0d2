#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brt/error.hpp"

namespace brt {

/// Uniformly sampled, single-channel, finite-valued signal.
///
/// Construction validates: at least two samples, all finite, positive rate.
/// Instances are immutable afterwards.
class Signal {
public:
    Signal(std::vector<double> samples, double sample_rate_hz);

    std::span<const double> samples() const noexcept { return samples_; }
    const std::vector<double>& values() const noexcept { return samples_; }
    double sample_rate_hz() const noexcept { return rate_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }

    /// Sample time in seconds, starting at zero.
    double time_at(std::size_t i) const noexcept { return static_cast<double>(i) / rate_; }

private:
    std::vector<double> samples_;
    double rate_;
};

/// Population standard deviation (divides by N).
double standard_deviation(std::span<const double> xs);

struct BrtConfig {
    int n_scales = 6;
    std::vector<double> lambdas;  // one bandwidth per cascade step, n_scales - 1 entries
    double window_seconds = 0.1;

    /// Fills every cascade step with lambda_multiple * SD(signal). A signal
    /// with zero spread gets bandwidth 1, which is irrelevant for it since all
    /// kernel arguments vanish.
    static BrtConfig defaults_for(const Signal& signal, int n_scales = 6,
                                  double window_seconds = 0.1, double lambda_multiple = 1.0);
};

/// Checks `config` against `signal` and returns the window radius in samples,
/// round(window_seconds * sample_rate_hz) with halves rounded away from zero.
std::size_t validate_config(const BrtConfig& config, const Signal& signal);

/// Residuals r_1..r_n of a forward transform, finest first.
class ResidualStack {
public:
    explicit ResidualStack(std::vector<Signal> residuals);

    std::size_t n_scales() const noexcept { return residuals_.size(); }
    std::size_t source_length() const noexcept { return residuals_.front().size(); }
    double sample_rate_hz() const noexcept { return residuals_.front().sample_rate_hz(); }

    /// Zero-based: residual(0) is r_1.
    const Signal& residual(std::size_t j) const { return residuals_.at(j); }
    const std::vector<Signal>& residuals() const noexcept { return residuals_; }

private:
    std::vector<Signal> residuals_;
};

struct DenoiseReport {
    std::vector<double> thresholds;           // theta_j per scale; 0 for an unthresholded scale
    std::vector<std::size_t> zeroed_counts;   // samples set to zero per scale
    bool coarsest_thresholded = false;
    std::optional<double> snri_db;
};

struct NoiseSpec {
    double target_snr_db = 0.0;
    std::uint64_t seed = 0;
};

}  // namespace brt
