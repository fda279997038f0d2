#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

#include "brt/signal.hpp"

namespace brt {

/// Variance of the samples: mean-removed mean square.
double signal_power(std::span<const double> samples);
inline double signal_power(const Signal& s) { return signal_power(s.samples()); }

/// SplitMix64 finaliser folded over `parts`; used to derive independent,
/// recomputable seeds from (base seed, indices...).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

/// Standard normal variates: Marsaglia polar method over std::mt19937_64,
/// with uniforms taken from the top 53 bits. Both pieces are fully specified,
/// so the stream for a seed is the same on every conforming platform.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
    double next();

private:
    double uniform_open();  // in (-1, 1)

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// baseline + e, with e ~ N(0, signal_power(baseline) / 10^(snr/10)) i.i.d.
Signal add_white_gaussian(const Signal& baseline, const NoiseSpec& spec);

/// 10 log10(signal_power(baseline) / meanSquare(corrupted - baseline)).
double snr_db(const Signal& baseline, const Signal& corrupted);

enum class SnriStatus {
    Ok,
    PerfectDenoising,  // denoised == baseline; value is +inf
};

struct Snri {
    double db = 0.0;
    SnriStatus status = SnriStatus::Ok;
};

/// 10 log10( sum (noisy - baseline)^2 / sum (denoised - baseline)^2 ).
Snri snr_improvement(const Signal& noisy, const Signal& baseline, const Signal& denoised);

}  // namespace brt
