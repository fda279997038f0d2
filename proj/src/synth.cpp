#include "brt/synth.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace brt {

namespace {

void check_spec(const SynthSpec& spec) {
    if (spec.length < 2) throw Error(Errc::InvalidSignal, "synthetic signals need length >= 2");
    if (!(std::isfinite(spec.amplitude) && spec.amplitude > 0.0)) {
        throw Error(Errc::InvalidSignal, "amplitude must be positive");
    }
    if (!(std::isfinite(spec.sample_rate_hz) && spec.sample_rate_hz > 0.0)) {
        throw Error(Errc::InvalidSignal, "sample rate must be positive");
    }
}

}  // namespace

Signal periodic_signal(const SynthSpec& spec) {
    check_spec(spec);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> x(spec.length);
    for (std::size_t k = 0; k < spec.length; ++k) {
        const double t = static_cast<double>(k) / spec.sample_rate_hz;
        x[k] = spec.amplitude * (std::sin(two_pi * kPeriodicFreqLowHz * t) +
                                 kPeriodicHighWeight * std::sin(two_pi * kPeriodicFreqHighHz * t));
    }
    return Signal(std::move(x), spec.sample_rate_hz);
}

std::array<std::size_t, 6> piecewise_breakpoints(std::size_t length) {
    std::array<std::size_t, 6> b{};
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = length * kPiecewiseBreakPercent[i] / 100;
    return b;
}

Signal piecewise_regular_signal(const SynthSpec& spec) {
    check_spec(spec);
    const double a = spec.amplitude;
    const auto b = piecewise_breakpoints(spec.length);
    std::vector<double> x(spec.length);
    for (std::size_t k = 0; k < spec.length; ++k) {
        if (k < b[1]) {
            x[k] = 0.75 * a;
        } else if (k < b[2]) {
            const double u = static_cast<double>(k - b[1]) / static_cast<double>(b[2] - b[1]);
            x[k] = a * (-0.5 + 1.5 * u);
        } else if (k < b[3]) {
            const double u = static_cast<double>(k - b[2]) / static_cast<double>(b[3] - b[2]);
            x[k] = 0.8 * a * std::sin(2.0 * std::numbers::pi * 2.0 * u);
        } else if (k < b[4]) {
            x[k] = -a;
        } else if (k < b[5]) {
            x[k] = 1.5 * a;
        } else {
            x[k] = 0.25 * a;
        }
    }
    return Signal(std::move(x), spec.sample_rate_hz);
}

Signal synthesize(const SynthSpec& spec) {
    switch (spec.kind) {
        case SynthKind::Periodic: return periodic_signal(spec);
        case SynthKind::PiecewiseRegular: return piecewise_regular_signal(spec);
    }
    throw Error(Errc::InvalidSignal, "unknown synthetic signal kind");
}

}  // namespace brt
