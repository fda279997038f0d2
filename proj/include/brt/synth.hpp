#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "brt/signal.hpp"

namespace brt {

enum class SynthKind { Periodic, PiecewiseRegular };

struct SynthSpec {
    SynthKind kind = SynthKind::Periodic;
    std::size_t length = 1280;  // 10 s at the default rate
    double sample_rate_hz = 128.0;
    std::uint64_t seed = 0;     // reserved for randomized variants; the defaults are deterministic
    double amplitude = 1.0;
};

// Periodic test signal:
//   x(t) = A [sin(2 pi 1.7 t) + 0.5 sin(2 pi 4.1 t)],  t = k / rate.
// The two tones share a 10 s common period.
inline constexpr double kPeriodicFreqLowHz = 1.7;
inline constexpr double kPeriodicFreqHighHz = 4.1;
inline constexpr double kPeriodicHighWeight = 0.5;

Signal periodic_signal(const SynthSpec& spec);

// Piece-wise regular test signal. Segment starts, as indices into the signal,
// are floor(length * {0, 15, 35, 60, 80, 90} / 100):
//
//   [0]  plateau          +0.75 A
//   [1]  linear ramp      -0.5 A -> +1.0 A
//   [2]  sine burst       0.8 A sin(2 pi * 2 * u), u in [0, 1) across the segment
//   [3]  plateau          -1.0 A
//   [4]  plateau          +1.5 A
//   [5]  plateau          +0.25 A
//
// Segments 1, 3, 4 and 5 begin with a jump of at least 0.5 A (1.25 A, 1.0 A,
// 2.5 A, 1.25 A respectively) once length is large enough for every segment to
// be non-empty (length >= 20).
inline constexpr std::array<std::size_t, 6> kPiecewiseBreakPercent{0, 15, 35, 60, 80, 90};

std::array<std::size_t, 6> piecewise_breakpoints(std::size_t length);
Signal piecewise_regular_signal(const SynthSpec& spec);

/// Dispatches on spec.kind.
Signal synthesize(const SynthSpec& spec);

}  // namespace brt
