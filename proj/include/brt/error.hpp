#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brt {

enum class Errc {
    InvalidSignal,
    NonPositiveLambda,
    ScaleCountTooSmall,
    WindowTooSmall,
    LambdaCountMismatch,
    DegenerateWeights,
    MismatchedLengths,
    EmptyInput,
    InvalidThreshold,
    ZeroPowerBaseline,
    IdenticalSignals,
    ParseError,
    NonUniformSampling,
    MissingSampleRate,
    RateMismatch,
    IoError,
    EmptyResult,
    InvalidSweep,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library surfaces as this exception; code() is what
// callers dispatch on.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace brt
