#include <doctest.h>

#include <cmath>
#include <limits>

#include "brt/signal.hpp"

using namespace brt;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected brt::Error");
    return Errc::IoError;
}

Signal ramp(std::size_t n, double rate) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i);
    return Signal(v, rate);
}

}  // namespace

TEST_CASE("Signal rejects invalid construction") {
    CHECK(code_of([] { Signal({1.0}, 128.0); }) == Errc::InvalidSignal);
    CHECK(code_of([] { Signal({1.0, std::nan("")}, 128.0); }) == Errc::InvalidSignal);
    CHECK(code_of([] { Signal({1.0, std::numeric_limits<double>::infinity()}, 128.0); }) ==
          Errc::InvalidSignal);
    CHECK(code_of([] { Signal({1.0, 2.0}, 0.0); }) == Errc::InvalidSignal);
    CHECK(code_of([] { Signal({1.0, 2.0}, -5.0); }) == Errc::InvalidSignal);

    Signal s({1.0, 2.0, 3.0}, 4.0);
    CHECK(s.size() == 3);
    CHECK(s.time_at(2) == doctest::Approx(0.5));
}

TEST_CASE("validate_config: default window at 128 Hz rounds 12.8 to 13 samples") {
    const Signal s = ramp(64, 128.0);
    BrtConfig c;
    c.n_scales = 6;
    c.lambdas.assign(5, standard_deviation(s.samples()));
    c.window_seconds = 0.1;
    CHECK(validate_config(c, s) == 13);
}

TEST_CASE("validate_config error paths") {
    const Signal s = ramp(64, 128.0);

    BrtConfig one;
    one.n_scales = 1;
    CHECK(code_of([&] { validate_config(one, s); }) == Errc::ScaleCountTooSmall);

    BrtConfig mismatch;
    mismatch.n_scales = 3;
    mismatch.lambdas = {1.0};
    CHECK(code_of([&] { validate_config(mismatch, s); }) == Errc::LambdaCountMismatch);

    BrtConfig negative;
    negative.n_scales = 3;
    negative.lambdas = {1.0, -0.5};
    CHECK(code_of([&] { validate_config(negative, s); }) == Errc::NonPositiveLambda);

    BrtConfig zero = negative;
    zero.lambdas = {0.0, 1.0};
    CHECK(code_of([&] { validate_config(zero, s); }) == Errc::NonPositiveLambda);

    // 0.003 s * 128 Hz = 0.384 samples, rounds to zero
    BrtConfig narrow;
    narrow.n_scales = 2;
    narrow.lambdas = {1.0};
    narrow.window_seconds = 0.003;
    CHECK(code_of([&] { validate_config(narrow, s); }) == Errc::WindowTooSmall);

    // 0.004 s * 128 Hz = 0.512, rounds up to one sample
    narrow.window_seconds = 0.004;
    CHECK(validate_config(narrow, s) == 1);
}

TEST_CASE("validate_config is pure") {
    const Signal s = ramp(100, 250.0);
    const BrtConfig c = BrtConfig::defaults_for(s, 4, 0.05);
    const auto first = validate_config(c, s);
    for (int i = 0; i < 5; ++i) CHECK(validate_config(c, s) == first);
    CHECK(first == 13);  // 12.5 rounds away from zero
}

TEST_CASE("defaults_for fills every step with the input SD") {
    const Signal s({1.0, -1.0, 1.0, -1.0}, 10.0);
    const BrtConfig c = BrtConfig::defaults_for(s);
    CHECK(c.n_scales == 6);
    CHECK(c.window_seconds == 0.1);
    REQUIRE(c.lambdas.size() == 5);
    for (double l : c.lambdas) CHECK(l == 1.0);

    const BrtConfig half = BrtConfig::defaults_for(s, 3, 0.2, 0.5);
    REQUIRE(half.lambdas.size() == 2);
    CHECK(half.lambdas[0] == 0.5);

    const BrtConfig flat = BrtConfig::defaults_for(Signal({2.0, 2.0, 2.0}, 1.0));
    for (double l : flat.lambdas) CHECK(l > 0.0);
}

TEST_CASE("ResidualStack enforces shape") {
    CHECK(code_of([] { ResidualStack(std::vector<Signal>{}); }) == Errc::EmptyInput);
    CHECK(code_of([] {
              ResidualStack({Signal({1.0, 2.0}, 1.0), Signal({1.0, 2.0, 3.0}, 1.0)});
          }) == Errc::MismatchedLengths);
    CHECK(code_of([] {
              ResidualStack({Signal({1.0, 2.0}, 1.0), Signal({1.0, 2.0}, 2.0)});
          }) == Errc::MismatchedLengths);
    ResidualStack ok({Signal({1.0, 2.0}, 1.0), Signal({3.0, 4.0}, 1.0)});
    CHECK(ok.n_scales() == 2);
    CHECK(ok.source_length() == 2);
}
