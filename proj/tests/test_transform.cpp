#include <doctest.h>

#include <cmath>
#include <random>

#include "brt/transform.hpp"
#include "support.hpp"

using namespace brt;
using namespace brt::testing;

namespace {

BrtConfig config_with(int n, double lambda, double window) {
    BrtConfig c;
    c.n_scales = n;
    c.lambdas.assign(static_cast<std::size_t>(n - 1), lambda);
    c.window_seconds = window;
    return c;
}

}  // namespace

TEST_CASE("constant input puts everything in the coarsest scale") {
    const Signal s(std::vector<double>(100, 2.5), 128.0);
    const ResidualStack stack = forward_brt(s, BrtConfig::defaults_for(s));
    REQUIRE(stack.n_scales() == 6);
    for (std::size_t j = 0; j + 1 < stack.n_scales(); ++j) {
        for (double v : stack.residual(j).samples()) CHECK(v == 0.0);
    }
    for (double v : stack.residual(5).samples()) CHECK(v == 2.5);
}

TEST_CASE("two-scale hand example") {
    const Signal s({0.0, 1.0, 0.0}, 1.0);
    const ResidualStack stack = forward_brt(s, config_with(2, 1.0, 1.0));
    REQUIRE(stack.n_scales() == 2);
    const double centre = 1.0 / (1.0 + 2.0 * std::exp(-1.0));
    CHECK(stack.residual(1)[1] == doctest::Approx(centre).epsilon(1e-15));
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(stack.residual(0)[t] == s[t] - stack.residual(1)[t]);
    }
}

TEST_CASE("perfect reconstruction on random signals") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t len = 16 + rng() % 1100;
        const auto x = trial % 3 ? random_walk(rng, len, 3.0) : random_samples(rng, len, 1e3);
        const Signal f(x, 128.0);
        const int n = 2 + static_cast<int>(rng() % 7);
        BrtConfig c = BrtConfig::defaults_for(f, n, 0.02 + 0.01 * (rng() % 10));
        for (double& l : c.lambdas) l *= 0.25 + static_cast<double>(rng() % 8) * 0.25;
        const ResidualStack stack = forward_brt(f, c);
        CHECK(stack.n_scales() == static_cast<std::size_t>(n));
        const Signal back = inverse_brt(stack);
        CHECK(max_abs_diff(back.values(), x) <= 1e-9 * std::max(1.0, max_abs(x)));
    }
}

TEST_CASE("round trip at the default length") {
    std::mt19937_64 rng(1028);
    const auto x = random_walk(rng, 1028);
    const Signal f(x, 128.0);
    const Signal back = inverse_brt(forward_brt(f, BrtConfig::defaults_for(f)));
    CHECK(max_abs_diff(back.values(), x) <= 1e-9 * std::max(1.0, max_abs(x)));
}

TEST_CASE("each smoothing step stays inside the previous range") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Signal f(random_walk(rng, 400), 100.0);
        const BrtConfig c = BrtConfig::defaults_for(f, 6, 0.05);
        const std::size_t w = validate_config(c, f);
        std::vector<double> cur = f.values();
        for (double lambda : c.lambdas) {
            std::vector<double> next(cur.size());
            nw_smooth_serial(cur, next, {lambda, w});
            CHECK(*std::max_element(next.begin(), next.end()) <=
                  *std::max_element(cur.begin(), cur.end()));
            CHECK(*std::min_element(next.begin(), next.end()) >=
                  *std::min_element(cur.begin(), cur.end()));
            cur = next;
        }
        // The cascade's last smoothed signal is r_n.
        CHECK(forward_brt(f, c).residual(5).values() == cur);
    }
}

TEST_CASE("coarse_sum reproduces the cascade intermediates") {
    std::mt19937_64 rng(8);
    const Signal f(random_walk(rng, 300), 100.0);
    const BrtConfig c = BrtConfig::defaults_for(f, 5, 0.05);
    const std::size_t w = validate_config(c, f);
    const ResidualStack stack = forward_brt(f, c);

    std::vector<double> cur = f.values();
    for (std::size_t j = 0; j < stack.n_scales(); ++j) {
        const Signal partial = coarse_sum(stack, j);
        CHECK(max_abs_diff(partial.values(), cur) <= 1e-9 * std::max(1.0, max_abs(cur)));
        if (j + 1 < stack.n_scales()) {
            std::vector<double> next(cur.size());
            nw_smooth_serial(cur, next, {c.lambdas[j], w});
            cur = next;
        }
    }
    CHECK_THROWS_AS(coarse_sum(stack, 5), std::out_of_range);
}

TEST_CASE("shift equivariance of the cascade") {
    std::mt19937_64 rng(17);
    const auto x = random_walk(rng, 256);
    const double shift = 42.5;
    std::vector<double> xs = x;
    for (double& v : xs) v += shift;
    const Signal f(x, 128.0), fs(xs, 128.0);
    const BrtConfig c = BrtConfig::defaults_for(f);  // same lambdas for both
    const ResidualStack a = forward_brt(f, c), b = forward_brt(fs, c);
    const double tol = 1e-9 * (max_abs(xs) + 1.0);
    for (std::size_t j = 0; j + 1 < a.n_scales(); ++j) {
        CHECK(max_abs_diff(a.residual(j).values(), b.residual(j).values()) <= tol);
    }
    std::vector<double> last = a.residual(5).values();
    for (double& v : last) v += shift;
    CHECK(max_abs_diff(last, b.residual(5).values()) <= tol);
}

TEST_CASE("determinism") {
    std::mt19937_64 rng(23);
    const Signal f(random_walk(rng, 700), 128.0);
    const BrtConfig c = BrtConfig::defaults_for(f);
    const ResidualStack a = forward_brt(f, c), b = forward_brt(f, c);
    for (std::size_t j = 0; j < a.n_scales(); ++j) CHECK(a.residual(j).values() == b.residual(j).values());
}

TEST_CASE("inverse examples") {
    const ResidualStack simple({Signal({1.0, 2.0}, 1.0), Signal({3.0, 4.0}, 1.0)});
    CHECK(inverse_brt(simple).values() == std::vector<double>{4.0, 6.0});

    const ResidualStack zeros({Signal({0.0, 0.0, 0.0}, 2.0), Signal({0.0, 0.0, 0.0}, 2.0),
                               Signal({0.0, 0.0, 0.0}, 2.0)});
    const Signal z = inverse_brt(zeros);
    CHECK(z.values() == std::vector<double>(3, 0.0));
    CHECK(z.sample_rate_hz() == 2.0);
}

TEST_CASE("forward_brt propagates config errors") {
    const Signal f({1.0, 2.0, 3.0}, 128.0);
    BrtConfig bad = BrtConfig::defaults_for(f);
    bad.lambdas.pop_back();
    CHECK_THROWS_AS(forward_brt(f, bad), Error);
}
