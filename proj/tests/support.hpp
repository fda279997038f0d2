#pragma once

// Test-only oracles and generators. Nothing here calls into the library's
// implementation paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace brt::testing {

// Literal double loop over every candidate neighbour with explicit bounds
// checks. Arithmetic mirrors the documented form (centre + weighted mean of
// deviations, clamped to the window range) so results compare bit-for-bit.
inline std::vector<double> naive_nw(const std::vector<double>& x, double lambda, long radius) {
    const long n = static_cast<long>(x.size());
    std::vector<double> y(x.size());
    for (long t = 0; t < n; ++t) {
        double num = 0.0, den = 0.0;
        double lo = x[t], hi = x[t];
        for (long i = t - radius; i <= t + radius; ++i) {
            if (i < 0 || i >= n) continue;
            double dev = x[i] - x[t];
            double q = dev / lambda;
            double k = std::exp(-(q * q));
            num += k * dev;
            den += k;
            if (x[i] < lo) lo = x[i];
            if (x[i] > hi) hi = x[i];
        }
        double v = x[t] + num / den;
        y[t] = v < lo ? lo : (v > hi ? hi : v);
    }
    return y;
}

// Textbook Nadaraya-Watson ratio sum(K x) / sum(K), no rewriting.
inline std::vector<double> textbook_nw(const std::vector<double>& x, double lambda, long radius) {
    const long n = static_cast<long>(x.size());
    std::vector<double> y(x.size());
    for (long t = 0; t < n; ++t) {
        long double num = 0.0L, den = 0.0L;
        for (long i = std::max(0L, t - radius); i <= std::min(n - 1, t + radius); ++i) {
            long double d = static_cast<long double>(x[t]) - x[i];
            long double k = std::exp(-(d * d) / (static_cast<long double>(lambda) * lambda));
            num += k * x[i];
            den += k;
        }
        y[t] = static_cast<double>(num / den);
    }
    return y;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Phi^-1(p) by bisection on the CDF.
inline double probit_bisect(double p) {
    double lo = -10.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Median by full sort.
inline double sorted_median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline double sorted_mad(const std::vector<double>& v) {
    const double m = sorted_median(v);
    std::vector<double> d;
    for (double x : v) d.push_back(std::abs(x - m));
    return sorted_median(d);
}

inline std::vector<double> random_samples(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

// Random walk plus jitter: smoother than white noise, exercising both the
// near-identical and far-apart branches of the range kernel.
inline std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n, double step = 1.0) {
    std::normal_distribution<double> g(0.0, step);
    std::vector<double> v(n);
    double acc = 0.0;
    for (auto& x : v) {
        acc += g(rng);
        x = acc + 0.1 * g(rng);
    }
    return v;
}

inline std::vector<double> gaussian_samples(std::mt19937_64& rng, std::size_t n, double sigma) {
    std::normal_distribution<double> g(0.0, sigma);
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace brt::testing
