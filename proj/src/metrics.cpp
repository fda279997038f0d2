#include "brt/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace brt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_same_length(const Signal& a, const Signal& b, const char* what) {
    if (a.size() != b.size()) {
        throw Error(Errc::MismatchedLengths, std::string(what) + ": lengths " +
                                                 std::to_string(a.size()) + " and " +
                                                 std::to_string(b.size()) + " differ");
    }
}

double sum_sq_error(const Signal& x, const Signal& reference) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = x[i] - reference[i];
        acc += e * e;
    }
    return acc;
}

}  // namespace

double signal_power(std::span<const double> samples) {
    if (samples.empty()) return 0.0;
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= static_cast<double>(samples.size());
    double acc = 0.0;
    for (double x : samples) acc += (x - mean) * (x - mean);
    return acc / static_cast<double>(samples.size());
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

double GaussianSource::uniform_open() {
    // (k + 0.5) / 2^53 lies strictly inside (0, 1).
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

double GaussianSource::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = uniform_open();
        v = uniform_open();
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

Signal add_white_gaussian(const Signal& baseline, const NoiseSpec& spec) {
    if (!std::isfinite(spec.target_snr_db)) {
        throw Error(Errc::InvalidSignal, "target SNR must be finite");
    }
    const double power = signal_power(baseline);
    if (!(power > 0.0)) {
        throw Error(Errc::ZeroPowerBaseline, "cannot set an SNR against a constant baseline");
    }
    const double sigma = std::sqrt(power / std::pow(10.0, spec.target_snr_db / 10.0));
    GaussianSource gauss(spec.seed);
    std::vector<double> out = baseline.values();
    for (double& x : out) x += sigma * gauss.next();
    return Signal(std::move(out), baseline.sample_rate_hz());
}

double snr_db(const Signal& baseline, const Signal& corrupted) {
    require_same_length(baseline, corrupted, "snr_db");
    const double power = signal_power(baseline);
    if (!(power > 0.0)) {
        throw Error(Errc::ZeroPowerBaseline, "SNR against a constant baseline is undefined");
    }
    const double err = sum_sq_error(corrupted, baseline) / static_cast<double>(baseline.size());
    if (err == 0.0) {
        throw Error(Errc::IdenticalSignals, "corrupted signal equals the baseline");
    }
    return 10.0 * std::log10(power / err);
}

Snri snr_improvement(const Signal& noisy, const Signal& baseline, const Signal& denoised) {
    require_same_length(noisy, baseline, "snr_improvement");
    require_same_length(denoised, baseline, "snr_improvement");
    const double before = sum_sq_error(noisy, baseline);
    const double after = sum_sq_error(denoised, baseline);
    if (after == 0.0) {
        return {std::numeric_limits<double>::infinity(), SnriStatus::PerfectDenoising};
    }
    return {10.0 * std::log10(before / after), SnriStatus::Ok};
}

}  // namespace brt
