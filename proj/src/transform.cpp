#include "brt/transform.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brt {

ResidualStack forward_brt(const Signal& signal, const BrtConfig& config) {
    const std::size_t radius = validate_config(config, signal);
    const std::size_t len = signal.size();
    const double rate = signal.sample_rate_hz();

    std::vector<Signal> residuals;
    residuals.reserve(static_cast<std::size_t>(config.n_scales));

    std::vector<double> current = signal.values();
    std::vector<double> next(len);
    for (int j = 0; j + 1 < config.n_scales; ++j) {
        nw_smooth_parallel(current, next, {config.lambdas[static_cast<std::size_t>(j)], radius});
        std::vector<double> r(len);
        for (std::size_t t = 0; t < len; ++t) r[t] = current[t] - next[t];
        residuals.emplace_back(std::move(r), rate);
        std::swap(current, next);
    }
    residuals.emplace_back(std::move(current), rate);
    return ResidualStack(std::move(residuals));
}

Signal coarse_sum(const ResidualStack& stack, std::size_t first_scale) {
    if (first_scale >= stack.n_scales()) {
        throw std::out_of_range("scale " + std::to_string(first_scale + 1) + " is beyond the stack's " +
                                std::to_string(stack.n_scales()) + " scales");
    }
    std::vector<double> sum(stack.source_length(), 0.0);
    for (std::size_t j = first_scale; j < stack.n_scales(); ++j) {
        const auto r = stack.residual(j).samples();
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += r[t];
    }
    return Signal(std::move(sum), stack.sample_rate_hz());
}

Signal inverse_brt(const ResidualStack& stack) { return coarse_sum(stack, 0); }

}  // namespace brt
