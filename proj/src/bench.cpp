#include "brt/bench.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "brt/io.hpp"
#include "brt/metrics.hpp"

namespace brt {

namespace {

struct Cell {
    int n_scales;
    double lambda_mult;
};

std::vector<Cell> cells_for(const SweepConfig& config) {
    std::vector<Cell> cells;
    switch (config.kind) {
        case SweepKind::InputSnr:
            cells.push_back({config.reference_scales, config.reference_lambda_multiple});
            break;
        case SweepKind::ScaleCount:
            for (int n : config.scale_counts) cells.push_back({n, config.reference_lambda_multiple});
            break;
        case SweepKind::LambdaMultiple:
            for (double m : config.lambda_multipliers) cells.push_back({config.reference_scales, m});
            break;
    }
    return cells;
}

std::string cell_label(double snr, int n, double mult) {
    return "snr_db=" + format_shortest(snr) + ",n_scales=" + std::to_string(n) +
           ",lambda_mult=" + format_shortest(mult);
}

}  // namespace

std::vector<double> linspace(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
    if (count > 1) out.back() = stop;
    return out;
}

std::vector<double> default_snr_levels() { return linspace(12.0, 2.5, 11); }

void validate(const SweepConfig& config) {
    if (config.snr_levels_db.empty()) throw Error(Errc::InvalidSweep, "no SNR levels");
    for (double s : config.snr_levels_db) {
        if (!std::isfinite(s)) throw Error(Errc::InvalidSweep, "SNR levels must be finite");
    }
    if (config.trials_per_level < 1) throw Error(Errc::InvalidSweep, "trials_per_level must be >= 1");
    if (config.kind == SweepKind::ScaleCount && config.scale_counts.empty()) {
        throw Error(Errc::InvalidSweep, "scale-count sweep with no scale counts");
    }
    if (config.kind == SweepKind::LambdaMultiple && config.lambda_multipliers.empty()) {
        throw Error(Errc::InvalidSweep, "lambda sweep with no multipliers");
    }
    for (const Cell& c : cells_for(config)) {
        if (c.n_scales < 2) throw Error(Errc::ScaleCountTooSmall, "scale counts must be >= 2");
        if (!(std::isfinite(c.lambda_mult) && c.lambda_mult > 0.0)) {
            throw Error(Errc::NonPositiveLambda, "lambda multipliers must be positive");
        }
    }
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t baseline, std::size_t level,
                         std::size_t trial) {
    return derive_seed(base_seed, {baseline, level, trial});
}

SweepResult run_sweep(std::span<const Signal> baselines, const SweepConfig& config) {
    validate(config);
    if (baselines.empty()) throw Error(Errc::InvalidSweep, "no baseline signals");
    for (std::size_t b = 0; b < baselines.size(); ++b) {
        if (!(signal_power(baselines[b]) > 0.0)) {
            throw Error(Errc::ZeroPowerBaseline, "baseline " + std::to_string(b) + " is constant");
        }
    }

    const std::vector<Cell> cells = cells_for(config);
    const std::size_t n_levels = config.snr_levels_db.size();
    const std::size_t n_cells = cells.size();
    const std::size_t n_base = baselines.size();
    const auto trials = static_cast<std::size_t>(config.trials_per_level);
    const std::size_t total = n_levels * n_cells * n_base * trials;

    std::vector<SweepRecord> records(total);
    // First failure by task index, so the reported error does not depend on scheduling.
    std::size_t failed_at = std::numeric_limits<std::size_t>::max();
    std::optional<Error> failure;

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t task = 0; task < static_cast<std::ptrdiff_t>(total); ++task) {
        auto rem = static_cast<std::size_t>(task);
        const std::size_t t = rem % trials;
        rem /= trials;
        const std::size_t b = rem % n_base;
        rem /= n_base;
        const std::size_t c = rem % n_cells;
        const std::size_t l = rem / n_cells;

        const double level = config.snr_levels_db[l];
        const Cell& cell = cells[c];
        const std::uint64_t seed = trial_seed(config.base_seed, b, l, t);
        try {
            const Signal& baseline = baselines[b];
            const Signal noisy = add_white_gaussian(baseline, {level, seed});
            const BrtConfig brt = BrtConfig::defaults_for(noisy, cell.n_scales,
                                                          config.window_seconds, cell.lambda_mult);
            const DenoiseResult out = denoise_signal(noisy, brt, config.denoise);
            const Snri snri = snr_improvement(noisy, baseline, out.denoised);
            records[static_cast<std::size_t>(task)] = {level, cell.n_scales, cell.lambda_mult,
                                                       b * trials + t, seed, snri.db};
        } catch (const Error& e) {
#pragma omp critical(brt_sweep_failure)
            {
                if (static_cast<std::size_t>(task) < failed_at) {
                    failed_at = static_cast<std::size_t>(task);
                    failure.emplace(e.code(), "cell " + cell_label(level, cell.n_scales, cell.lambda_mult) +
                                                  " baseline " + std::to_string(b) + " trial " +
                                                  std::to_string(t) + ": " + e.what());
                }
            }
        }
    }
    if (failure) throw *failure;

    SweepResult result;
    result.records = std::move(records);
    result.aggregates = summarize(result.records);
    return result;
}

std::vector<CellSummary> summarize(std::span<const SweepRecord> records) {
    if (records.empty()) throw Error(Errc::EmptyResult, "no records to summarize");
    std::vector<CellSummary> out;
    std::size_t begin = 0;
    while (begin < records.size()) {
        const SweepRecord& head = records[begin];
        std::size_t end = begin;
        double sum = 0.0;
        while (end < records.size() && records[end].snr_db == head.snr_db &&
               records[end].n_scales == head.n_scales &&
               records[end].lambda_mult == head.lambda_mult) {
            sum += records[end].snri_db;
            ++end;
        }
        const std::size_t count = end - begin;
        const double mean = sum / static_cast<double>(count);
        double ss = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const double d = records[i].snri_db - mean;
            ss += d * d;
        }
        const double sd = count > 1 ? std::sqrt(ss / static_cast<double>(count - 1)) : 0.0;
        out.push_back({head.snr_db, head.n_scales, head.lambda_mult, count, mean, sd});
        begin = end;
    }
    return out;
}

std::vector<CellSummary> summarize(const SweepResult& result) { return summarize(result.records); }

std::string records_csv(std::span<const SweepRecord> records) {
    std::ostringstream os;
    os << "snr_db,n_scales,lambda_mult,trial,seed,snri_db\n";
    for (const auto& r : records) {
        os << format_number(r.snr_db) << ',' << r.n_scales << ',' << format_number(r.lambda_mult)
           << ',' << r.trial << ',' << r.seed << ',' << format_number(r.snri_db) << '\n';
    }
    return os.str();
}

std::string aggregates_json(std::span<const CellSummary> cells) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& c : cells) {
        doc[cell_label(c.snr_db, c.n_scales, c.lambda_mult)] = {
            {"snr_db", c.snr_db},         {"n_scales", c.n_scales},
            {"lambda_mult", c.lambda_mult}, {"count", c.count},
            {"mean_snri_db", c.mean_snri_db}, {"std_snri_db", c.std_snri_db},
        };
    }
    return doc.dump(2) + "\n";
}

void write_sweep(const SweepResult& result, const std::filesystem::path& records_path,
                 const std::filesystem::path& aggregates_path) {
    write_text_file(records_path, records_csv(result.records));
    write_text_file(aggregates_path, aggregates_json(result.aggregates));
}

}  // namespace brt
