#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "brt/denoise.hpp"
#include "brt/signal.hpp"

namespace brt {

/// `count` evenly spaced values from `start` to `stop` inclusive.
std::vector<double> linspace(double start, double stop, std::size_t count);

/// 11 levels from 12 dB down to 2.5 dB.
std::vector<double> default_snr_levels();

/// Which parameter varies across cells at each input SNR level.
enum class SweepKind {
    InputSnr,        // one cell: reference n, reference lambda multiple
    ScaleCount,      // one cell per scale_counts entry, reference lambda multiple
    LambdaMultiple,  // one cell per lambda_multipliers entry, reference n
};

struct SweepConfig {
    SweepKind kind = SweepKind::InputSnr;
    std::vector<double> snr_levels_db = default_snr_levels();
    int trials_per_level = 20;
    std::vector<int> scale_counts{2, 3, 4, 5, 6};
    std::vector<double> lambda_multipliers{0.5, 1.0, 2.0};
    int reference_scales = 6;
    double reference_lambda_multiple = 1.0;
    double window_seconds = 0.1;
    std::uint64_t base_seed = 0;
    DenoiseOptions denoise;
};

void validate(const SweepConfig& config);

struct SweepRecord {
    double snr_db = 0.0;
    int n_scales = 0;
    double lambda_mult = 0.0;
    std::size_t trial = 0;  // baseline_index * trials_per_level + trial index
    std::uint64_t seed = 0;
    double snri_db = 0.0;
};

struct CellSummary {
    double snr_db = 0.0;
    int n_scales = 0;
    double lambda_mult = 0.0;
    std::size_t count = 0;
    double mean_snri_db = 0.0;
    double std_snri_db = 0.0;  // sample SD; 0 for a single record
};

struct SweepResult {
    std::vector<SweepRecord> records;  // sorted by cell, then trial
    std::vector<CellSummary> aggregates;
};

/// Noise seed for one trial; depends only on the base seed and the baseline,
/// level and trial indices, so every cell at a level sees the same noise.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t baseline, std::size_t level,
                         std::size_t trial);

/// Runs every (level, cell, baseline, trial) combination. Lambda for a trial is
/// the cell's multiple of the noisy input's SD, the same default the denoiser
/// uses on real recordings.
SweepResult run_sweep(std::span<const Signal> baselines, const SweepConfig& config);

/// One row per cell, in record order.
std::vector<CellSummary> summarize(std::span<const SweepRecord> records);
std::vector<CellSummary> summarize(const SweepResult& result);

/// `snr_db,n_scales,lambda_mult,trial,seed,snri_db`, 17 significant digits.
std::string records_csv(std::span<const SweepRecord> records);
/// Object keyed by "snr_db=<x>,n_scales=<n>,lambda_mult=<m>".
std::string aggregates_json(std::span<const CellSummary> cells);

void write_sweep(const SweepResult& result, const std::filesystem::path& records_path,
                 const std::filesystem::path& aggregates_path);

}  // namespace brt
