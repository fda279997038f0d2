#include "brt/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brt/bench.hpp"
#include "brt/denoise.hpp"
#include "brt/io.hpp"
#include "brt/metrics.hpp"
#include "brt/synth.hpp"
#include "brt/transform.hpp"

namespace brt {

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::NonPositiveLambda:
        case Errc::ScaleCountTooSmall:
        case Errc::WindowTooSmall:
        case Errc::LambdaCountMismatch:
        case Errc::InvalidThreshold:
        case Errc::InvalidSweep:
            return kExitUsage;
        case Errc::DegenerateWeights:
        case Errc::ZeroPowerBaseline:
        case Errc::IdenticalSignals:
            return kExitNumeric;
        case Errc::InvalidSignal:
        case Errc::MismatchedLengths:
        case Errc::EmptyInput:
        case Errc::ParseError:
        case Errc::NonUniformSampling:
        case Errc::MissingSampleRate:
        case Errc::RateMismatch:
        case Errc::IoError:
        case Errc::EmptyResult:
            return kExitData;
    }
    return kExitData;
}

// Transform flags shared by decompose and denoise.
struct TransformFlags {
    int scales = 6;
    double window = 0.1;
    double lambda_mult = 1.0;
    std::optional<double> lambda;

    void attach(CLI::App* cmd) {
        cmd->add_option("--scales,-n", scales, "Number of scales n")->capture_default_str();
        cmd->add_option("--window", window, "Kernel window half-width in seconds")->capture_default_str();
        cmd->add_option("--lambda-mult", lambda_mult, "Kernel bandwidth as a multiple of the input SD")
            ->capture_default_str();
        cmd->add_option("--lambda", lambda, "Absolute kernel bandwidth for every scale");
    }

    BrtConfig build(const Signal& signal) const {
        BrtConfig config = BrtConfig::defaults_for(signal, scales, window, lambda_mult);
        if (lambda) std::fill(config.lambdas.begin(), config.lambdas.end(), *lambda);
        return config;
    }
};

nlohmann::ordered_json config_json(const BrtConfig& c, std::size_t radius) {
    return {{"n_scales", c.n_scales},
            {"lambdas", c.lambdas},
            {"window_seconds", c.window_seconds},
            {"window_radius", radius}};
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<std::string> parts;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
    try {
        if (sep == ':') {
            if (parts.size() != 3) throw std::invalid_argument("start:stop:count");
            const long count = std::stol(parts[2]);
            if (count < 1) throw std::invalid_argument("count");
            return linspace(std::stod(parts[0]), std::stod(parts[1]), static_cast<std::size_t>(count));
        }
        std::vector<double> out;
        for (const auto& p : parts) out.push_back(std::stod(p));
        return out;
    } catch (const std::logic_error&) {
        throw Error(Errc::InvalidSweep,
                    "--levels expects start:stop:count or a comma list, got '" + text + "'");
    }
}

Signal load_baseline(const std::string& name, std::optional<double> rate, std::size_t synth_length) {
    if (name.rfind("synth:", 0) == 0) {
        const std::string kind = name.substr(6);
        SynthSpec spec;
        spec.length = synth_length;
        if (kind == "periodic") {
            spec.kind = SynthKind::Periodic;
        } else if (kind == "piecewise") {
            spec.kind = SynthKind::PiecewiseRegular;
        } else {
            throw Error(Errc::InvalidSweep, "unknown synthetic baseline '" + name + "'");
        }
        if (rate) spec.sample_rate_hz = *rate;
        return synthesize(spec);
    }
    return load_signal(name, rate);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-scale residual decomposition and denoising of sampled signals", "brt"};
    app.require_subcommand(1);

    // decompose
    std::string dec_in, dec_out;
    std::optional<double> dec_rate;
    TransformFlags dec_flags;
    auto* decompose = app.add_subcommand("decompose", "Split a signal into n residual scales");
    decompose->add_option("--input,-i", dec_in, "Signal CSV")->required();
    decompose->add_option("--rate", dec_rate, "Sample rate in Hz");
    decompose->add_option("--out,-o", dec_out, "Stack CSV (t,r1..rn)")->required();
    dec_flags.attach(decompose);

    // reconstruct
    std::string rec_in, rec_out;
    auto* reconstruct = app.add_subcommand("reconstruct", "Sum a stack CSV back into a signal");
    reconstruct->add_option("--input,-i", rec_in, "Stack CSV")->required();
    reconstruct->add_option("--out,-o", rec_out, "Signal CSV")->required();

    // denoise
    std::string den_in, den_out, den_report;
    std::optional<std::string> den_baseline;
    std::optional<double> den_rate;
    bool den_coarsest = false;
    TransformFlags den_flags;
    auto* denoise = app.add_subcommand("denoise", "Per-scale MAD hard-threshold denoising");
    denoise->add_option("--input,-i", den_in, "Noisy signal CSV")->required();
    denoise->add_option("--rate", den_rate, "Sample rate in Hz");
    denoise->add_option("--out,-o", den_out, "Denoised signal CSV")->required();
    denoise->add_option("--report", den_report, "Report JSON");
    denoise->add_option("--baseline", den_baseline, "Clean reference CSV; adds SNRI to the report");
    denoise->add_flag("--threshold-coarsest", den_coarsest, "Also threshold the coarsest scale");
    den_flags.attach(denoise);

    // synth
    std::string syn_kind = "periodic", syn_out;
    SynthSpec syn_spec;
    std::optional<double> syn_snr;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic test signal");
    synth->add_option("--kind", syn_kind, "periodic | piecewise")
        ->check(CLI::IsMember({"periodic", "piecewise"}))
        ->capture_default_str();
    synth->add_option("--length", syn_spec.length, "Number of samples")->capture_default_str();
    synth->add_option("--rate", syn_spec.sample_rate_hz, "Sample rate in Hz")->capture_default_str();
    synth->add_option("--amplitude", syn_spec.amplitude, "Amplitude A")->capture_default_str();
    synth->add_option("--seed", syn_spec.seed, "Noise seed")->envname("BRT_SEED")->capture_default_str();
    synth->add_option("--snr", syn_snr, "Add white Gaussian noise at this SNR (dB)");
    synth->add_option("--out,-o", syn_out, "Signal CSV")->required();

    // bench
    std::vector<std::string> bench_baselines{"synth:periodic"};
    std::string bench_levels = "12:2.5:11", bench_sweep = "snr", bench_records, bench_aggregates;
    std::optional<double> bench_rate;
    std::size_t bench_synth_length = SynthSpec{}.length;
    SweepConfig sweep;
    auto* bench = app.add_subcommand("bench", "Monte-Carlo SNR-improvement sweep");
    bench->add_option("--baselines", bench_baselines, "synth:periodic, synth:piecewise or CSV paths")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--rate", bench_rate, "Sample rate for single-column CSVs and synthetic baselines");
    bench->add_option("--synth-length", bench_synth_length, "Length of synthetic baselines")
        ->capture_default_str();
    bench->add_option("--levels", bench_levels, "Input SNRs: start:stop:count or comma list")
        ->capture_default_str();
    bench->add_option("--trials", sweep.trials_per_level, "Noisy realisations per level and baseline")
        ->capture_default_str();
    bench->add_option("--sweep", bench_sweep, "snr | scales | lambda")
        ->check(CLI::IsMember({"snr", "scales", "lambda"}))
        ->capture_default_str();
    bench->add_option("--scales-list", sweep.scale_counts, "Scale counts for --sweep scales")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--lambda-mults", sweep.lambda_multipliers, "Lambda multiples for --sweep lambda")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--scales,-n", sweep.reference_scales, "Scale count when not swept")
        ->capture_default_str();
    bench->add_option("--lambda-mult", sweep.reference_lambda_multiple, "Lambda multiple when not swept")
        ->capture_default_str();
    bench->add_option("--window", sweep.window_seconds, "Kernel window half-width in seconds")
        ->capture_default_str();
    bench->add_option("--seed", sweep.base_seed, "Base seed")->envname("BRT_SEED")->capture_default_str();
    bench->add_flag("--threshold-coarsest", sweep.denoise.threshold_coarsest,
                    "Also threshold the coarsest scale");
    bench->add_option("--records", bench_records, "Records CSV")->required();
    bench->add_option("--aggregates", bench_aggregates, "Aggregates JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (decompose->parsed()) {
            const Signal signal = load_signal(dec_in, dec_rate);
            const BrtConfig config = dec_flags.build(signal);
            const ResidualStack stack = forward_brt(signal, config);
            write_stack(stack, dec_out, config);
            out << "wrote " << stack.n_scales() << " scales x " << stack.source_length()
                << " samples to " << dec_out << "\n";
        } else if (reconstruct->parsed()) {
            const LoadedStack loaded = load_stack(rec_in);
            write_signal(inverse_brt(loaded.stack), rec_out);
            out << "wrote " << loaded.stack.source_length() << " samples to " << rec_out << "\n";
        } else if (denoise->parsed()) {
            const Signal noisy = load_signal(den_in, den_rate);
            const BrtConfig config = den_flags.build(noisy);
            const std::size_t radius = validate_config(config, noisy);
            DenoiseResult result = denoise_signal(noisy, config, {den_coarsest});
            if (den_baseline) {
                const Signal baseline = load_signal(*den_baseline, noisy.sample_rate_hz());
                const Snri snri = snr_improvement(noisy, baseline, result.denoised);
                result.report.snri_db = snri.db;
            }
            write_signal(result.denoised, den_out);
            if (!den_report.empty()) {
                nlohmann::ordered_json report;
                report["n_scales"] = result.report.thresholds.size();
                report["thresholds"] = result.report.thresholds;
                report["zeroed_counts"] = result.report.zeroed_counts;
                report["coarsest_thresholded"] = result.report.coarsest_thresholded;
                report["config"] = config_json(config, radius);
                report["sample_rate_hz"] = noisy.sample_rate_hz();
                if (result.report.snri_db) report["snri_db"] = *result.report.snri_db;
                write_text_file(den_report, report.dump(2) + "\n");
            }
            out << "denoised " << noisy.size() << " samples";
            if (result.report.snri_db) out << ", SNRI " << format_shortest(*result.report.snri_db) << " dB";
            out << "\n";
        } else if (synth->parsed()) {
            syn_spec.kind = syn_kind == "periodic" ? SynthKind::Periodic : SynthKind::PiecewiseRegular;
            Signal signal = synthesize(syn_spec);
            if (syn_snr) signal = add_white_gaussian(signal, {*syn_snr, syn_spec.seed});
            write_signal(signal, syn_out);
            out << "wrote " << signal.size() << " samples to " << syn_out << "\n";
        } else if (bench->parsed()) {
            sweep.snr_levels_db = parse_levels(bench_levels);
            sweep.kind = bench_sweep == "snr"      ? SweepKind::InputSnr
                         : bench_sweep == "scales" ? SweepKind::ScaleCount
                                                   : SweepKind::LambdaMultiple;
            std::vector<Signal> baselines;
            for (const auto& name : bench_baselines) {
                baselines.push_back(load_baseline(name, bench_rate, bench_synth_length));
            }
            const SweepResult result = run_sweep(baselines, sweep);
            write_sweep(result, bench_records, bench_aggregates);
            out << "wrote " << result.records.size() << " records and " << result.aggregates.size()
                << " cells\n";
        }
    } catch (const Error& e) {
        err << "brt: error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "brt: error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace brt
