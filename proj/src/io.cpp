#include "brt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace brt {

namespace {

constexpr double kRateTolerance = 1e-6;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_double(std::string_view field) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
    return value;
}

std::string where(const std::filesystem::path& path, std::size_t line, std::size_t column) {
    return path.string() + ": row " + std::to_string(line) + ", column " + std::to_string(column);
}

// Sample rate implied by a time column; checks monotonicity and uniform spacing.
double rate_from_times(const std::vector<double>& times, const CsvTable& table,
                       const std::filesystem::path& path) {
    const double span = times.back() - times.front();
    const double mean_step = span / static_cast<double>(times.size() - 1);
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double step = times[i] - times[i - 1];
        if (!(step > 0.0)) {
            throw Error(Errc::NonUniformSampling,
                        where(path, table.line_numbers[i], 1) + ": time column is not increasing");
        }
        if (std::abs(step - mean_step) > kRateTolerance * mean_step) {
            throw Error(Errc::NonUniformSampling,
                        where(path, table.line_numbers[i], 1) + ": sample spacing deviates from " +
                            format_shortest(mean_step) + " s");
        }
    }
    return 1.0 / mean_step;
}

}  // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_shortest(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
    os << text;
    os.flush();
    if (!os) throw Error(Errc::IoError, "failed writing " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(Errc::IoError, "cannot open " + path.string());

    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    bool first = true;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);

        if (first) {
            first = false;
            bool any_numeric = false;
            for (auto f : fields) any_numeric = any_numeric || parse_double(f).has_value();
            if (!any_numeric) {
                for (auto f : fields) table.header.emplace_back(f);
                width = fields.size();
                continue;
            }
        }
        if (width == 0) width = fields.size();
        if (fields.size() != width) {
            throw Error(Errc::ParseError, path.string() + ": row " + std::to_string(line_no) +
                                              " has " + std::to_string(fields.size()) +
                                              " fields, expected " + std::to_string(width));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const auto v = parse_double(fields[c]);
            if (!v) {
                throw Error(Errc::ParseError, where(path, line_no, c + 1) + ": cannot parse '" +
                                                  std::string(fields[c]) + "'");
            }
            if (!std::isfinite(*v)) {
                throw Error(Errc::ParseError,
                            where(path, line_no, c + 1) + ": non-finite value '" +
                                std::string(fields[c]) + "'");
            }
            row.push_back(*v);
        }
        table.rows.push_back(std::move(row));
        table.line_numbers.push_back(line_no);
    }
    if (is.bad()) throw Error(Errc::IoError, "failed reading " + path.string());
    return table;
}

Signal load_signal(const std::filesystem::path& path, std::optional<double> sample_rate_hz) {
    const CsvTable table = read_csv(path);
    if (table.rows.size() < 2) {
        throw Error(Errc::ParseError, path.string() + ": need at least 2 samples");
    }
    const std::size_t width = table.rows.front().size();
    if (width != 1 && width != 2) {
        throw Error(Errc::ParseError, path.string() + ": expected 1 or 2 columns, found " +
                                          std::to_string(width));
    }

    std::vector<double> samples;
    samples.reserve(table.rows.size());
    for (const auto& row : table.rows) samples.push_back(row.back());

    if (sample_rate_hz && !(std::isfinite(*sample_rate_hz) && *sample_rate_hz > 0.0)) {
        throw Error(Errc::InvalidSignal, "sample rate must be positive");
    }
    double rate = 0.0;
    if (width == 2) {
        std::vector<double> times;
        times.reserve(table.rows.size());
        for (const auto& row : table.rows) times.push_back(row.front());
        const double inferred = rate_from_times(times, table, path);
        if (sample_rate_hz && std::abs(inferred - *sample_rate_hz) > kRateTolerance * *sample_rate_hz) {
            throw Error(Errc::RateMismatch, path.string() + ": time column implies " +
                                                format_shortest(inferred) + " Hz but " +
                                                format_shortest(*sample_rate_hz) + " Hz was given");
        }
        rate = sample_rate_hz.value_or(inferred);
    } else {
        if (!sample_rate_hz) {
            throw Error(Errc::MissingSampleRate,
                        path.string() + ": single-column file needs an explicit sample rate");
        }
        rate = *sample_rate_hz;
    }
    return Signal(std::move(samples), rate);
}

void write_signal(const Signal& signal, const std::filesystem::path& path) {
    std::string text = "t,x\n";
    for (std::size_t i = 0; i < signal.size(); ++i) {
        text += format_number(signal.time_at(i));
        text += ',';
        text += format_number(signal[i]);
        text += '\n';
    }
    write_text_file(path, text);
}

std::filesystem::path stack_sidecar_path(const std::filesystem::path& stack_path) {
    return std::filesystem::path(stack_path.string() + ".json");
}

void write_stack(const ResidualStack& stack, const std::filesystem::path& path,
                 const std::optional<BrtConfig>& config) {
    const std::size_t n = stack.n_scales();
    std::string text = "t";
    for (std::size_t j = 1; j <= n; ++j) text += ",r" + std::to_string(j);
    text += '\n';
    const Signal& first = stack.residual(0);
    for (std::size_t i = 0; i < stack.source_length(); ++i) {
        text += format_number(first.time_at(i));
        for (std::size_t j = 0; j < n; ++j) {
            text += ',';
            text += format_number(stack.residual(j)[i]);
        }
        text += '\n';
    }
    write_text_file(path, text);

    nlohmann::ordered_json meta;
    meta["sample_rate_hz"] = stack.sample_rate_hz();
    meta["source_length"] = stack.source_length();
    meta["n_scales"] = n;
    if (config) {
        meta["config"] = {{"n_scales", config->n_scales},
                          {"lambdas", config->lambdas},
                          {"window_seconds", config->window_seconds}};
    }
    write_text_file(stack_sidecar_path(path), meta.dump(2) + "\n");
}

LoadedStack load_stack(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header.empty() || table.header.front() != "t") {
        throw Error(Errc::ParseError, path.string() + ": stack CSV must start with a t,r1..rn header");
    }
    if (table.rows.size() < 2) throw Error(Errc::ParseError, path.string() + ": need at least 2 rows");
    const std::size_t n = table.header.size() - 1;
    if (n < 1) throw Error(Errc::ParseError, path.string() + ": no residual columns");

    std::optional<double> rate;
    std::optional<BrtConfig> config;
    const auto sidecar = stack_sidecar_path(path);
    if (std::filesystem::exists(sidecar)) {
        std::ifstream is(sidecar);
        nlohmann::json meta;
        try {
            is >> meta;
            rate = meta.at("sample_rate_hz").get<double>();
            if (meta.contains("config")) {
                const auto& c = meta["config"];
                BrtConfig cfg;
                cfg.n_scales = c.at("n_scales").get<int>();
                cfg.lambdas = c.at("lambdas").get<std::vector<double>>();
                cfg.window_seconds = c.at("window_seconds").get<double>();
                config = std::move(cfg);
            }
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, sidecar.string() + ": " + e.what());
        }
    }
    if (!rate) {
        std::vector<double> times;
        for (const auto& row : table.rows) times.push_back(row.front());
        rate = rate_from_times(times, table, path);
    }

    std::vector<Signal> residuals;
    residuals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> r;
        r.reserve(table.rows.size());
        for (const auto& row : table.rows) r.push_back(row[j + 1]);
        residuals.emplace_back(std::move(r), *rate);
    }
    return {ResidualStack(std::move(residuals)), std::move(config)};
}

}  // namespace brt
