#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "brt/signal.hpp"

namespace brt {

/// %.17g: enough digits for any double to survive a text round trip.
std::string format_number(double x);
/// Shortest text that parses back to the same double.
std::string format_shortest(double x);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Numeric CSV table. An optional header is recognised on the first non-blank
/// line when none of its fields parse as numbers.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

/// Rejects non-finite and malformed fields with ParseError naming the line and
/// column, and ragged rows.
CsvTable read_csv(const std::filesystem::path& path);

/// Loads a single-channel recording: one column (amplitude) or two (time in
/// seconds, amplitude). The rate comes from `sample_rate_hz` when given, else
/// from the time column; when both exist they must agree within 1e-6 relative.
Signal load_signal(const std::filesystem::path& path,
                   std::optional<double> sample_rate_hz = std::nullopt);

/// Two columns with a `t,x` header.
void write_signal(const Signal& signal, const std::filesystem::path& path);

/// Stack CSV (`t,r1..rn`) plus `<path>.json` carrying the sample rate, length
/// and, when supplied, the transform configuration.
void write_stack(const ResidualStack& stack, const std::filesystem::path& path,
                 const std::optional<BrtConfig>& config = std::nullopt);

struct LoadedStack {
    ResidualStack stack;
    std::optional<BrtConfig> config;
};

/// Reads a stack CSV; the sidecar, when present, supplies the exact sample rate.
LoadedStack load_stack(const std::filesystem::path& path);

std::filesystem::path stack_sidecar_path(const std::filesystem::path& stack_path);

}  // namespace brt
