#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ranapprox::harness {

// Column-labelled numeric table.
struct DataSeries {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;

    // Appends a row; throws std::invalid_argument on a length mismatch and
    // std::domain_error (naming `operation`) on a non-finite value.
    void add_row(std::vector<double> row, std::string_view operation);
};

// %.17g
[[nodiscard]] std::string format_number(double value);

// Throws std::domain_error naming the operation when `value` is NaN or infinite.
void require_finite(double value, std::string_view operation);

// `# label label ...` header, whitespace-separated rows.
[[nodiscard]] std::string to_dat(const DataSeries& series);
// Header row, comma-separated rows.
[[nodiscard]] std::string to_csv(const DataSeries& series);

// Writes text atomically enough for a single writer: temp file then rename.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ranapprox::harness
