#include "ranapprox/harness/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ranapprox::harness {

void require_finite(double value, std::string_view operation) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(operation) + ": non-finite value " + format_number(value));
    }
}

void DataSeries::add_row(std::vector<double> row, std::string_view operation) {
    if (row.size() != labels.size()) {
        throw std::invalid_argument(std::string(operation) + ": row has " + std::to_string(row.size()) +
                                    " values, expected " + std::to_string(labels.size()));
    }
    for (const double v : row) require_finite(v, operation);
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string render(const DataSeries& series, std::string_view header_prefix, std::string_view sep) {
    std::string out(header_prefix);
    for (std::size_t i = 0; i < series.labels.size(); ++i) {
        if (i > 0) out += sep;
        out += series.labels[i];
    }
    out += '\n';
    for (const auto& row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += sep;
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string to_dat(const DataSeries& series) { return render(series, "# ", " "); }

std::string to_csv(const DataSeries& series) { return render(series, "", ","); }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ranapprox::harness
