#include "ranapprox/harness/config.hpp"

#include "ranapprox/harness/output.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ranapprox::harness {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto item = trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (!item.empty()) items.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

double to_double(std::string_view key, std::string_view text) {
    // std::from_chars for double is unavailable on older libstdc++
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw ConfigError("config key '" + std::string(key) + "': not a number: '" + s + "'");
    }
    return value;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("config key '" + std::string(key) + "': not a nonnegative integer: '" +
                          std::string(text) + "'");
    }
    return value;
}

template <class T, class Convert>
std::vector<T> to_list(std::string_view key, std::string_view value, Convert convert) {
    std::vector<T> out;
    for (const auto item : split_list(value)) out.push_back(static_cast<T>(convert(key, item)));
    return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        if constexpr (std::is_floating_point_v<T>) {
            out += format_number(values[i]);
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "experiment") {
        cfg.experiment = std::string(value);
    } else if (key == "r") {
        cfg.r = to_double(key, value);
    } else if (key == "beta0") {
        cfg.beta0 = to_double(key, value);
    } else if (key == "lambda") {
        cfg.lambda = to_list<double>(key, value, to_double);
    } else if (key == "dims") {
        cfg.dims = to_list<std::size_t>(key, value, to_unsigned);
    } else if (key == "eps") {
        cfg.eps = to_list<double>(key, value, to_double);
    } else if (key == "n") {
        cfg.n = to_list<std::size_t>(key, value, to_unsigned);
    } else if (key == "mass_tol") {
        cfg.mass_tol = to_double(key, value);
    } else if (key == "grid") {
        cfg.grid = to_unsigned(key, value);
    } else if (key == "replications") {
        cfg.replications = to_unsigned(key, value);
    } else if (key == "seed") {
        if (value.empty() || value == "none") {
            cfg.seed.reset();
        } else {
            cfg.seed = to_unsigned(key, value);
        }
    } else if (key == "out_dir") {
        cfg.out_dir = std::string(value);
    } else if (key == "support") {
        cfg.support = to_unsigned(key, value);
    } else if (key == "n_max") {
        cfg.n_max = to_unsigned(key, value);
    } else if (key == "dudley_constant") {
        cfg.dudley_constant = to_double(key, value);
    } else if (key == "threads") {
        cfg.threads = static_cast<unsigned>(to_unsigned(key, value));
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), std::move(base));
}

std::string emit_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "experiment = " << cfg.experiment << '\n'
        << "r = " << format_number(cfg.r) << '\n'
        << "beta0 = " << format_number(cfg.beta0) << '\n'
        << "lambda = " << join(cfg.lambda) << '\n'
        << "dims = " << join(cfg.dims) << '\n'
        << "eps = " << join(cfg.eps) << '\n'
        << "n = " << join(cfg.n) << '\n'
        << "mass_tol = " << format_number(cfg.mass_tol) << '\n'
        << "grid = " << cfg.grid << '\n'
        << "replications = " << cfg.replications << '\n'
        << "seed = " << (cfg.seed ? std::to_string(*cfg.seed) : std::string("none")) << '\n'
        << "out_dir = " << cfg.out_dir << '\n'
        << "support = " << cfg.support << '\n'
        << "n_max = " << cfg.n_max << '\n'
        << "dudley_constant = " << format_number(cfg.dudley_constant) << '\n'
        << "threads = " << cfg.threads << '\n';
    return out.str();
}

void validate(const ExperimentConfig& cfg) {
    if (std::find(std::begin(kExperiments), std::end(kExperiments), cfg.experiment) == std::end(kExperiments)) {
        throw ConfigError("unknown experiment '" + cfg.experiment + "'");
    }
    if (cfg.dims.empty()) throw ConfigError("dims must be nonempty");
    if (cfg.eps.empty()) throw ConfigError("eps must be nonempty");
    if (cfg.n.empty()) throw ConfigError("n must be nonempty");
    for (const auto d : cfg.dims) {
        if (d == 0) throw ConfigError("dims entries must be >= 1");
    }
    for (const double e : cfg.eps) {
        if (!(e > 0.0 && e < 1.0)) throw ConfigError("eps entries must lie in (0, 1)");
    }
    if (!(cfg.mass_tol > 0.0 && cfg.mass_tol < 1.0)) throw ConfigError("mass_tol must lie in (0, 1)");
    if (!(cfg.dudley_constant > 0.0)) throw ConfigError("dudley_constant must be positive");
    if (cfg.grid < 16) throw ConfigError("grid must be >= 16");
    if (cfg.replications < 2) throw ConfigError("replications must be >= 2");
    if (cfg.support == 0) throw ConfigError("support must be >= 1");
    if (cfg.n_max == 0) throw ConfigError("n_max must be >= 1");
    if (cfg.experiment != "kernel" && !cfg.seed) {
        throw ConfigError("experiment '" + cfg.experiment + "' is randomized and requires a seed");
    }
}

LambdaSequence make_lambda(const ExperimentConfig& cfg) {
    try {
        if (!cfg.lambda.empty()) return LambdaSequence::explicit_values(cfg.lambda);
        return normalize_korobov(cfg.r, cfg.beta0);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace ranapprox::harness
