#pragma once

#include "ranapprox/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ranapprox::harness {

inline constexpr std::string_view kExperiments[] = {"kernel", "bounds", "simulate", "scaling",
                                                    "seqspace"};

// Flat key-value experiment configuration. The schema (keys, meaning and
// defaults) is documented in docs/config.md.
struct ExperimentConfig {
    std::string experiment = "simulate";
    double r = 1.25;
    double beta0 = 0.4;
    std::vector<double> lambda;  // explicit weights; empty selects korobov(r, beta0)
    std::vector<std::size_t> dims = {1};
    std::vector<double> eps = {0.5};
    std::vector<std::size_t> n = {16, 256};
    double mass_tol = 1e-3;
    std::size_t grid = 256;
    std::size_t replications = 200;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::size_t support = 8;
    std::size_t n_max = 4096;
    double dudley_constant = 5.656854249492381;
    unsigned threads = 0;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Error in a configuration file or override; carries the offending key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sets one key from its textual value. Throws ConfigError for unknown keys or
// malformed values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

// Parses `key = value` lines; `#` starts a comment; lists are comma-separated.
// Keys absent from the text keep the values already in `base`.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});

[[nodiscard]] ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

// Canonical text form; parse_config(emit_config(c)) == c.
[[nodiscard]] std::string emit_config(const ExperimentConfig& cfg);

// Checks invariants: known experiment, nonempty lists, positive tolerances.
// Throws ConfigError.
void validate(const ExperimentConfig& cfg);

// The weight sequence a configuration describes (normalized korobov or the
// explicit list).
[[nodiscard]] LambdaSequence make_lambda(const ExperimentConfig& cfg);

}  // namespace ranapprox::harness
