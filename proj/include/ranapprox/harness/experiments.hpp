#pragma once

#include "ranapprox/harness/config.hpp"
#include "ranapprox/harness/output.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ranapprox::harness {

// One output file; `.dat` names are written whitespace-separated, anything
// else as CSV.
struct OutputFile {
    std::string name;
    DataSeries series;
};

struct ExperimentResult {
    std::vector<OutputFile> files;
    std::vector<std::string> notes;  // human-readable summary lines
};

// kernel.dat (x, K(x,0), d_K(x,0)) and, for normalized korobov weights,
// profile.csv with the decay profile.
[[nodiscard]] ExperimentResult run_kernel(const ExperimentConfig& cfg);

// bounds.csv: d, n, det_lower, det_projection_error, mc_upper_bound. The n = 0
// row reports the initial error in every column.
[[nodiscard]] ExperimentResult run_bounds(const ExperimentConfig& cfg);

// d = 1 only. originalfcn.dat and approx<n>.dat on the grid, simulate.csv
// with the grid-maximum error per n.
[[nodiscard]] ExperimentResult run_simulate(const ExperimentConfig& cfg);

// scaling.csv: d, eps, n_emp, n_mc_bound, n_det_lower, reached. Unreached rows
// carry n_emp = n_max and reached = 0.
[[nodiscard]] ExperimentResult run_scaling(const ExperimentConfig& cfg);

// seqspace.csv: d, m, eps, smolyak, randomized, empirical_error;
// crossover.csv: eps, d0, found.
[[nodiscard]] ExperimentResult run_seqspace(const ExperimentConfig& cfg);

// Validates, dispatches on cfg.experiment.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Writes every file plus config.txt (the effective configuration) into
// out_dir. Returns the written paths.
std::vector<std::filesystem::path> write_result(const ExperimentResult& result,
                                                const ExperimentConfig& cfg);

// Upper limit on n * m for one sketch in run_seqspace.
inline constexpr std::size_t kSketchBudget = std::size_t{1} << 26;

}  // namespace ranapprox::harness
