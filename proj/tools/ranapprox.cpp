// Command line front end for the experiments.

#include "ranapprox/harness/config.hpp"
#include "ranapprox/harness/experiments.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr const char* kVersion = "0.1.0";

// Config keys with a flag of the same name (seed, out_dir and threads have
// their own flags below).
constexpr const char* kOverridable[] = {"r",         "beta0",        "lambda",  "dims",
                                        "eps",       "n",            "mass_tol", "grid",
                                        "replications", "support",   "n_max",   "dudley_constant"};

}  // namespace

int main(int argc, char** argv) {
    using namespace ranapprox::harness;

    CLI::App app{"Randomized vs deterministic approximation experiments on the d-torus"};
    app.set_version_flag("--version", std::string("ranapprox ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string seed_text;
    std::string out_dir;
    unsigned threads = 0;
    std::map<std::string, std::string> overrides;

    for (const auto* name : {"kernel", "bounds", "simulate", "scaling", "seqspace"}) {
        auto* sub = app.add_subcommand(name, std::string("run the '") + name + "' experiment");
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--seed", seed_text, "master seed (unsigned 64-bit)");
        sub->add_option("--out-dir", out_dir, "output directory");
        sub->add_option("--threads", threads, "worker threads (default: RANAPPROX_THREADS or all cores)");
        for (const auto* key : kOverridable) {
            sub->add_option_function<std::string>(
                std::string("--") + key, [&overrides, key](const std::string& v) { overrides[key] = v; },
                std::string("override config key '") + key + "'");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const std::string experiment = app.get_subcommands().front()->get_name();
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
        cfg.experiment = experiment;
        for (const auto& [key, value] : overrides) apply_setting(cfg, key, value);
        if (!seed_text.empty()) apply_setting(cfg, "seed", seed_text);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (threads != 0) cfg.threads = threads;

        const auto result = run_experiment(cfg);
        for (const auto& path : write_result(result, cfg)) std::cout << "wrote " << path.string() << '\n';
        for (const auto& note : result.notes) std::cout << note << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
