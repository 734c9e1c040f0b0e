// simulate — run concurrence-trajectory and Zeno sweeps from a config file.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spinbath/config.hpp"
#include "spinbath/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitComputationError = 2;
constexpr int kExitIoError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spinbath::IoError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Central-spin decoherence simulator: concurrence trajectories and "
                 "Zeno survival probabilities for a two-spin system coupled to "
                 "self-interacting thermal spin baths"};

    std::string config_path;
    std::string out_dir;
    std::string format;
    int threads = 1;
    bool validate_only = false;

    app.add_option("config", config_path, "Path to the experiment config file")->required();
    app.add_option("--out", out_dir, "Output directory (overrides output.dir)");
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "Worker threads for sweep points")
        ->check(CLI::PositiveNumber);
    app.add_flag("--validate", validate_only, "Parse and validate the config, then exit");

    CLI11_PARSE(app, argc, argv);

    spinbath::ExperimentConfig cfg;
    try {
        cfg = spinbath::parse_config(read_file(config_path));
    } catch (const spinbath::IoError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << '\n';
        return kExitConfigError;
    }

    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (format == "csv") cfg.format = spinbath::OutputFormat::csv;
    if (format == "json") cfg.format = spinbath::OutputFormat::json;

    if (validate_only) {
        std::cout << spinbath::serialize_config(cfg);
        return kExitOk;
    }

    try {
        const auto files = spinbath::run_sweep(cfg, threads);
        for (const auto& f : files) {
            std::cout << cfg.output_dir << '/' << f << '\n';
        }
    } catch (const spinbath::IoError& ex) {
        std::cerr << "i/o error: " << ex.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& ex) {
        std::cerr << "computation error: " << ex.what() << '\n';
        return kExitComputationError;
    }
    return kExitOk;
}
