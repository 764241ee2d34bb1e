// Command-line front end: kernel / reconstruct / verify subcommands.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sisamp/cli.hpp"

namespace {

struct CommonFlags {
    std::string configPath;
    std::string outDir = "out";
    std::optional<int> gridSize;
    std::optional<int> radius;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool configRequired) {
    auto* opt = cmd->add_option("--config", flags.configPath, "experiment config (JSON)");
    if (configRequired) opt->required();
    cmd->add_option("--out", flags.outDir, "output directory");
    cmd->add_option("--grid-size", flags.gridSize, "override config gridSize");
    cmd->add_option("--radius", flags.radius, "override config truncation radius");
    cmd->add_option("--seed", flags.seed, "override config signal seed");
}

sisamp::ExperimentConfig resolve(const CommonFlags& flags) {
    sisamp::ExperimentConfig cfg;
    if (!flags.configPath.empty()) {
        cfg = sisamp::load_config(flags.configPath);
    } else {
        // built-in default: cubic spline at a = 0, forward scheme with p = 3
        cfg.scheme = {"id@0", "fwd@0", "fwd^2@0"};
        cfg.period = 3;
    }
    if (flags.gridSize) cfg.gridSize = *flags.gridSize;
    if (flags.radius) cfg.radius = *flags.radius;
    if (flags.seed) cfg.signal.seed = *flags.seed;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sampling kernels and reconstruction in shift-invariant spaces"};
    app.require_subcommand(1);

    CommonFlags kernelFlags, reconFlags, verifyFlags;
    bool injectWrongSign = false;

    auto* kernelCmd =
        app.add_subcommand("kernel", "compute S_a and the channel kernels, write CSV + JSON");
    add_common(kernelCmd, kernelFlags, true);

    auto* reconCmd =
        app.add_subcommand("reconstruct", "sample a signal through the scheme and reconstruct");
    add_common(reconCmd, reconFlags, true);

    auto* verifyCmd = app.add_subcommand("verify", "run the invariant check suites");
    add_common(verifyCmd, verifyFlags, false);
    verifyCmd->add_flag("--inject-wrong-sign", injectWrongSign,
                        "negative control: corrupt one dual-matrix entry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (kernelCmd->parsed()) {
            return sisamp::cli::run_kernel(resolve(kernelFlags), kernelFlags.outDir);
        }
        if (reconCmd->parsed()) {
            return sisamp::cli::run_reconstruct(resolve(reconFlags), reconFlags.outDir);
        }
        return sisamp::cli::run_verify(resolve(verifyFlags), {injectWrongSign});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sisamp::cli::kExitConfig;
    }
}
