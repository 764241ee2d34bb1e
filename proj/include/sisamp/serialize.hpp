// JSON serialization of kernel sets and the experiment configuration
// consumed by the command-line front end.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sisamp/generator.hpp"
#include "sisamp/kernel2d.hpp"
#include "sisamp/sampling_kernel.hpp"
#include "sisamp/signal.hpp"

namespace sisamp {

inline constexpr int kSchemaVersion = 1;

nlohmann::json kernel_set_to_json(const SamplingKernelSet& ks);
SamplingKernelSet kernel_set_from_json(const nlohmann::json& j);

nlohmann::json kernel_set_to_json(const SamplingKernelSet2D& ks);
SamplingKernelSet2D kernel_set_2d_from_json(const nlohmann::json& j);

struct GeneratorConfig {
    std::string kind = "bspline";  // bspline | sinc | tabulated
    int order = 4;
    int radius = 64;
    std::vector<double> values;
    double start = 0.0;
    double step = 1.0;
};

Generator make_generator(const GeneratorConfig& cfg);

struct SignalConfig {
    std::string source = "random";  // random | file
    std::uint64_t seed = 1;
    long supportFirst = -8;
    long supportLast = 8;
    long supportFirst2 = -8;  // second axis (2D)
    long supportLast2 = 8;
    std::filesystem::path path;
};

struct GridConfig {
    double start = -8.0;
    double stop = 8.0;
    double step = 0.0625;

    Eigen::VectorXd points() const;
};

struct ExperimentConfig {
    GeneratorConfig generator;
    std::optional<GeneratorConfig> generator2;  // defaults to `generator`
    double a = 0.0;
    double b = 0.0;
    int gridSize = 4096;
    int radius = 40;
    int period = 1;
    std::vector<std::string> scheme = {"id@0"};
    int period2 = 0;
    std::vector<std::string> scheme2;        // non-empty switches to 2D
    std::string kernel2dMode = "separable";  // separable | general
    SignalConfig signal;
    GridConfig evalGrid;
    std::optional<std::filesystem::path> kernelSetPath;  // reload instead of computing

    bool is2d() const { return !scheme2.empty(); }
};

/// Parse and validate; referenced files are resolved against baseDir and must
/// exist.  Throws ConfigError on any problem.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& baseDir);
ExperimentConfig load_config(const std::filesystem::path& path);

/// CSV "n,value" (1D) / "n,m,value" (2D); missing indices inside the bounding
/// range are zero.
Signal load_signal_csv(const std::filesystem::path& path);
Signal2D load_signal_2d_csv(const std::filesystem::path& path);

}  // namespace sisamp
