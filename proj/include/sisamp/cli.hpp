// Command implementations behind the CLI front end; returned ints are
// process exit codes.
#pragma once

#include <filesystem>

#include "sisamp/serialize.hpp"

namespace sisamp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitCheckFailed = 4;

/// Write the sampling kernels on the evaluation grid (S.csv plus one
/// T<j>.csv per channel) and a JSON dump of the kernel set.
int run_kernel(const ExperimentConfig& cfg, const std::filesystem::path& outDir);

/// Full pipeline: synthesize the signal, sample through the scheme,
/// reconstruct, and write report.json / recon.csv / error.csv.
int run_reconstruct(const ExperimentConfig& cfg, const std::filesystem::path& outDir);

struct VerifyOptions {
    bool injectWrongSign = false;  ///< negative control: corrupt one dual entry
};

/// Run the invariant suites (matrix tables, interpolation, biorthogonality,
/// partition of unity, kernel shifting); prints one line per check.
int run_verify(const ExperimentConfig& cfg, const VerifyOptions& opts = {});

}  // namespace sisamp::cli
