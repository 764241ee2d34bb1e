// Reconstruction engines: collapse channel samples and composite kernels
// back into a coefficient sequence of the shift-invariant space, evaluate on
// grids, and report errors.
#pragma once

#include <vector>

#include "sisamp/common.hpp"
#include "sisamp/kernel2d.hpp"
#include "sisamp/sampling_kernel.hpp"
#include "sisamp/scheme.hpp"
#include "sisamp/signal.hpp"

namespace sisamp {

/// Blocks n that can contribute to any evaluation point in [evalMin, evalMax],
/// accounting for the kernel truncation radius and generator support.
BlockWindow required_blocks(const SamplingKernelSet& ks, const Generator& gen, double evalMin,
                            double evalMax);
BlockWindow required_blocks_t(const SamplingKernelSet2D& ks, const Generator& genT,
                              double evalMin, double evalMax);
BlockWindow required_blocks_s(const SamplingKernelSet2D& ks, const Generator& genS,
                              double evalMin, double evalMax);

/// sum_n sum_j channel_j[n] T_j(. - p n) regrouped as a coefficient sequence.
Signal reconstruct_coeffs(const SampleSet& samples, const SamplingKernelSet& ks);
Signal2D reconstruct_coeffs_2d(const SampleSet2D& samples, const SamplingKernelSet2D& ks);

/// Reconstruction values on a grid; throws CoverageError (with the required
/// window) when the sample set misses contributing blocks.
Eigen::VectorXd reconstruct_1d(const SampleSet& samples, const SamplingKernelSet& ks,
                               const Generator& gen, const Eigen::VectorXd& evalGrid);
Eigen::MatrixXd reconstruct_2d(const SampleSet2D& samples, const SamplingKernelSet2D& ks,
                               const Generator& genT, const Generator& genS,
                               const Eigen::VectorXd& evalGridT,
                               const Eigen::VectorXd& evalGridS);

struct ReconstructionReport {
    double maxAbsError = 0.0;
    double l2GridError = 0.0;  ///< sqrt(spacing * sum err^2), grid L2 norm
    std::vector<long> channelSampleCounts;
    int radius = 0;
    double runtimeSeconds = 0.0;
};

ReconstructionReport make_report(const Eigen::VectorXd& reference,
                                 const Eigen::VectorXd& reconstructed, double spacing);

}  // namespace sisamp
