// The Shannon-type sampling function S_a and the per-channel composite
// kernels assembled from dual-matrix columns.
#pragma once

#include <string>
#include <vector>

#include "sisamp/common.hpp"
#include "sisamp/generator.hpp"
#include "sisamp/riesz_algebra.hpp"
#include "sisamp/zak.hpp"

namespace sisamp {

/// One summand of a composite kernel: weight * S_a(t - shift).
struct KernelTerm {
    int shift = 0;
    double weight = 0.0;
};

/** Everything needed to evaluate the reconstruction kernels of one scheme:
 *  the base expansion S_a(t) = sum_i baseCoeffs[i] phi(t - (baseStart + i)),
 *  truncated at |n| <= radius, plus one shift/weight combination per channel
 *  so that channel j reconstructs through sum_w weight * S_a(t - shift).
 */
struct SamplingKernelSet {
    int baseStart = 0;
    Eigen::VectorXd baseCoeffs;
    double tailMass = 0.0;  ///< coefficient energy beyond the radius (Parseval estimate)

    double offset = 0.0;  ///< a
    int gridSize = 0;
    int radius = 0;

    int period = 1;
    int windowStart = 0;
    std::vector<std::vector<KernelTerm>> channels;
    std::vector<std::string> labels;

    double base(const Generator& gen, double t) const;                 ///< S_a(t)
    double channel(const Generator& gen, int channel, double t) const; ///< T_{a,j}(t)

    int minShift() const;
    int maxShift() const;
};

/** Fourier coefficients of 1/conj(K_a) on the kernel grid, truncated to
 *  |n| <= radius; requires a valid Riesz condition and gridSize >= 4*radius
 *  (keeps the transform's aliasing under the coefficient tail size).
 *  The result carries a single identity channel (period-1 scheme), i.e. the
 *  plain Shannon-type formula.
 */
SamplingKernelSet shannon_kernel(const ZakKernel& kernel, int radius, double rieszTol = 1e-6);

/// Attach a scheme's composite kernels: channel j picks up the nonzero
/// entries of dual column j at the partition offsets.
SamplingKernelSet assemble_kernels(const SamplingKernelSet& base, const SchemeMatrix& scheme,
                                   const DualMatrix& dual);

/// max |S_a(a+n) - delta_{n0}| over |n| <= nRange.
double interpolation_check(const SamplingKernelSet& ks, const Generator& gen, int nRange);

}  // namespace sisamp
