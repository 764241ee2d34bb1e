// Two-dimensional kernels: the grid Zak kernel K_{a,b}, the 2D base kernel
// S_{a,b}, and composite kernels for Kronecker schemes.  Covers both the
// separable route (products of 1D kernel sets) and the general route built
// directly from the 2D grid.
#pragma once

#include <string>
#include <vector>

#include "sisamp/common.hpp"
#include "sisamp/generator.hpp"
#include "sisamp/riesz_algebra.hpp"
#include "sisamp/sampling_kernel.hpp"

namespace sisamp {

struct ZakKernel2D {
    double offsetT = 0.0;
    double offsetS = 0.0;
    int gridSize = 0;  ///< per axis
    Eigen::MatrixXcd values;
    double lowerBound = 0.0;
    double upperBound = 0.0;
    int minRow = 0;
    int minCol = 0;
};

/// K_{a,b}(x,y) = sum_{n,m} conj(Phi(a-n, b-m)) e^{-2 pi i (n x + m y)} of the
/// product generator Phi = phiT phiS on a G x G grid.
ZakKernel2D zak_kernel_2d(const Generator& genT, const Generator& genS, double a, double b,
                          int gridSize);

struct KernelTerm2D {
    int shiftT = 0;
    int shiftS = 0;
    double weight = 0.0;
};

struct SamplingKernelSet2D {
    int baseStartT = 0;
    int baseStartS = 0;
    Eigen::MatrixXd baseCoeffs;  ///< S_{a,b} expansion over phiT/phiS shifts
    double tailMass = 0.0;

    double offsetT = 0.0;
    double offsetS = 0.0;
    int gridSize = 0;
    int radius = 0;

    int periodT = 1;
    int periodS = 1;
    int windowStartT = 0;
    int windowStartS = 0;
    std::vector<std::vector<KernelTerm2D>> channels;
    std::vector<std::string> labels;

    double base(const Generator& genT, const Generator& genS, double t, double s) const;
    double channel(const Generator& genT, const Generator& genS, int channel, double t,
                   double s) const;

    int minShiftT() const;
    int maxShiftT() const;
    int minShiftS() const;
    int maxShiftS() const;
};

/// 2D coefficients of 1/conj(K_{a,b}) by the grid transform, |n|,|m| <= radius;
/// identity channel only.
SamplingKernelSet2D shannon_kernel_2d(const ZakKernel2D& kernel, int radius,
                                      double rieszTol = 1e-6);

/** Attach a Kronecker scheme (axisT-major channel order) to a 2D base: combos
 *  come from the columns of the inverse of the (pT pS) x (pT pS) matrix,
 *  mapped back to per-axis shift pairs.
 */
SamplingKernelSet2D assemble_kernels_2d(const SamplingKernelSet2D& base,
                                        const SchemeMatrix& schemeT, const SchemeMatrix& schemeS);

/// Separable route: outer product of two assembled 1D kernel sets.
SamplingKernelSet2D kernel2d_separable(const SamplingKernelSet& ksT,
                                       const SamplingKernelSet& ksS);

}  // namespace sisamp
