// Zak-transform kernels K_a on a uniform grid of (0,1) and the Riesz
// stability check on their modulus bounds.
#pragma once

#include "sisamp/common.hpp"
#include "sisamp/generator.hpp"

namespace sisamp {

/** Grid values of K_a(x) = sum_n conj(phi(a-n)) e^{-2 pi i n x}.
 *
 *  The grid is x_j = j/G, j = 0..G-1.  lowerBound / upperBound are the grid
 *  min / max of |K_a| and estimate the essential inf / sup that govern the
 *  stability of sampling at offset a.
 */
struct ZakKernel {
    double offset = 0.0;  ///< a
    int gridSize = 0;     ///< G
    Eigen::VectorXcd values;
    double lowerBound = 0.0;
    double upperBound = 0.0;
    int minIndex = 0;  ///< grid index attaining lowerBound

    double gridPoint(int j) const { return static_cast<double>(j) / gridSize; }
};

/// The series sum_n conj(phi(t-n)) e^{-2 pi i n x_j} for arbitrary real t
/// (no offset restriction; used to exercise the modulation identity
/// K_{t+m}(x) = e^{-2 pi i m x} K_t(x)).
Eigen::VectorXcd zak_series(const Generator& gen, double t, int gridSize);

/// Kernel at offset a in [0,1) on a G-point grid, G >= 2.
ZakKernel zak_kernel(const Generator& gen, double a, int gridSize);

struct RieszCheck {
    bool valid = false;
    double witness = 0.0;  ///< grid point of minimal modulus
    double lowerBound = 0.0;
};

/// valid iff the grid estimate of ||K_a||_0 exceeds tol; otherwise returns
/// the witnessing grid point.
RieszCheck riesz_condition(const ZakKernel& kernel, double tol = 1e-6);

}  // namespace sisamp
