// Elements of the shift-invariant space as finitely supported coefficient
// sequences, plus seeded random signals and Gram-matrix norms.
#pragma once

#include <cstdint>

#include "sisamp/common.hpp"
#include "sisamp/generator.hpp"

namespace sisamp {

/// f(t) = sum_i coeffs[i] phi(t - (start + i)).
struct Signal {
    long start = 0;
    Eigen::VectorXd coeffs;

    long end() const { return start + static_cast<long>(coeffs.size()); }  ///< one past last
    double eval(const Generator& gen, double t) const;
};

/// f(t,s) = sum_{i,j} coeffs(i,j) phiT(t - (startT + i)) phiS(s - (startS + j)).
struct Signal2D {
    long startT = 0;
    long startS = 0;
    Eigen::MatrixXd coeffs;

    double eval(const Generator& genT, const Generator& genS, double t, double s) const;
};

/// Coefficients i.i.d. uniform on [-1,1] from a seeded mt19937_64, with a
/// fixed bit-to-double mapping so identical seeds give identical bytes on
/// every platform.
Signal random_signal(std::uint64_t seed, long start, int count);
Signal2D random_signal_2d(std::uint64_t seed, long startT, long startS, int rows, int cols);

/// ||f||_{L2}^2 via the Gram matrix of generator shifts (exact shift inner
/// products for B-splines and sinc; quadrature for tabulated generators).
double l2_norm_sq(const Signal& f, const Generator& gen);

}  // namespace sisamp
