#include "sisamp/zak.hpp"

#include <cmath>

namespace sisamp {

Eigen::VectorXcd zak_series(const Generator& gen, double t, int gridSize) {
    if (gridSize < 2) throw Error("zak_series: grid size must be >= 2");
    Eigen::VectorXcd values = Eigen::VectorXcd::Zero(gridSize);
    const auto [nLo, nHi] = gen.shiftRange(t, t);
    for (long n = nLo; n <= nHi; ++n) {
        const double w = gen(t - static_cast<double>(n));
        if (w == 0.0) continue;
        for (int j = 0; j < gridSize; ++j) {
            // e^{-2 pi i n x_j} with the phase reduced mod G before scaling,
            // so no error accumulates along the grid.
            const long long r = ((-n * static_cast<long long>(j)) % gridSize + gridSize) % gridSize;
            const double ang = kTwoPi * static_cast<double>(r) / gridSize;
            values[j] += w * Complex(std::cos(ang), std::sin(ang));
        }
    }
    return values;
}

ZakKernel zak_kernel(const Generator& gen, double a, int gridSize) {
    if (!(a >= 0.0 && a < 1.0)) {
        throw Error("zak_kernel: offset a must lie in [0,1), got " + std::to_string(a));
    }
    ZakKernel k;
    k.offset = a;
    k.gridSize = gridSize;
    k.values = zak_series(gen, a, gridSize);
    k.lowerBound = k.values.cwiseAbs().minCoeff(&k.minIndex);
    k.upperBound = k.values.cwiseAbs().maxCoeff();
    return k;
}

RieszCheck riesz_condition(const ZakKernel& kernel, double tol) {
    RieszCheck c;
    c.lowerBound = kernel.lowerBound;
    c.witness = kernel.gridPoint(kernel.minIndex);
    c.valid = kernel.lowerBound > tol;
    return c;
}

}  // namespace sisamp
