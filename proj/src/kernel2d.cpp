#include "sisamp/kernel2d.hpp"

#include <algorithm>
#include <cmath>

namespace sisamp {

namespace {

/// E(i, j) = e^{+2 pi i (startIndex + i) x_j} on the G-point grid.
Eigen::MatrixXcd modulation_table(int startIndex, int count, int gridSize) {
    Eigen::MatrixXcd e(count, gridSize);
    for (int i = 0; i < count; ++i) {
        const long long n = startIndex + i;
        for (int j = 0; j < gridSize; ++j) {
            const long long r = ((n * j) % gridSize + gridSize) % gridSize;
            const double ang = kTwoPi * static_cast<double>(r) / gridSize;
            e(i, j) = Complex(std::cos(ang), std::sin(ang));
        }
    }
    return e;
}

}  // namespace

ZakKernel2D zak_kernel_2d(const Generator& genT, const Generator& genS, double a, double b,
                          int gridSize) {
    if (!(a >= 0.0 && a < 1.0) || !(b >= 0.0 && b < 1.0)) {
        throw Error("zak_kernel_2d: offsets must lie in [0,1)");
    }
    if (gridSize < 2) throw Error("zak_kernel_2d: grid size must be >= 2");

    ZakKernel2D k;
    k.offsetT = a;
    k.offsetS = b;
    k.gridSize = gridSize;
    k.values = Eigen::MatrixXcd::Zero(gridSize, gridSize);

    const auto [nLo, nHi] = genT.shiftRange(a, a);
    const auto [mLo, mHi] = genS.shiftRange(b, b);
    const Eigen::MatrixXcd eT = modulation_table(static_cast<int>(-nHi),
                                                 static_cast<int>(nHi - nLo + 1), gridSize);
    const Eigen::MatrixXcd eS = modulation_table(static_cast<int>(-mHi),
                                                 static_cast<int>(mHi - mLo + 1), gridSize);
    for (long n = nLo; n <= nHi; ++n) {
        for (long m = mLo; m <= mHi; ++m) {
            const double w = genT(a - static_cast<double>(n)) * genS(b - static_cast<double>(m));
            if (w == 0.0) continue;
            // e^{-2 pi i n x} row times e^{-2 pi i m y} row
            k.values.noalias() +=
                w * (eT.row(-n - (-nHi)).transpose() * eS.row(-m - (-mHi)));
        }
    }

    k.lowerBound = k.values.cwiseAbs().minCoeff(&k.minRow, &k.minCol);
    k.upperBound = k.values.cwiseAbs().maxCoeff();
    return k;
}

double SamplingKernelSet2D::base(const Generator& genT, const Generator& genS, double t,
                                 double s) const {
    long tLo = baseStartT, tHi = baseStartT + baseCoeffs.rows() - 1;
    long sLo = baseStartS, sHi = baseStartS + baseCoeffs.cols() - 1;
    if (genT.compactSupport()) {
        const auto [lo, hi] = genT.shiftRange(t, t);
        tLo = std::max(tLo, lo);
        tHi = std::min(tHi, hi);
    }
    if (genS.compactSupport()) {
        const auto [lo, hi] = genS.shiftRange(s, s);
        sLo = std::max(sLo, lo);
        sHi = std::min(sHi, hi);
    }
    if (tLo > tHi || sLo > sHi) return 0.0;
    Eigen::VectorXd wT(tHi - tLo + 1), wS(sHi - sLo + 1);
    for (long n = tLo; n <= tHi; ++n) wT[n - tLo] = genT(t - static_cast<double>(n));
    for (long m = sLo; m <= sHi; ++m) wS[m - sLo] = genS(s - static_cast<double>(m));
    return wT.dot(baseCoeffs.block(tLo - baseStartT, sLo - baseStartS, wT.size(), wS.size()) * wS);
}

double SamplingKernelSet2D::channel(const Generator& genT, const Generator& genS, int channel,
                                    double t, double s) const {
    double sum = 0.0;
    for (const auto& term : channels.at(channel)) {
        sum += term.weight * base(genT, genS, t - static_cast<double>(term.shiftT),
                                  s - static_cast<double>(term.shiftS));
    }
    return sum;
}

int SamplingKernelSet2D::minShiftT() const {
    int v = 0;
    bool first = true;
    for (const auto& combo : channels)
        for (const auto& term : combo) {
            v = first ? term.shiftT : std::min(v, term.shiftT);
            first = false;
        }
    return v;
}

int SamplingKernelSet2D::maxShiftT() const {
    int v = 0;
    bool first = true;
    for (const auto& combo : channels)
        for (const auto& term : combo) {
            v = first ? term.shiftT : std::max(v, term.shiftT);
            first = false;
        }
    return v;
}

int SamplingKernelSet2D::minShiftS() const {
    int v = 0;
    bool first = true;
    for (const auto& combo : channels)
        for (const auto& term : combo) {
            v = first ? term.shiftS : std::min(v, term.shiftS);
            first = false;
        }
    return v;
}

int SamplingKernelSet2D::maxShiftS() const {
    int v = 0;
    bool first = true;
    for (const auto& combo : channels)
        for (const auto& term : combo) {
            v = first ? term.shiftS : std::max(v, term.shiftS);
            first = false;
        }
    return v;
}

SamplingKernelSet2D shannon_kernel_2d(const ZakKernel2D& kernel, int radius, double rieszTol) {
    if (radius < 1) throw Error("shannon_kernel_2d: radius must be >= 1");
    const int G = kernel.gridSize;
    if (G < 4 * radius) {
        throw GridError("shannon_kernel_2d: grid size " + std::to_string(G) +
                        " is too coarse for radius " + std::to_string(radius) +
                        " (need gridSize >= 4*radius)");
    }
    if (kernel.lowerBound <= rieszTol) {
        throw DegenerateKernelError(
            "shannon_kernel_2d: Riesz condition fails, |K| = " +
                std::to_string(kernel.lowerBound) + " at (x,y) = (" +
                std::to_string(static_cast<double>(kernel.minRow) / G) + ", " +
                std::to_string(static_cast<double>(kernel.minCol) / G) + ")",
            static_cast<double>(kernel.minRow) / G);
    }

    const Eigen::MatrixXcd f = kernel.values.conjugate().cwiseInverse();
    const int count = 2 * radius + 1;
    const Eigen::MatrixXcd e = modulation_table(-radius, count, G);
    // c_{n,m} = (1/G^2) sum_{j,l} f(x_j, y_l) e^{+2 pi i n x_j} e^{+2 pi i m y_l}
    const Eigen::MatrixXcd c = (e * f * e.transpose()) / static_cast<double>(G) /
                               static_cast<double>(G);

    SamplingKernelSet2D ks;
    ks.offsetT = kernel.offsetT;
    ks.offsetS = kernel.offsetS;
    ks.gridSize = G;
    ks.radius = radius;
    ks.baseStartT = -radius;
    ks.baseStartS = -radius;
    const double maxImag = c.imag().cwiseAbs().maxCoeff();
    if (maxImag > 1e-9 * std::max(1.0, c.real().cwiseAbs().maxCoeff())) {
        throw Error("shannon_kernel_2d: coefficients have unexpected imaginary part " +
                    std::to_string(maxImag));
    }
    ks.baseCoeffs = c.real();
    const double total = f.squaredNorm() / static_cast<double>(G) / static_cast<double>(G);
    ks.tailMass = std::max(0.0, total - c.squaredNorm());

    ks.channels = {{KernelTerm2D{0, 0, 1.0}}};
    ks.labels = {"(id@0)x(id@0)"};
    return ks;
}

SamplingKernelSet2D assemble_kernels_2d(const SamplingKernelSet2D& base,
                                        const SchemeMatrix& schemeT,
                                        const SchemeMatrix& schemeS) {
    const SchemeMatrix kron = kronecker(schemeT, schemeS);
    const DualMatrix dual = invert_scheme(kron);

    SamplingKernelSet2D ks = base;
    ks.periodT = schemeT.period;
    ks.periodS = schemeS.period;
    ks.windowStartT = schemeT.windowStart;
    ks.windowStartS = schemeS.windowStart;
    ks.channels.clear();
    ks.labels = kron.labels;
    const int pS = schemeS.period;
    for (Eigen::Index j = 0; j < dual.columns.cols(); ++j) {
        std::vector<KernelTerm2D> combo;
        for (Eigen::Index k = 0; k < dual.columns.rows(); ++k) {
            const double w = dual.columns(k, j);
            if (w == 0.0) continue;
            const int kT = static_cast<int>(k) / pS;
            const int kS = static_cast<int>(k) % pS;
            combo.push_back({schemeT.windowStart + kT, schemeS.windowStart + kS, w});
        }
        ks.channels.push_back(std::move(combo));
    }
    return ks;
}

SamplingKernelSet2D kernel2d_separable(const SamplingKernelSet& ksT,
                                       const SamplingKernelSet& ksS) {
    SamplingKernelSet2D ks;
    ks.baseStartT = ksT.baseStart;
    ks.baseStartS = ksS.baseStart;
    ks.baseCoeffs = ksT.baseCoeffs * ksS.baseCoeffs.transpose();
    ks.tailMass = ksT.tailMass + ksS.tailMass;
    ks.offsetT = ksT.offset;
    ks.offsetS = ksS.offset;
    ks.gridSize = std::min(ksT.gridSize, ksS.gridSize);
    ks.radius = std::max(ksT.radius, ksS.radius);
    ks.periodT = ksT.period;
    ks.periodS = ksS.period;
    ks.windowStartT = ksT.windowStart;
    ks.windowStartS = ksS.windowStart;
    for (std::size_t jT = 0; jT < ksT.channels.size(); ++jT) {
        for (std::size_t jS = 0; jS < ksS.channels.size(); ++jS) {
            std::vector<KernelTerm2D> combo;
            for (const auto& tT : ksT.channels[jT]) {
                for (const auto& tS : ksS.channels[jS]) {
                    combo.push_back({tT.shift, tS.shift, tT.weight * tS.weight});
                }
            }
            ks.channels.push_back(std::move(combo));
            ks.labels.push_back("(" + ksT.labels[jT] + ")x(" + ksS.labels[jS] + ")");
        }
    }
    return ks;
}

}  // namespace sisamp
