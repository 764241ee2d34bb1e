#include "sisamp/signal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sisamp/bspline.hpp"

namespace sisamp {

namespace {

double uniform_pm1(std::mt19937_64& eng) {
    // 53 mantissa bits -> [0,1), then affine to [-1,1).
    const double u = static_cast<double>(eng() >> 11) * 0x1p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

double Signal::eval(const Generator& gen, double t) const {
    long lo = start;
    long hi = end() - 1;
    if (gen.compactSupport()) {
        const auto [nLo, nHi] = gen.shiftRange(t, t);
        lo = std::max(lo, nLo);
        hi = std::min(hi, nHi);
    }
    double sum = 0.0;
    for (long n = lo; n <= hi; ++n) {
        sum += coeffs[n - start] * gen(t - static_cast<double>(n));
    }
    return sum;
}

double Signal2D::eval(const Generator& genT, const Generator& genS, double t, double s) const {
    long tLo = startT, tHi = startT + coeffs.rows() - 1;
    long sLo = startS, sHi = startS + coeffs.cols() - 1;
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
    return wT.dot(coeffs.block(tLo - startT, sLo - startS, wT.size(), wS.size()) * wS);
}

Signal random_signal(std::uint64_t seed, long start, int count) {
    std::mt19937_64 eng(seed);
    Signal f;
    f.start = start;
    f.coeffs.resize(count);
    for (int i = 0; i < count; ++i) f.coeffs[i] = uniform_pm1(eng);
    return f;
}

Signal2D random_signal_2d(std::uint64_t seed, long startT, long startS, int rows, int cols) {
    std::mt19937_64 eng(seed);
    Signal2D f;
    f.startT = startT;
    f.startS = startS;
    f.coeffs.resize(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) f.coeffs(i, j) = uniform_pm1(eng);
    }
    return f;
}

double l2_norm_sq(const Signal& f, const Generator& gen) {
    const long n = static_cast<long>(f.coeffs.size());
    switch (gen.kind()) {
        case GeneratorKind::Sinc:
            // integer shifts of sinc are orthonormal
            return f.coeffs.squaredNorm();
        case GeneratorKind::BSpline: {
            const int m = gen.order();
            double sum = 0.0;
            for (long i = 0; i < n; ++i) {
                for (long j = std::max(0L, i - m + 1); j < std::min(n, i + m); ++j) {
                    sum += f.coeffs[i] * f.coeffs[j] * bspline_shift_gram(m, i - j);
                }
            }
            return sum;
        }
        case GeneratorKind::Tabulated: {
            // trapezoid rule on a grid 8x finer than the coefficient spacing
            const double lo = gen.supportBegin() + static_cast<double>(f.start);
            const double hi = gen.supportEnd() + static_cast<double>(f.end() - 1);
            const long steps = 8 * static_cast<long>(std::ceil(hi - lo));
            const double h = (hi - lo) / static_cast<double>(steps);
            double sum = 0.0;
            for (long k = 0; k <= steps; ++k) {
                const double t = lo + h * static_cast<double>(k);
                const double v = f.eval(gen, t);
                sum += (k == 0 || k == steps ? 0.5 : 1.0) * v * v;
            }
            return sum * h;
        }
    }
    return 0.0;
}

}  // namespace sisamp
