#include "sisamp/sampling_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace sisamp {

double SamplingKernelSet::base(const Generator& gen, double t) const {
    long lo = baseStart;
    long hi = baseStart + static_cast<long>(baseCoeffs.size()) - 1;
    if (gen.compactSupport()) {
        const auto [nLo, nHi] = gen.shiftRange(t, t);
        lo = std::max(lo, nLo);
        hi = std::min(hi, nHi);
    }
    double sum = 0.0;
    for (long n = lo; n <= hi; ++n) {
        sum += baseCoeffs[n - baseStart] * gen(t - static_cast<double>(n));
    }
    return sum;
}

double SamplingKernelSet::channel(const Generator& gen, int channel, double t) const {
    double sum = 0.0;
    for (const auto& term : channels.at(channel)) {
        sum += term.weight * base(gen, t - static_cast<double>(term.shift));
    }
    return sum;
}

int SamplingKernelSet::minShift() const {
    int lo = 0;
    bool first = true;
    for (const auto& combo : channels) {
        for (const auto& term : combo) {
            lo = first ? term.shift : std::min(lo, term.shift);
            first = false;
        }
    }
    return lo;
}

int SamplingKernelSet::maxShift() const {
    int hi = 0;
    bool first = true;
    for (const auto& combo : channels) {
        for (const auto& term : combo) {
            hi = first ? term.shift : std::max(hi, term.shift);
            first = false;
        }
    }
    return hi;
}

SamplingKernelSet shannon_kernel(const ZakKernel& kernel, int radius, double rieszTol) {
    if (radius < 1) throw Error("shannon_kernel: radius must be >= 1");
    if (kernel.gridSize < 4 * radius) {
        throw GridError("shannon_kernel: grid size " + std::to_string(kernel.gridSize) +
                        " is too coarse for radius " + std::to_string(radius) +
                        " (need gridSize >= 4*radius)");
    }
    const RieszCheck check = riesz_condition(kernel, rieszTol);
    if (!check.valid) {
        throw DegenerateKernelError(
            "shannon_kernel: Riesz condition fails, |K_a| = " +
                std::to_string(check.lowerBound) + " at x = " + std::to_string(check.witness),
            check.witness);
    }

    const int G = kernel.gridSize;
    const Eigen::VectorXcd f = kernel.values.conjugate().cwiseInverse();

    SamplingKernelSet ks;
    ks.offset = kernel.offset;
    ks.gridSize = G;
    ks.radius = radius;
    ks.baseStart = -radius;
    ks.baseCoeffs.resize(2 * radius + 1);
    double retained = 0.0;
    for (int n = -radius; n <= radius; ++n) {
        Complex c(0.0, 0.0);
        for (int j = 0; j < G; ++j) {
            // c_n = (1/G) sum_j f(x_j) e^{+2 pi i n x_j}
            const long long r = ((static_cast<long long>(n) * j) % G + G) % G;
            const double ang = kTwoPi * static_cast<double>(r) / G;
            c += f[j] * Complex(std::cos(ang), std::sin(ang));
        }
        c /= static_cast<double>(G);
        // real generators give real coefficients; anything beyond roundoff
        // means the kernel grid is inconsistent
        if (std::abs(c.imag()) > 1e-9 * std::max(1.0, std::abs(c.real()))) {
            throw Error("shannon_kernel: coefficient " + std::to_string(n) +
                        " has unexpected imaginary part " + std::to_string(c.imag()));
        }
        ks.baseCoeffs[n + radius] = c.real();
        retained += std::norm(c);
    }
    const double total = f.squaredNorm() / static_cast<double>(G);
    ks.tailMass = std::max(0.0, total - retained);

    ks.period = 1;
    ks.windowStart = 0;
    ks.channels = {{KernelTerm{0, 1.0}}};
    ks.labels = {"id@0"};
    return ks;
}

SamplingKernelSet assemble_kernels(const SamplingKernelSet& base, const SchemeMatrix& scheme,
                                   const DualMatrix& dual) {
    if (dual.columns.rows() != scheme.rows.cols() ||
        dual.columns.cols() != scheme.rows.rows()) {
        throw std::invalid_argument("assemble_kernels: dual matrix shape does not match scheme");
    }
    SamplingKernelSet ks = base;
    ks.period = scheme.period;
    ks.windowStart = scheme.windowStart;
    ks.channels.clear();
    ks.labels = scheme.labels;
    for (Eigen::Index j = 0; j < dual.columns.cols(); ++j) {
        std::vector<KernelTerm> combo;
        for (Eigen::Index k = 0; k < dual.columns.rows(); ++k) {
            const double w = dual.columns(k, j);
            if (w == 0.0) continue;
            combo.push_back({scheme.windowStart + static_cast<int>(k), w});
        }
        ks.channels.push_back(std::move(combo));
    }
    return ks;
}

double interpolation_check(const SamplingKernelSet& ks, const Generator& gen, int nRange) {
    double dev = 0.0;
    for (int n = -nRange; n <= nRange; ++n) {
        const double v = ks.base(gen, ks.offset + static_cast<double>(n));
        dev = std::max(dev, std::abs(v - (n == 0 ? 1.0 : 0.0)));
    }
    return dev;
}

}  // namespace sisamp
