#include "sisamp/reconstruct.hpp"

#include <algorithm>
#include <cmath>

namespace sisamp {

namespace {

BlockWindow blocks_for(double evalMin, double evalMax, int period, int minShift, int maxShift,
                       int baseStart, long baseLen, double suppLo, double suppHi) {
    // T_j(tau) can be nonzero for tau in [minShift + baseStart + suppLo,
    // maxShift + baseStart + baseLen - 1 + suppHi]; block n reaches t iff
    // t - p n lies in that interval.
    const double lo = minShift + baseStart + suppLo;
    const double hi = maxShift + baseStart + static_cast<double>(baseLen - 1) + suppHi;
    BlockWindow w;
    w.first = static_cast<long>(std::floor((evalMin - hi) / period));
    w.last = static_cast<long>(std::ceil((evalMax - lo) / period));
    return w;
}

}  // namespace

BlockWindow required_blocks(const SamplingKernelSet& ks, const Generator& gen, double evalMin,
                            double evalMax) {
    return blocks_for(evalMin, evalMax, ks.period, ks.minShift(), ks.maxShift(), ks.baseStart,
                      ks.baseCoeffs.size(), gen.supportBegin(), gen.supportEnd());
}

BlockWindow required_blocks_t(const SamplingKernelSet2D& ks, const Generator& genT,
                              double evalMin, double evalMax) {
    return blocks_for(evalMin, evalMax, ks.periodT, ks.minShiftT(), ks.maxShiftT(), ks.baseStartT,
                      ks.baseCoeffs.rows(), genT.supportBegin(), genT.supportEnd());
}

BlockWindow required_blocks_s(const SamplingKernelSet2D& ks, const Generator& genS,
                              double evalMin, double evalMax) {
    return blocks_for(evalMin, evalMax, ks.periodS, ks.minShiftS(), ks.maxShiftS(), ks.baseStartS,
                      ks.baseCoeffs.cols(), genS.supportBegin(), genS.supportEnd());
}

Signal reconstruct_coeffs(const SampleSet& samples, const SamplingKernelSet& ks) {
    if (samples.channels.rows() != static_cast<Eigen::Index>(ks.channels.size())) {
        throw std::invalid_argument("reconstruct_coeffs: sample channels do not match kernel set");
    }
    if (samples.period != ks.period) {
        throw std::invalid_argument("reconstruct_coeffs: sample period does not match kernel set");
    }
    const long p = ks.period;
    const long baseLen = ks.baseCoeffs.size();
    const long first = p * samples.blocks.first + ks.minShift() + ks.baseStart;
    const long last = p * samples.blocks.last + ks.maxShift() + ks.baseStart + baseLen - 1;

    Signal out;
    out.start = first;
    out.coeffs = Eigen::VectorXd::Zero(last - first + 1);
    for (Eigen::Index j = 0; j < samples.channels.rows(); ++j) {
        for (long i = 0; i < samples.blocks.count(); ++i) {
            const double c = samples.channels(j, i);
            if (c == 0.0) continue;
            const long n = samples.blocks.first + i;
            for (const auto& term : ks.channels[j]) {
                const long pos = p * n + term.shift + ks.baseStart - first;
                out.coeffs.segment(pos, baseLen) += (c * term.weight) * ks.baseCoeffs;
            }
        }
    }
    return out;
}

Signal2D reconstruct_coeffs_2d(const SampleSet2D& samples, const SamplingKernelSet2D& ks) {
    if (samples.channels.size() != ks.channels.size()) {
        throw std::invalid_argument(
            "reconstruct_coeffs_2d: sample channels do not match kernel set");
    }
    if (samples.periodT != ks.periodT || samples.periodS != ks.periodS) {
        throw std::invalid_argument(
            "reconstruct_coeffs_2d: sample periods do not match kernel set");
    }
    const long pT = ks.periodT, pS = ks.periodS;
    const long rowsBase = ks.baseCoeffs.rows(), colsBase = ks.baseCoeffs.cols();
    const long firstT = pT * samples.blocksT.first + ks.minShiftT() + ks.baseStartT;
    const long lastT = pT * samples.blocksT.last + ks.maxShiftT() + ks.baseStartT + rowsBase - 1;
    const long firstS = pS * samples.blocksS.first + ks.minShiftS() + ks.baseStartS;
    const long lastS = pS * samples.blocksS.last + ks.maxShiftS() + ks.baseStartS + colsBase - 1;

    Signal2D out;
    out.startT = firstT;
    out.startS = firstS;
    out.coeffs = Eigen::MatrixXd::Zero(lastT - firstT + 1, lastS - firstS + 1);
    for (std::size_t j = 0; j < ks.channels.size(); ++j) {
        const Eigen::MatrixXd& ch = samples.channels[j];
        for (long i = 0; i < samples.blocksT.count(); ++i) {
            for (long l = 0; l < samples.blocksS.count(); ++l) {
                const double c = ch(i, l);
                if (c == 0.0) continue;
                const long n = samples.blocksT.first + i;
                const long m = samples.blocksS.first + l;
                for (const auto& term : ks.channels[j]) {
                    const long rowPos = pT * n + term.shiftT + ks.baseStartT - firstT;
                    const long colPos = pS * m + term.shiftS + ks.baseStartS - firstS;
                    out.coeffs.block(rowPos, colPos, rowsBase, colsBase) +=
                        (c * term.weight) * ks.baseCoeffs;
                }
            }
        }
    }
    return out;
}

Eigen::VectorXd reconstruct_1d(const SampleSet& samples, const SamplingKernelSet& ks,
                               const Generator& gen, const Eigen::VectorXd& evalGrid) {
    if (evalGrid.size() == 0) return {};
    const BlockWindow required =
        required_blocks(ks, gen, evalGrid.minCoeff(), evalGrid.maxCoeff());
    if (!samples.blocks.contains(required)) {
        throw CoverageError(
            "reconstruct_1d: sample window [" + std::to_string(samples.blocks.first) + ", " +
                std::to_string(samples.blocks.last) + "] does not cover required blocks [" +
                std::to_string(required.first) + ", " + std::to_string(required.last) + "]",
            required);
    }
    const Signal recon = reconstruct_coeffs(samples, ks);
    Eigen::VectorXd values(evalGrid.size());
    for (Eigen::Index i = 0; i < evalGrid.size(); ++i) values[i] = recon.eval(gen, evalGrid[i]);
    return values;
}

Eigen::MatrixXd reconstruct_2d(const SampleSet2D& samples, const SamplingKernelSet2D& ks,
                               const Generator& genT, const Generator& genS,
                               const Eigen::VectorXd& evalGridT,
                               const Eigen::VectorXd& evalGridS) {
    if (evalGridT.size() == 0 || evalGridS.size() == 0) return {};
    const BlockWindow reqT =
        required_blocks_t(ks, genT, evalGridT.minCoeff(), evalGridT.maxCoeff());
    const BlockWindow reqS =
        required_blocks_s(ks, genS, evalGridS.minCoeff(), evalGridS.maxCoeff());
    if (!samples.blocksT.contains(reqT)) {
        throw CoverageError("reconstruct_2d: t-axis sample window [" +
                                std::to_string(samples.blocksT.first) + ", " +
                                std::to_string(samples.blocksT.last) +
                                "] does not cover required blocks [" +
                                std::to_string(reqT.first) + ", " + std::to_string(reqT.last) +
                                "]",
                            reqT);
    }
    if (!samples.blocksS.contains(reqS)) {
        throw CoverageError("reconstruct_2d: s-axis sample window [" +
                                std::to_string(samples.blocksS.first) + ", " +
                                std::to_string(samples.blocksS.last) +
                                "] does not cover required blocks [" +
                                std::to_string(reqS.first) + ", " + std::to_string(reqS.last) +
                                "]",
                            reqS);
    }
    const Signal2D recon = reconstruct_coeffs_2d(samples, ks);
    Eigen::MatrixXd values(evalGridT.size(), evalGridS.size());
    for (Eigen::Index i = 0; i < evalGridT.size(); ++i) {
        for (Eigen::Index j = 0; j < evalGridS.size(); ++j) {
            values(i, j) = recon.eval(genT, genS, evalGridT[i], evalGridS[j]);
        }
    }
    return values;
}

ReconstructionReport make_report(const Eigen::VectorXd& reference,
                                 const Eigen::VectorXd& reconstructed, double spacing) {
    if (reference.size() != reconstructed.size()) {
        throw std::invalid_argument("make_report: size mismatch");
    }
    ReconstructionReport r;
    const Eigen::VectorXd err = reconstructed - reference;
    r.maxAbsError = err.size() ? err.cwiseAbs().maxCoeff() : 0.0;
    r.l2GridError = std::sqrt(spacing * err.squaredNorm());
    return r;
}

}  // namespace sisamp
