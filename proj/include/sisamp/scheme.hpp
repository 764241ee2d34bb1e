// Sampling-scheme matrices built from operator specs, and the application of
// those operators to signals over a block window.
#pragma once

#include <string>
#include <vector>

#include "sisamp/common.hpp"
#include "sisamp/operator_spec.hpp"
#include "sisamp/signal.hpp"

namespace sisamp {

/** The q x p matrix whose row j expresses channel j over the p consecutive
 *  sample offsets {windowStart, ..., windowStart + p - 1} of one period.
 *  Basis mode is q == p; q > p is the redundant (frame) mode.
 */
struct SchemeMatrix {
    Eigen::MatrixXd rows;  ///< q x p
    int period = 1;        ///< p
    int windowStart = 0;
    std::vector<std::string> labels;

    int channelCount() const { return static_cast<int>(rows.rows()); }
    bool basisMode() const { return rows.rows() == rows.cols(); }
};

/** Lay the operator stencils out over one period window.
 *
 *  The window start is the smallest offset any spec reaches; a spec whose
 *  reach exceeds p offsets (e.g. fwd^k with k > p-1, or central operators
 *  with p < 3), or a combined reach wider than one period, is rejected.
 */
SchemeMatrix scheme_matrix(const std::vector<OperatorSpec>& specs, int period);

/// One sequence per channel, channels(j, i) = (spec_j f)(a + p*(first + i)).
struct SampleSet {
    int period = 1;
    double offset = 0.0;  ///< a
    BlockWindow blocks;
    Eigen::MatrixXd channels;  ///< q x blocks.count()
};

SampleSet apply_operators(const Signal& f, const Generator& gen,
                          const std::vector<OperatorSpec>& specs, double a, int period,
                          BlockWindow blocks);

/// 2D channels indexed (specT-major, specS-minor); each entry is a
/// blocksT.count() x blocksS.count() array.
struct SampleSet2D {
    int periodT = 1;
    int periodS = 1;
    double offsetT = 0.0;
    double offsetS = 0.0;
    BlockWindow blocksT;
    BlockWindow blocksS;
    std::vector<Eigen::MatrixXd> channels;
};

SampleSet2D apply_operators_2d(const Signal2D& f, const Generator& genT, const Generator& genS,
                               const std::vector<OperatorSpec>& specsT,
                               const std::vector<OperatorSpec>& specsS, double a, double b,
                               int periodT, int periodS, BlockWindow blocksT,
                               BlockWindow blocksS);

}  // namespace sisamp
