// Symbolic descriptions of the per-channel sampling operators (differences,
// averages, generalized stencils) and their canonical text form.
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sisamp/common.hpp"

namespace sisamp {

enum class OpKind {
    Identity,
    Forward,      ///< iterated forward difference of given order
    Backward,     ///< iterated backward difference of given order
    CentralDiff,  ///< f(t+1) - f(t-1)
    ForwardAvg,   ///< (f(t+1) + f(t)) / 2
    BackwardAvg,  ///< (f(t) + f(t-1)) / 2
    CentralAvg,   ///< (f(t+1) + f(t-1)) / 2
    Generalized,  ///< sum_k c_k f(t + anchor + k)
};

/** One measured channel: an operator plus the integer offset inside the
 *  period window where it is applied.
 *
 *  Canonical text forms: "id@0", "fwd@0", "fwd^2@0", "bwd^3@1", "diff0@0",
 *  "avg+@0", "avg-@0", "avg0@0", "gen[1,-2,1]@-1".  For generalized specs
 *  the coefficients sit at consecutive offsets starting at the anchor.
 */
struct OperatorSpec {
    OpKind kind = OpKind::Identity;
    int order = 1;  ///< forward/backward only
    int anchor = 0;
    Eigen::VectorXd genCoeffs;  ///< generalized only

    static OperatorSpec identity(int anchor = 0);
    static OperatorSpec forward(int order, int anchor = 0);
    static OperatorSpec backward(int order, int anchor = 0);
    static OperatorSpec centralDiff(int anchor = 0);
    static OperatorSpec forwardAvg(int anchor = 0);
    static OperatorSpec backwardAvg(int anchor = 0);
    static OperatorSpec centralAvg(int anchor = 0);
    static OperatorSpec generalized(Eigen::VectorXd coeffs, int startOffset);

    static OperatorSpec parse(std::string_view text);
    std::string str() const;

    /** Coefficient stencil (firstOffset, weights): the channel value equals
     *  sum_i weights[i] * f(t + firstOffset + i).  Built by repeated
     *  convolution of the first-order stencils.
     */
    std::pair<int, Eigen::VectorXd> stencil() const;

    /// Apply the operator definitionally (iterated differences of the
    /// evaluated function, no precomputed stencil) at point t.
    double apply(const std::function<double(double)>& f, double t) const;
};

}  // namespace sisamp
