// Generators of shift-invariant spaces: B-splines, sinc, tabulated functions.
#pragma once

#include <string>
#include <utility>

#include "sisamp/common.hpp"

namespace sisamp {

enum class GeneratorKind { BSpline, Sinc, Tabulated };

/** A generator function phi whose integer shifts span the space.
 *
 *  B-splines are supported exactly on [0, m]; sinc has unbounded support and
 *  carries a series truncation radius used whenever an infinite shift sum has
 *  to be cut off (an explicit approximation knob, default 64).  Tabulated
 *  generators interpolate linearly between samples on a uniform grid and
 *  vanish outside it.
 */
class Generator {
public:
    static Generator bspline(int order);
    static Generator sinc(int seriesRadius = 64);
    static Generator tabulated(Eigen::VectorXd values, double start, double step);

    double operator()(double t) const;

    GeneratorKind kind() const { return kind_; }
    int order() const { return order_; }
    int seriesRadius() const { return seriesRadius_; }
    bool compactSupport() const { return kind_ != GeneratorKind::Sinc; }
    double supportBegin() const;
    double supportEnd() const;

    /// Integer shifts n for which phi(x - n) can be nonzero, x in [lo, hi].
    /// For sinc the range is truncated at the series radius.
    std::pair<long, long> shiftRange(double lo, double hi) const;

    std::string describe() const;

private:
    Generator() = default;

    GeneratorKind kind_ = GeneratorKind::BSpline;
    int order_ = 1;
    int seriesRadius_ = 64;
    Eigen::VectorXd values_;
    double tabStart_ = 0.0;
    double tabStep_ = 1.0;
};

/// Numerical estimates of the hypotheses on phi, taken over a finite grid.
struct GeneratorDiagnostics {
    double maxGridDelta;    ///< max |phi(t+h) - phi(t)|, h = one grid step
    double sumSquaresMin;   ///< min over [0,1) of sum_n phi(t-n)^2
    double sumSquaresMax;   ///< max over [0,1) of sum_n phi(t-n)^2
};

GeneratorDiagnostics generator_diagnostics(const Generator& gen, int gridSize = 1024);

}  // namespace sisamp
