// Cardinal B-spline evaluation.
#pragma once

#include "sisamp/common.hpp"

namespace sisamp {

/** Value of the cardinal B-spline of order m (piecewise degree m-1) at t.
 *
 *  N_1 is the indicator of [0,1); N_m = N_{m-1} * N_1, supported on [0,m].
 *  Evaluated with the Cox-de Boor recursion on the integer knots; no tables
 *  are precomputed.  Points outside [0,m) return 0.
 */
double bspline_eval(int order, double t);

/// Inner product of integer shifts, <N_m(.), N_m(.-k)> = N_{2m}(m+k).
double bspline_shift_gram(int order, long shift);

}  // namespace sisamp
