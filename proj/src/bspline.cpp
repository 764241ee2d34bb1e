#include "sisamp/bspline.hpp"

#include <cmath>

namespace sisamp {

double bspline_eval(int order, double t) {
    if (order < 1) {
        throw InvalidOrderError("bspline_eval: order must be >= 1, got " +
                                std::to_string(order));
    }
    if (!(t >= 0.0) || t >= static_cast<double>(order)) return 0.0;

    const int base = static_cast<int>(std::floor(t));
    // v[i] holds N_k(t - i); one trailing slot so v[i + 1] is always readable.
    Eigen::VectorXd v = Eigen::VectorXd::Zero(order + 1);
    v[base] = 1.0;
    for (int k = 2; k <= order; ++k) {
        const int lo = std::max(0, base - k + 1);
        const double inv = 1.0 / (k - 1);
        for (int i = lo; i <= base; ++i) {
            v[i] = ((t - i) * v[i] + (i + k - t) * v[i + 1]) * inv;
        }
    }
    return v[0];
}

double bspline_shift_gram(int order, long shift) {
    const long arg = order + shift;
    if (arg <= 0 || arg >= 2 * order) return 0.0;
    return bspline_eval(2 * order, static_cast<double>(arg));
}

}  // namespace sisamp
