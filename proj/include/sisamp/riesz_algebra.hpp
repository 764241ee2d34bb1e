// Dual-basis algebra for scheme matrices: exact inversion, frame left
// inverses, Kronecker products and the biorthogonality check.
#pragma once

#include "sisamp/common.hpp"
#include "sisamp/scheme.hpp"
#include "sisamp/zak.hpp"

namespace sisamp {

/** Columns of M^{-1} (basis mode) or of a left inverse N (frame mode).
 *  Column j carries the weights of the dual element paired with channel j.
 */
struct DualMatrix {
    Eigen::MatrixXd columns;  ///< p x q
    double determinant = 0.0;  ///< NaN in frame mode
    bool frameMode = false;
};

/** Invert a square scheme matrix.
 *
 *  Entries that are exactly representable as small rationals (all the
 *  difference/average schemes) are inverted in exact integer fractions and
 *  only cast to double at the end, so comparisons against tabulated inverses
 *  are exact.  Anything else falls back to a pivoted LU.
 */
DualMatrix invert_scheme(const SchemeMatrix& m);

/// Moore-Penrose left inverse (M* M)^{-1} M* of a full-rank tall matrix.
DualMatrix left_inverse(const SchemeMatrix& m);

/// General left inverse N = pinv + U (I_q - M pinv) for an arbitrary p x q U.
DualMatrix left_inverse(const SchemeMatrix& m, const Eigen::MatrixXd& u);

/// invert_scheme for square schemes, left_inverse for redundant ones.
DualMatrix dual_for(const SchemeMatrix& m);

/// Kronecker product, row/column ordering m1-major.
SchemeMatrix kronecker(const SchemeMatrix& m1, const SchemeMatrix& m2);

/// Expression-friendly dense Kronecker product.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
        a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
        }
    }
    return out;
}

/** Max deviation of <z_jn, zdual_j'm> from delta_{jj'} delta_{nm} over
 *  |n|,|m| <= indexWindow, with the inner products taken by the rectangle
 *  rule on the kernel grid.
 */
double biorthogonality_check(const SchemeMatrix& m, const DualMatrix& dual,
                             const ZakKernel& kernel, int indexWindow = 4);

}  // namespace sisamp
