#include "sisamp/riesz_algebra.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace sisamp {

namespace {

// ---- exact rational elimination for small scheme matrices ----

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct RationalOverflow {};

long long checked_mul(long long a, long long b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<long long>::max() || p < std::numeric_limits<long long>::min()) {
        throw RationalOverflow{};
    }
    return static_cast<long long>(p);
}

long long checked_add(long long a, long long b) {
    const __int128 s = static_cast<__int128>(a) + b;
    if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min()) {
        throw RationalOverflow{};
    }
    return static_cast<long long>(s);
}

Rational reduce(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Rational add(Rational a, Rational b) {
    return reduce(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}

Rational mul(Rational a, Rational b) {
    return reduce(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rational neg(Rational a) { return {-a.num, a.den}; }

Rational inv(Rational a) {
    if (a.num == 0) throw RationalOverflow{};
    return reduce(a.den, a.num);
}

double to_double(Rational a) { return static_cast<double>(a.num) / static_cast<double>(a.den); }

/// Detect a double that is exactly m / 2^k with small k (covers every
/// integer/half-integer scheme entry).
std::optional<Rational> dyadic_of(double x) {
    if (!std::isfinite(x)) return std::nullopt;
    long long den = 1;
    for (int k = 0; k <= 24; ++k) {
        const double scaled = x * static_cast<double>(den);
        if (scaled == std::floor(scaled) && std::abs(scaled) < 9.0e15) {
            return reduce(static_cast<long long>(scaled), den);
        }
        den <<= 1;
    }
    return std::nullopt;
}

struct RationalInverse {
    Eigen::MatrixXd inverse;
    double determinant;
};

/// Gauss-Jordan over exact fractions; nullopt when an entry is not rational
/// or an intermediate overflows, signalling the caller to use floating LU.
std::optional<RationalInverse> rational_invert(const Eigen::MatrixXd& m) {
    const Eigen::Index p = m.rows();
    std::vector<std::vector<Rational>> a(p, std::vector<Rational>(2 * p));
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            const auto r = dyadic_of(m(i, j));
            if (!r) return std::nullopt;
            a[i][j] = *r;
        }
        a[i][p + i] = {1, 1};
    }

    try {
        Rational det{1, 1};
        for (Eigen::Index col = 0; col < p; ++col) {
            Eigen::Index pivot = -1;
            for (Eigen::Index row = col; row < p; ++row) {
                if (a[row][col].num != 0) {
                    pivot = row;
                    break;
                }
            }
            if (pivot < 0) {
                return RationalInverse{Eigen::MatrixXd(), 0.0};  // exactly singular
            }
            if (pivot != col) {
                std::swap(a[pivot], a[col]);
                det = neg(det);
            }
            det = mul(det, a[col][col]);
            const Rational scale = inv(a[col][col]);
            for (Eigen::Index j = 0; j < 2 * p; ++j) a[col][j] = mul(a[col][j], scale);
            for (Eigen::Index row = 0; row < p; ++row) {
                if (row == col || a[row][col].num == 0) continue;
                const Rational f = neg(a[row][col]);
                for (Eigen::Index j = col; j < 2 * p; ++j) {
                    a[row][j] = add(a[row][j], mul(f, a[col][j]));
                }
            }
        }
        RationalInverse out;
        out.inverse.resize(p, p);
        for (Eigen::Index i = 0; i < p; ++i) {
            for (Eigen::Index j = 0; j < p; ++j) out.inverse(i, j) = to_double(a[i][p + j]);
        }
        out.determinant = to_double(det);
        return out;
    } catch (const RationalOverflow&) {
        return std::nullopt;
    }
}

double singular_tolerance(const Eigen::MatrixXd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return 1e-12 * std::pow(scale, static_cast<double>(m.rows()));
}

}  // namespace

DualMatrix invert_scheme(const SchemeMatrix& m) {
    if (!m.basisMode()) {
        throw std::invalid_argument(
            "invert_scheme: basis mode needs q = p (got q = " +
            std::to_string(m.rows.rows()) + ", p = " + std::to_string(m.rows.cols()) +
            "); redundant schemes go through left_inverse");
    }
    const double tol = singular_tolerance(m.rows);

    DualMatrix d;
    d.frameMode = false;
    if (const auto exact = rational_invert(m.rows)) {
        // the rational route decides singularity exactly
        if (exact->inverse.size() == 0) {
            throw SingularSchemeError(
                "invert_scheme: scheme matrix is singular (det = 0); not a Riesz basis", 0.0);
        }
        d.columns = exact->inverse;
        d.determinant = exact->determinant;
        return d;
    }

    const Eigen::FullPivLU<Eigen::MatrixXd> lu(m.rows);
    const double det = lu.determinant();
    if (std::abs(det) < tol) {
        throw SingularSchemeError("invert_scheme: scheme matrix is singular (det = " +
                                      std::to_string(det) + "); not a Riesz basis",
                                  det);
    }
    d.columns = lu.inverse();
    d.determinant = det;
    return d;
}

DualMatrix left_inverse(const SchemeMatrix& m) {
    const Eigen::Index q = m.rows.rows();
    const Eigen::Index p = m.rows.cols();
    if (q <= p) {
        throw std::invalid_argument(
            "left_inverse: frame mode needs q > p (got q = " + std::to_string(q) +
            ", p = " + std::to_string(p) + "); square schemes go through invert_scheme");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m.rows);
    qr.setThreshold(1e-10);
    if (qr.rank() < p) {
        throw NotAFrameError("left_inverse: rank " + std::to_string(qr.rank()) +
                             " < p = " + std::to_string(p) + "; channels do not span a frame");
    }
    DualMatrix d;
    d.frameMode = true;
    d.determinant = std::numeric_limits<double>::quiet_NaN();
    const Eigen::MatrixXd gram = m.rows.transpose() * m.rows;
    d.columns = gram.ldlt().solve(m.rows.transpose());
    return d;
}

DualMatrix left_inverse(const SchemeMatrix& m, const Eigen::MatrixXd& u) {
    DualMatrix d = left_inverse(m);
    if (u.rows() != d.columns.rows() || u.cols() != d.columns.cols()) {
        throw std::invalid_argument("left_inverse: U must be p x q");
    }
    const Eigen::Index q = m.rows.rows();
    d.columns += u * (Eigen::MatrixXd::Identity(q, q) - m.rows * d.columns);
    return d;
}

DualMatrix dual_for(const SchemeMatrix& m) {
    return m.basisMode() ? invert_scheme(m) : left_inverse(m);
}

SchemeMatrix kronecker(const SchemeMatrix& m1, const SchemeMatrix& m2) {
    if (!m1.basisMode() || !m2.basisMode()) {
        throw std::invalid_argument("kronecker: both factors must be in basis mode");
    }
    SchemeMatrix out;
    out.rows = kronecker_product(m1.rows, m2.rows);
    out.period = m1.period * m2.period;
    out.windowStart = 0;  // 2D offsets are tracked per axis by the kernel assembly
    for (const auto& l1 : m1.labels) {
        for (const auto& l2 : m2.labels) out.labels.push_back("(" + l1 + ")x(" + l2 + ")");
    }
    return out;
}

double biorthogonality_check(const SchemeMatrix& m, const DualMatrix& dual,
                             const ZakKernel& kernel, int indexWindow) {
    if (!m.basisMode()) {
        throw std::invalid_argument("biorthogonality_check: requires a basis-mode scheme");
    }
    if (const RieszCheck check = riesz_condition(kernel); !check.valid) {
        throw DegenerateKernelError(
            "biorthogonality_check: kernel degenerates near x = " +
                std::to_string(check.witness),
            check.witness);
    }
    const int G = kernel.gridSize;
    const int p = m.period;
    const Eigen::Index q = m.rows.rows();
    const long nCount = 2L * indexWindow + 1;

    const auto modulation = [&](long shift) {
        Eigen::VectorXcd e(G);
        for (int j = 0; j < G; ++j) {
            const long long r = ((-shift * static_cast<long long>(j)) % G + G) % G;
            const double ang = kTwoPi * static_cast<double>(r) / G;
            e[j] = Complex(std::cos(ang), std::sin(ang));
        }
        return e;
    };

    // rows of Z: the transformed sequences z_jn; rows of Zd: the dual family
    Eigen::MatrixXcd z(q * nCount, G), zd(dual.columns.cols() * nCount, G);
    const Eigen::VectorXcd dualBase = kernel.values.conjugate().cwiseInverse();
    for (long nb = -indexWindow; nb <= indexWindow; ++nb) {
        std::vector<Eigen::VectorXcd> shiftMod(p);
        for (int k = 0; k < p; ++k) {
            shiftMod[k] = modulation(static_cast<long>(p) * nb + m.windowStart + k);
        }
        for (Eigen::Index j = 0; j < q; ++j) {
            Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(G);
            for (int k = 0; k < p; ++k) acc += m.rows(j, k) * shiftMod[k];
            z.row(j + q * (nb + indexWindow)) = (acc.array() * kernel.values.array()).matrix();
        }
        for (Eigen::Index j = 0; j < dual.columns.cols(); ++j) {
            Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(G);
            for (int k = 0; k < p; ++k) acc += dual.columns(k, j) * shiftMod[k];
            zd.row(j + dual.columns.cols() * (nb + indexWindow)) =
                (acc.array() * dualBase.array()).matrix();
        }
    }

    const Eigen::MatrixXcd gram = (z * zd.adjoint()) / static_cast<double>(G);
    double dev = 0.0;
    for (Eigen::Index r = 0; r < gram.rows(); ++r) {
        for (Eigen::Index c = 0; c < gram.cols(); ++c) {
            const double expected = (r == c) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(gram(r, c) - Complex(expected, 0.0)));
        }
    }
    return dev;
}

}  // namespace sisamp
