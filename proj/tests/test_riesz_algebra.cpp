#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sisamp/riesz_algebra.hpp"

using namespace sisamp;

namespace {

SchemeMatrix raw_scheme(Eigen::MatrixXd rows, int windowStart = 0) {
    SchemeMatrix m;
    m.period = static_cast<int>(rows.cols());
    m.windowStart = windowStart;
    m.labels.assign(rows.rows(), "row");
    m.rows = std::move(rows);
    return m;
}

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
    Eigen::MatrixXd m(rows.size(), rows.begin()->size());
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<OperatorSpec> specs_of(const std::vector<std::string>& texts) {
    std::vector<OperatorSpec> out;
    for (const auto& t : texts) out.push_back(OperatorSpec::parse(t));
    return out;
}

}  // namespace

TEST_CASE("displayed inverses come out exactly") {
    SUBCASE("one forward difference") {
        const DualMatrix d = invert_scheme(raw_scheme(mat({{1, 0}, {-1, 1}})));
        CHECK((d.columns.array() == mat({{1, 0}, {1, 1}}).array()).all());
        CHECK(d.determinant == 1.0);
    }
    SUBCASE("two forward differences") {
        const DualMatrix d =
            invert_scheme(raw_scheme(mat({{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}})));
        CHECK((d.columns.array() == mat({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}).array()).all());
    }
    SUBCASE("mixed backward/forward") {
        const DualMatrix d =
            invert_scheme(raw_scheme(mat({{-1, 1, 0}, {0, 1, 0}, {0, -1, 1}}), -1));
        CHECK((d.columns.array() == mat({{-1, 1, 0}, {0, 1, 0}, {0, 1, 1}}).array()).all());
    }
    SUBCASE("halves stay exact through the rational route") {
        const DualMatrix d = invert_scheme(raw_scheme(mat({{0.5, 0.5}, {-1, 1}})));
        CHECK((d.columns.array() == mat({{1, -0.5}, {1, 0.5}}).array()).all());
    }
}

TEST_CASE("singular schemes are rejected before any dual is formed") {
    CHECK_THROWS_AS(invert_scheme(raw_scheme(mat({{1, 1}, {2, 2}}))), SingularSchemeError);
    try {
        invert_scheme(raw_scheme(mat({{1, 1}, {2, 2}})));
    } catch (const SingularSchemeError& e) {
        CHECK(e.determinant() == 0.0);
    }
}

TEST_CASE("irrational entries fall back to floating LU") {
    const double r = std::sqrt(2.0);
    const SchemeMatrix m = raw_scheme(mat({{r, 0}, {1, r}}));
    const DualMatrix d = invert_scheme(m);
    CHECK(((m.rows * d.columns) - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-14);
    CHECK(d.determinant == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("invert_scheme(M) * M = I within 1e-12 for the scheme corpus") {
    const std::vector<std::vector<std::string>> corpus = {
        {"id@0", "fwd@0"},
        {"id@0", "fwd@0", "fwd^2@0"},
        {"bwd@0", "id@0", "fwd@0"},
        {"bwd@0", "id@0", "fwd@0", "fwd^2@0"},
        {"avg+@0", "fwd@0"},
        {"id@0", "avg0@0", "diff0@0"},
        {"bwd^2@0", "bwd@0", "id@0"},
    };
    for (const auto& texts : corpus) {
        const SchemeMatrix m = scheme_matrix(specs_of(texts), static_cast<int>(texts.size()));
        const DualMatrix d = invert_scheme(m);
        const Eigen::MatrixXd prod = d.columns * m.rows;
        CHECK((prod - Eigen::MatrixXd::Identity(m.period, m.period)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("left inverses") {
    SUBCASE("hand oracle: M = [1;1] gives N = [1/2 1/2]") {
        const DualMatrix d = left_inverse(raw_scheme(mat({{1}, {1}})));
        CHECK(d.columns.rows() == 1);
        CHECK(d.columns.cols() == 2);
        CHECK(d.columns(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(d.columns(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(d.frameMode);
        CHECK(std::isnan(d.determinant));
    }
    SUBCASE("hand oracle: 3x2 pseudo-inverse") {
        const SchemeMatrix m = raw_scheme(mat({{1, 0}, {0, 1}, {1, 1}}));
        const DualMatrix d = left_inverse(m);
        // (M^T M)^{-1} M^T = (1/3) [[2,-1,1],[-1,2,1]]
        const Eigen::MatrixXd expected = mat({{2, -1, 1}, {-1, 2, 1}}) / 3.0;
        CHECK((d.columns - expected).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK((d.columns * m.rows - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
              1e-14);
    }
    SUBCASE("square input is a contract violation") {
        CHECK_THROWS_AS(left_inverse(raw_scheme(mat({{1, 0}, {0, 1}}))), std::invalid_argument);
    }
    SUBCASE("rank-deficient channels are not a frame") {
        CHECK_THROWS_AS(left_inverse(raw_scheme(mat({{1, 1}, {2, 2}, {3, 3}}))), NotAFrameError);
    }
    SUBCASE("any U still yields a left inverse") {
        const SchemeMatrix m = raw_scheme(mat({{1, 0}, {0, 1}, {-1, 1}}));
        std::mt19937_64 eng(99);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXd u(2, 3);
            for (int i = 0; i < u.size(); ++i) {
                u(i) = 2.0 * (static_cast<double>(eng() >> 11) * 0x1p-53) - 1.0;
            }
            const DualMatrix n = left_inverse(m, u);
            CHECK((n.columns * m.rows - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
                  1e-10);
        }
    }
}

TEST_CASE("kronecker products") {
    const SchemeMatrix m2 = raw_scheme(mat({{1, 0}, {-1, 1}}));
    const SchemeMatrix m3 = raw_scheme(mat({{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}}));

    SUBCASE("identity times identity") {
        const SchemeMatrix k =
            kronecker(raw_scheme(Eigen::MatrixXd::Identity(2, 2)),
                      raw_scheme(Eigen::MatrixXd::Identity(3, 3)));
        CHECK((k.rows.array() == Eigen::MatrixXd::Identity(6, 6).array()).all());
        CHECK(k.period == 6);
    }
    SUBCASE("inverse of the product is the product of the inverses (exact)") {
        const SchemeMatrix k = kronecker(m2, m3);
        const DualMatrix dk = invert_scheme(k);
        const Eigen::MatrixXd viaFactors =
            kronecker_product(invert_scheme(m2).columns, invert_scheme(m3).columns);
        CHECK((dk.columns.array() == viaFactors.array()).all());
    }
    SUBCASE("random invertible integer pairs") {
        std::mt19937_64 eng(7);
        int done = 0;
        while (done < 10) {
            Eigen::MatrixXd a(2, 2), b(3, 3);
            for (int i = 0; i < a.size(); ++i) a(i) = static_cast<double>(eng() % 7) - 3.0;
            for (int i = 0; i < b.size(); ++i) b(i) = static_cast<double>(eng() % 7) - 3.0;
            DualMatrix da, db;
            try {
                da = invert_scheme(raw_scheme(a));
                db = invert_scheme(raw_scheme(b));
            } catch (const SingularSchemeError&) {
                continue;
            }
            const DualMatrix dk = invert_scheme(kronecker(raw_scheme(a), raw_scheme(b)));
            CHECK((dk.columns - kronecker_product(da.columns, db.columns)).cwiseAbs().maxCoeff() <=
                  1e-12);
            ++done;
        }
    }
    SUBCASE("frame factors are rejected") {
        CHECK_THROWS_AS(kronecker(raw_scheme(mat({{1, 0}, {0, 1}, {1, 1}})), m3),
                        std::invalid_argument);
    }
}

TEST_CASE("biorthogonality of scheme-transformed bases") {
    const Generator cubic = Generator::bspline(4);
    const ZakKernel kernel = zak_kernel(cubic, 0.0, 4096);

    SUBCASE("forward scheme, p = 2, W = 3") {
        const SchemeMatrix m = scheme_matrix(specs_of({"id@0", "fwd@0"}), 2);
        const double dev = biorthogonality_check(m, invert_scheme(m), kernel, 3);
        CHECK(dev <= 1e-6);
    }
    SUBCASE("identity scheme reduces to the raw dual pair") {
        const SchemeMatrix m = scheme_matrix(specs_of({"id@0"}), 1);
        const double dev = biorthogonality_check(m, invert_scheme(m), kernel, 4);
        CHECK(dev <= 1e-6);
    }
    SUBCASE("central scheme with a shifted window") {
        const SchemeMatrix m = scheme_matrix(specs_of({"id@0", "avg0@0", "diff0@0"}), 3);
        const double dev = biorthogonality_check(m, invert_scheme(m), kernel, 3);
        CHECK(dev <= 1e-6);
    }
    SUBCASE("degenerate kernels propagate") {
        ZakKernel degenerate = zak_kernel(Generator::bspline(3), 0.0, 256);
        const SchemeMatrix m = scheme_matrix(specs_of({"id@0", "fwd@0"}), 2);
        CHECK_THROWS_AS(biorthogonality_check(m, invert_scheme(m), degenerate, 2),
                        DegenerateKernelError);
    }
}
