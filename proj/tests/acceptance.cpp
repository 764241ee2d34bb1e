// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances and runtime budgets are pinned in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sisamp/bspline.hpp"
#include "sisamp/reconstruct.hpp"

using namespace sisamp;

namespace {

struct Criterion {
    int number;
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }

    void expect_near(double got, double want, double tol, const std::string& what) {
        expect(std::abs(got - want) <= tol,
               what + ": got " + std::to_string(got) + ", want " + std::to_string(want) +
                   " (tol " + std::to_string(tol) + ")");
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }

    void expect_runtime(double limitSeconds) {
        const double t = elapsed();
        expect(t < limitSeconds, "runtime " + std::to_string(t) + "s exceeds " +
                                     std::to_string(limitSeconds) + "s");
    }

    bool finish() const {
        std::printf("[acceptance] criterion %d (%s): %s  [%.2fs]\n", number, name.c_str(),
                    ok ? "PASS" : "FAIL", elapsed());
        for (const auto& f : failures) std::printf("    - %s\n", f.c_str());
        std::fflush(stdout);
        return ok;
    }
};

std::vector<OperatorSpec> specs_of(const std::vector<std::string>& texts) {
    std::vector<OperatorSpec> out;
    for (const auto& t : texts) out.push_back(OperatorSpec::parse(t));
    return out;
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

bool exact_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

Eigen::VectorXd grid_of(double lo, double hi, double step) {
    const auto count = static_cast<Eigen::Index>(std::floor((hi - lo) / step + 0.5)) + 1;
    Eigen::VectorXd g(count);
    for (Eigen::Index i = 0; i < count; ++i) g[i] = lo + step * static_cast<double>(i);
    return g;
}

const Generator& cubic() {
    static const Generator gen = Generator::bspline(4);
    return gen;
}

// ---------------------------------------------------------------- criterion 1

bool criterion_matrix_tables() {
    Criterion c{1, "matrix tables"};

    const auto check_pair = [&](const std::vector<std::string>& texts, int period,
                                const Eigen::MatrixXd& wantM, const Eigen::MatrixXd& wantInv,
                                const std::string& what) {
        const SchemeMatrix m = scheme_matrix(specs_of(texts), period);
        c.expect(exact_equal(m.rows, wantM), what + ": scheme matrix");
        c.expect(exact_equal(invert_scheme(m).columns, wantInv), what + ": inverse");
    };

    check_pair({"id@0", "fwd@0"}, 2, mat({{1, 0}, {-1, 1}}), mat({{1, 0}, {1, 1}}),
               "one forward difference");
    check_pair({"id@0", "fwd@0", "fwd^2@0"}, 3, mat({{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}}),
               mat({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}), "two forward differences");
    check_pair({"bwd@0", "id@0", "fwd@0"}, 3, mat({{-1, 1, 0}, {0, 1, 0}, {0, -1, 1}}),
               mat({{-1, 1, 0}, {0, 1, 0}, {0, 1, 1}}), "mixed p=3");
    check_pair({"bwd@0", "id@0", "fwd@0", "fwd^2@0"}, 4,
               mat({{-1, 1, 0, 0}, {0, 1, 0, 0}, {0, -1, 1, 0}, {0, 1, -2, 1}}),
               mat({{-1, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 2, 1}}), "mixed p=4");
    check_pair({"avg+@0", "fwd@0"}, 2, mat({{0.5, 0.5}, {-1, 1}}),
               mat({{1, -0.5}, {1, 0.5}}), "forward average p=2");
    check_pair({"id@0", "avg0@0", "diff0@0"}, 3,
               mat({{0, 1, 0}, {0.5, 0, 0.5}, {-1, 0, 1}}),
               mat({{0, 1, -0.5}, {1, 0, 0}, {0, 1, 0.5}}), "central p=3");

    // general forward / backward patterns for p = 2..8
    for (int p = 2; p <= 8; ++p) {
        std::vector<OperatorSpec> fwd, bwd;
        for (int k = 0; k < p; ++k) {
            fwd.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::forward(k));
        }
        for (int k = p - 1; k >= 0; --k) {
            bwd.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::backward(k));
        }
        const SchemeMatrix mf = scheme_matrix(fwd, p);
        const DualMatrix df = invert_scheme(mf);
        const SchemeMatrix mb = scheme_matrix(bwd, p);
        const DualMatrix db = invert_scheme(mb);
        bool fwdOk = true, bwdOk = true, invOk = true;
        for (int j = 0; j < p; ++j) {
            for (int k = 0; k < p; ++k) {
                const double wantF =
                    k <= j ? static_cast<double>(((j - k) % 2 ? -1 : 1) *
                                                 oracles::pascal_binomial(j, k))
                           : 0.0;
                fwdOk = fwdOk && mf.rows(j, k) == wantF;
                invOk = invOk && df.columns(j, k) ==
                                     (k <= j ? static_cast<double>(oracles::pascal_binomial(j, k))
                                             : 0.0);
                const double wantB =
                    static_cast<double>((((p - 1 - k) % 2 == 0) ? 1 : -1) *
                                        oracles::pascal_binomial(p - 1 - j, p - 1 - k));
                bwdOk = bwdOk && mb.rows(j, k) == wantB;
            }
        }
        c.expect(fwdOk, "forward matrix pattern p=" + std::to_string(p));
        c.expect(invOk, "forward inverse pattern p=" + std::to_string(p));
        c.expect(bwdOk, "backward matrix pattern p=" + std::to_string(p));
        c.expect(exact_equal(db.columns, mb.rows),
                 "backward inverse coincides with itself, p=" + std::to_string(p));
    }

    // the 6x6 Kronecker product and its inverse
    const SchemeMatrix m2 = scheme_matrix(specs_of({"id@0", "fwd@0"}), 2);
    const SchemeMatrix m3 = scheme_matrix(specs_of({"id@0", "fwd@0", "fwd^2@0"}), 3);
    const SchemeMatrix k23 = kronecker(m2, m3);
    c.expect(exact_equal(k23.rows, mat({{1, 0, 0, 0, 0, 0},
                                        {-1, 1, 0, 0, 0, 0},
                                        {1, -2, 1, 0, 0, 0},
                                        {-1, 0, 0, 1, 0, 0},
                                        {1, -1, 0, -1, 1, 0},
                                        {-1, 2, -1, 1, -2, 1}})),
             "6x6 Kronecker product");
    const Eigen::MatrixXd inv23 = mat({{1, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 0, 0, 0},
                                       {1, 2, 1, 0, 0, 0},
                                       {1, 0, 0, 1, 0, 0},
                                       {1, 1, 0, 1, 1, 0},
                                       {1, 2, 1, 1, 2, 1}});
    c.expect(exact_equal(invert_scheme(k23).columns, inv23), "6x6 inverse");
    c.expect(exact_equal(kronecker_product(invert_scheme(m2).columns,
                                           invert_scheme(m3).columns),
                         inv23),
             "6x6 inverse as Kronecker product of the factor inverses");

    // the 9x9 Kronecker product and its inverse
    const SchemeMatrix k33 = kronecker(m3, m3);
    c.expect(exact_equal(k33.rows, mat({{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {-1, 1, 0, 0, 0, 0, 0, 0, 0},
                                        {1, -2, 1, 0, 0, 0, 0, 0, 0},
                                        {-1, 0, 0, 1, 0, 0, 0, 0, 0},
                                        {1, -1, 0, -1, 1, 0, 0, 0, 0},
                                        {-1, 2, -1, 1, -2, 1, 0, 0, 0},
                                        {1, 0, 0, -2, 0, 0, 1, 0, 0},
                                        {-1, 1, 0, 2, -2, 0, -1, 1, 0},
                                        {1, -2, 1, -2, 4, -2, 1, -2, 1}})),
             "9x9 Kronecker product");
    const Eigen::MatrixXd inv33 = mat({{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                       {1, 2, 1, 0, 0, 0, 0, 0, 0},
                                       {1, 0, 0, 1, 0, 0, 0, 0, 0},
                                       {1, 1, 0, 1, 1, 0, 0, 0, 0},
                                       {1, 2, 1, 1, 2, 1, 0, 0, 0},
                                       {1, 0, 0, 2, 0, 0, 1, 0, 0},
                                       {1, 1, 0, 2, 2, 0, 1, 1, 0},
                                       {1, 2, 1, 2, 4, 2, 1, 2, 1}});
    c.expect(exact_equal(invert_scheme(k33).columns, inv33), "9x9 inverse");
    c.expect(exact_equal(kronecker_product(invert_scheme(m3).columns,
                                           invert_scheme(m3).columns),
                         inv33),
             "9x9 inverse as Kronecker product of the factor inverses");

    c.expect_runtime(1.0);
    return c.finish();
}

// ---------------------------------------------------------------- criterion 2

bool criterion_closed_form_kernels() {
    Criterion c{2, "closed-form kernels"};
    {
        Criterion timer{2, "cubic part"};
        const SamplingKernelSet ks = shannon_kernel(zak_kernel(cubic(), 0.0, 4096), 40);
        const double root3 = std::sqrt(3.0);
        const double rho = 2.0 - root3;
        for (int n = -20; n <= 20; ++n) {
            const double want = root3 * (n % 2 ? -1.0 : 1.0) * std::pow(rho, std::abs(n + 2));
            c.expect(std::abs(ks.baseCoeffs[n + ks.radius] - want) <= 1e-9,
                     "cubic coefficient n=" + std::to_string(n));
        }
        c.expect(timer.elapsed() < 1.0, "cubic kernel runtime over 1s");
    }
    {
        Criterion timer{2, "quadratic part"};
        const SamplingKernelSet ks =
            shannon_kernel(zak_kernel(Generator::bspline(3), 0.5, 4096), 40);
        const double root2 = std::sqrt(2.0);
        const double rho = 2.0 * root2 - 3.0;
        for (int n = -20; n <= 20; ++n) {
            const double want = root2 * std::pow(rho, std::abs(n + 1));
            c.expect(std::abs(ks.baseCoeffs[n + ks.radius] - want) <= 1e-9,
                     "quadratic coefficient n=" + std::to_string(n));
        }
        c.expect(timer.elapsed() < 1.0, "quadratic kernel runtime over 1s");
    }
    return c.finish();
}

// ---------------------------------------------------------------- criterion 3

bool criterion_degeneracy() {
    Criterion c{3, "degeneracy detection"};
    const ZakKernel quadratic = zak_kernel(Generator::bspline(3), 0.0, 4096);
    const RieszCheck bad = riesz_condition(quadratic, 1e-6);
    c.expect(!bad.valid, "quadratic a=0 must be degenerate");
    c.expect_near(bad.witness, 0.5, 2.0 / 4096.0, "degeneracy witness");

    const ZakKernel cubicKernel = zak_kernel(cubic(), 0.0, 4096);
    const RieszCheck good = riesz_condition(cubicKernel, 1e-6);
    c.expect(good.valid, "cubic a=0 must be valid");
    c.expect_near(good.lowerBound, 1.0 / 3.0, 1e-6, "cubic lower bound");
    return c.finish();
}

// ---------------------------------------------------------------- criterion 4

bool criterion_interpolation() {
    Criterion c{4, "interpolation property"};
    const SamplingKernelSet ksCubic = shannon_kernel(zak_kernel(cubic(), 0.0, 4096), 40);
    c.expect(interpolation_check(ksCubic, cubic(), 10) <= 1e-8, "cubic a=0 interpolation");
    const SamplingKernelSet ksQuad =
        shannon_kernel(zak_kernel(Generator::bspline(3), 0.5, 4096), 40);
    c.expect(interpolation_check(ksQuad, Generator::bspline(3), 10) <= 1e-8,
             "quadratic a=1/2 interpolation");
    return c.finish();
}

// ---------------------------------------------------------------- criterion 5

bool criterion_exact_reconstruction() {
    Criterion c{5, "exact reconstruction, all schemes"};
    const SamplingKernelSet base = shannon_kernel(zak_kernel(cubic(), 0.0, 4096), 40);
    const Eigen::VectorXd grid = grid_of(-8.0, 8.0, 1.0 / 16.0);

    const std::vector<std::pair<std::string, std::vector<std::string>>> schemes = {
        {"forward p=2", {"id@0", "fwd@0"}},
        {"forward p=3", {"id@0", "fwd@0", "fwd^2@0"}},
        {"forward p=4", {"id@0", "fwd@0", "fwd^2@0", "fwd^3@0"}},
        {"backward p=2", {"bwd@0", "id@0"}},
        {"backward p=3", {"bwd^2@0", "bwd@0", "id@0"}},
        {"backward p=4", {"bwd^3@0", "bwd^2@0", "bwd@0", "id@0"}},
        {"mixed p=3", {"bwd@0", "id@0", "fwd@0"}},
        {"mixed p=4", {"bwd@0", "id@0", "fwd@0", "fwd^2@0"}},
        {"average p=2", {"avg+@0", "fwd@0"}},
        {"central p=3", {"id@0", "avg0@0", "diff0@0"}},
    };

    for (const auto& [name, texts] : schemes) {
        const auto specs = specs_of(texts);
        const SchemeMatrix m = scheme_matrix(specs, static_cast<int>(texts.size()));
        const SamplingKernelSet ks = assemble_kernels(base, m, invert_scheme(m));
        const BlockWindow window = required_blocks(ks, cubic(), -8.0, 8.0);
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Signal f = random_signal(seed, -16, 32);
            const SampleSet samples =
                apply_operators(f, cubic(), specs, ks.offset, ks.period, window);
            const Eigen::VectorXd recon = reconstruct_1d(samples, ks, cubic(), grid);
            for (Eigen::Index i = 0; i < grid.size(); ++i) {
                worst = std::max(worst, std::abs(recon[i] - f.eval(cubic(), grid[i])));
            }
        }
        c.expect(worst <= 1e-8,
                 name + ": max error " + std::to_string(worst) + " over 20 signals");
    }
    c.expect_runtime(30.0);
    return c.finish();
}

// ---------------------------------------------------------------- criterion 6

bool criterion_2d_exactness() {
    Criterion c{6, "2D exactness"};
    const Eigen::VectorXd grid = grid_of(-4.0, 4.0, 0.125);

    const auto run_case = [&](const SamplingKernelSet2D& ks,
                              const std::vector<OperatorSpec>& specsT,
                              const std::vector<OperatorSpec>& specsS, const std::string& name) {
        const BlockWindow winT = required_blocks_t(ks, cubic(), -4.0, 4.0);
        const BlockWindow winS = required_blocks_s(ks, cubic(), -4.0, 4.0);
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Signal2D f = random_signal_2d(seed, -4, -4, 8, 8);
            const SampleSet2D samples =
                apply_operators_2d(f, cubic(), cubic(), specsT, specsS, ks.offsetT, ks.offsetS,
                                   ks.periodT, ks.periodS, winT, winS);
            const Eigen::MatrixXd recon = reconstruct_2d(samples, ks, cubic(), cubic(), grid,
                                                         grid);
            for (Eigen::Index i = 0; i < grid.size(); ++i) {
                for (Eigen::Index j = 0; j < grid.size(); ++j) {
                    worst = std::max(worst, std::abs(recon(i, j) -
                                                     f.eval(cubic(), cubic(), grid[i], grid[j])));
                }
            }
        }
        c.expect(worst <= 1e-7, name + ": max error " + std::to_string(worst));
    };

    const auto specsT = specs_of({"id@0", "fwd@0"});
    const auto specs3 = specs_of({"id@0", "fwd@0", "fwd^2@0"});
    const SchemeMatrix schemeT = scheme_matrix(specsT, 2);
    const SchemeMatrix scheme3 = scheme_matrix(specs3, 3);

    const SamplingKernelSet base1d = shannon_kernel(zak_kernel(cubic(), 0.0, 4096), 40);
    run_case(kernel2d_separable(assemble_kernels(base1d, schemeT, invert_scheme(schemeT)),
                                assemble_kernels(base1d, scheme3, invert_scheme(scheme3))),
             specsT, specs3, "separable 2x3 forward scheme");

    const ZakKernel2D zak2 = zak_kernel_2d(cubic(), cubic(), 0.0, 0.0, 256);
    run_case(assemble_kernels_2d(shannon_kernel_2d(zak2, 24), scheme3, scheme3), specs3, specs3,
             "general 3x3 scheme");

    c.expect_runtime(60.0);
    return c.finish();
}

// ---------------------------------------------------------------- criterion 7

bool criterion_frame_path() {
    Criterion c{7, "frame path"};
    const auto texts = std::vector<std::string>{"id@0", "id@1", "fwd@0"};
    const auto specs = specs_of(texts);
    const SchemeMatrix m = scheme_matrix(specs, 2);
    const SamplingKernelSet base = shannon_kernel(zak_kernel(cubic(), 0.0, 4096), 40);
    const Eigen::VectorXd grid = grid_of(-8.0, 8.0, 1.0 / 16.0);

    const SamplingKernelSet ksPinv = assemble_kernels(base, m, left_inverse(m));
    std::mt19937_64 eng(2026);
    Eigen::MatrixXd u(2, 3);
    for (int i = 0; i < u.size(); ++i) {
        u(i) = 2.0 * (static_cast<double>(eng() >> 11) * 0x1p-53) - 1.0;
    }
    const SamplingKernelSet ksU = assemble_kernels(base, m, left_inverse(m, u));
    const BlockWindow window = required_blocks(ksPinv, cubic(), -8.0, 8.0);

    double worstPinv = 0.0, worstU = 0.0, worstAgree = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Signal f = random_signal(seed, -12, 25);
        const SampleSet samples = apply_operators(f, cubic(), specs, 0.0, 2, window);
        const Eigen::VectorXd viaPinv = reconstruct_1d(samples, ksPinv, cubic(), grid);
        const Eigen::VectorXd viaU = reconstruct_1d(samples, ksU, cubic(), grid);
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
            const double ref = f.eval(cubic(), grid[i]);
            worstPinv = std::max(worstPinv, std::abs(viaPinv[i] - ref));
            worstU = std::max(worstU, std::abs(viaU[i] - ref));
            worstAgree = std::max(worstAgree, std::abs(viaPinv[i] - viaU[i]));
        }
    }
    c.expect(worstPinv <= 1e-8, "Moore-Penrose reconstruction error " + std::to_string(worstPinv));
    c.expect(worstU <= 1e-8, "randomized-U reconstruction error " + std::to_string(worstU));
    c.expect(worstAgree <= 1e-8, "left inverses disagree by " + std::to_string(worstAgree));
    return c.finish();
}

// ---------------------------------------------------------------- criterion 8

bool criterion_property_suites() {
    Criterion c{8, "property suites"};

    // Pascal inverse + backward involution, exact, p <= 8
    for (int p = 2; p <= 8; ++p) {
        std::vector<OperatorSpec> fwd, bwd;
        for (int k = 0; k < p; ++k) {
            fwd.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::forward(k));
        }
        for (int k = p - 1; k >= 0; --k) {
            bwd.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::backward(k));
        }
        const SchemeMatrix mf = scheme_matrix(fwd, p);
        const DualMatrix df = invert_scheme(mf);
        bool pascal = true;
        for (int j = 0; j < p; ++j) {
            for (int k = 0; k < p; ++k) {
                pascal = pascal &&
                         df.columns(j, k) ==
                             (k <= j ? static_cast<double>(oracles::pascal_binomial(j, k)) : 0.0);
            }
        }
        c.expect(pascal, "Pascal inverse p=" + std::to_string(p));
        const SchemeMatrix mb = scheme_matrix(bwd, p);
        c.expect(exact_equal(mb.rows * mb.rows, Eigen::MatrixXd::Identity(p, p)),
                 "backward involution p=" + std::to_string(p));
    }

    // biorthogonality at G=4096, W=3
    const ZakKernel kernel = zak_kernel(cubic(), 0.0, 4096);
    for (const auto& texts : {std::vector<std::string>{"id@0", "fwd@0"},
                              std::vector<std::string>{"id@0", "avg0@0", "diff0@0"}}) {
        const SchemeMatrix m = scheme_matrix(specs_of(texts), static_cast<int>(texts.size()));
        const double dev = biorthogonality_check(m, invert_scheme(m), kernel, 3);
        c.expect(dev <= 1e-6, "biorthogonality deviation " + std::to_string(dev));
    }

    // operator/Fourier consistency for forward and backward channels
    {
        const int G = 4096;
        const int p = 3;
        const Signal f = random_signal(77, -5, 11);
        Eigen::VectorXcd bigF = Eigen::VectorXcd::Zero(G);
        for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) {
            const double mIdx = static_cast<double>(f.start + i);
            for (int j = 0; j < G; ++j) {
                const double ang = -kTwoPi * mIdx * j / G;
                bigF[j] += f.coeffs[i] * Complex(std::cos(ang), std::sin(ang));
            }
        }
        const auto quad_channel = [&](int order, bool forward, long n) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < G; ++j) {
                const double x = static_cast<double>(j) / G;
                const Complex eMinus(std::cos(kTwoPi * x), -std::sin(kTwoPi * x));
                const Complex ePlus(std::cos(kTwoPi * x), std::sin(kTwoPi * x));
                const Complex factor = forward ? std::pow(eMinus - 1.0, order)
                                               : std::pow(Complex(1.0, 0.0) - ePlus, order);
                const double angN = -kTwoPi * static_cast<double>(p) * n * x;
                acc += bigF[j] *
                       std::conj(factor * Complex(std::cos(angN), std::sin(angN)) *
                                 kernel.values[j]);
            }
            return acc / static_cast<double>(G);
        };
        for (const bool forward : {true, false}) {
            std::vector<OperatorSpec> specs;
            for (int k = 0; k < p; ++k) {
                specs.push_back(k == 0 ? OperatorSpec::identity()
                                       : (forward ? OperatorSpec::forward(k)
                                                  : OperatorSpec::backward(k)));
            }
            const SampleSet s = apply_operators(f, cubic(), specs, 0.0, p, {-4, 4});
            double dev = 0.0;
            for (int k = 0; k < p; ++k) {
                for (long i = 0; i < s.blocks.count(); ++i) {
                    dev = std::max(dev, std::abs(s.channels(k, i) -
                                                 quad_channel(k, forward, s.blocks.first + i)
                                                     .real()));
                }
            }
            c.expect(dev <= 1e-6, std::string(forward ? "forward" : "backward") +
                                      " operator/Fourier deviation " + std::to_string(dev));
        }
    }

    // partition of unity and kernel shifting at 1e-12
    {
        double dev = 0.0;
        for (int m = 1; m <= 6; ++m) {
            for (int i = 0; i <= 240; ++i) {
                const double t = -2.0 + i / 30.0;
                double sum = 0.0;
                const int lo = static_cast<int>(std::floor(t)) - m;
                for (int n = lo; n <= lo + m + 1; ++n) sum += bspline_eval(m, t - n);
                dev = std::max(dev, std::abs(sum - 1.0));
            }
        }
        c.expect(dev <= 1e-12, "partition of unity deviation " + std::to_string(dev));

        double shiftDev = 0.0;
        const int G = 256;
        for (const int order : {3, 4}) {
            const Generator gen = Generator::bspline(order);
            for (const double a : {0.0, 0.3}) {
                const Eigen::VectorXcd atA = zak_series(gen, a, G);
                for (int m = -3; m <= 3; ++m) {
                    const Eigen::VectorXcd direct = zak_series(gen, a + m, G);
                    for (int j = 0; j < G; ++j) {
                        const double ang = -kTwoPi * m * static_cast<double>(j) / G;
                        shiftDev = std::max(
                            shiftDev,
                            std::abs(direct[j] -
                                     Complex(std::cos(ang), std::sin(ang)) * atA[j]));
                    }
                }
            }
        }
        c.expect(shiftDev <= 1e-12, "kernel shifting deviation " + std::to_string(shiftDev));
    }

    return c.finish();
}

}  // namespace

int main() {
    int failed = 0;
    failed += criterion_matrix_tables() ? 0 : 1;
    failed += criterion_closed_form_kernels() ? 0 : 1;
    failed += criterion_degeneracy() ? 0 : 1;
    failed += criterion_interpolation() ? 0 : 1;
    failed += criterion_exact_reconstruction() ? 0 : 1;
    failed += criterion_2d_exactness() ? 0 : 1;
    failed += criterion_frame_path() ? 0 : 1;
    failed += criterion_property_suites() ? 0 : 1;
    if (failed) {
        std::printf("[acceptance] %d criterion(s) FAILED\n", failed);
    } else {
        std::printf("[acceptance] all criteria passed\n");
    }
    return failed;
}
