#include "sisamp/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <vector>

#include "sisamp/bspline.hpp"
#include "sisamp/reconstruct.hpp"

namespace sisamp::cli {

using nlohmann::json;

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<OperatorSpec> parse_specs(const std::vector<std::string>& texts) {
    std::vector<OperatorSpec> specs;
    specs.reserve(texts.size());
    for (const auto& t : texts) specs.push_back(OperatorSpec::parse(t));
    return specs;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path.string());
    return out;
}

void write_csv_1d(const std::filesystem::path& path, const Eigen::VectorXd& t,
                  const Eigen::VectorXd& v, const std::vector<std::string>& meta = {}) {
    auto out = open_out(path);
    for (const auto& m : meta) out << "# " << m << "\n";
    out << "t,value\n";
    for (Eigen::Index i = 0; i < t.size(); ++i) out << num(t[i]) << ',' << num(v[i]) << '\n';
}

void write_csv_2d(const std::filesystem::path& path, const Eigen::VectorXd& t,
                  const Eigen::VectorXd& s, const Eigen::MatrixXd& v,
                  const std::vector<std::string>& meta = {}) {
    auto out = open_out(path);
    for (const auto& m : meta) out << "# " << m << "\n";
    out << "t,s,value\n";
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        for (Eigen::Index j = 0; j < s.size(); ++j) {
            out << num(t[i]) << ',' << num(s[j]) << ',' << num(v(i, j)) << '\n';
        }
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

struct Pipeline1D {
    Generator gen;
    SamplingKernelSet ks;
    std::vector<OperatorSpec> specs;
};

Pipeline1D build_1d(const ExperimentConfig& cfg) {
    Pipeline1D p{make_generator(cfg.generator), {}, parse_specs(cfg.scheme)};
    if (cfg.kernelSetPath) {
        std::ifstream in(*cfg.kernelSetPath);
        json j;
        in >> j;
        p.ks = kernel_set_from_json(j);
        return p;
    }
    const ZakKernel zak = zak_kernel(p.gen, cfg.a, cfg.gridSize);
    const SamplingKernelSet base = shannon_kernel(zak, cfg.radius);
    if (cfg.scheme.size() == 1 && cfg.period == 1 && p.specs[0].kind == OpKind::Identity &&
        p.specs[0].anchor == 0) {
        p.ks = base;
        return p;
    }
    const SchemeMatrix scheme = scheme_matrix(p.specs, cfg.period);
    p.ks = assemble_kernels(base, scheme, dual_for(scheme));
    return p;
}

struct Pipeline2D {
    Generator genT;
    Generator genS;
    SamplingKernelSet2D ks;
    std::vector<OperatorSpec> specsT;
    std::vector<OperatorSpec> specsS;
};

Pipeline2D build_2d(const ExperimentConfig& cfg) {
    Pipeline2D p{make_generator(cfg.generator),
                 make_generator(cfg.generator2 ? *cfg.generator2 : cfg.generator),
                 {},
                 parse_specs(cfg.scheme),
                 parse_specs(cfg.scheme2)};
    if (cfg.kernelSetPath) {
        std::ifstream in(*cfg.kernelSetPath);
        json j;
        in >> j;
        p.ks = kernel_set_2d_from_json(j);
        return p;
    }
    const SchemeMatrix schemeT = scheme_matrix(p.specsT, cfg.period);
    const SchemeMatrix schemeS = scheme_matrix(p.specsS, cfg.period2);
    if (cfg.kernel2dMode == "general") {
        const ZakKernel2D zak2 = zak_kernel_2d(p.genT, p.genS, cfg.a, cfg.b, cfg.gridSize);
        p.ks = assemble_kernels_2d(shannon_kernel_2d(zak2, cfg.radius), schemeT, schemeS);
    } else {
        const SamplingKernelSet baseT = shannon_kernel(zak_kernel(p.genT, cfg.a, cfg.gridSize),
                                                       cfg.radius);
        const SamplingKernelSet baseS = shannon_kernel(zak_kernel(p.genS, cfg.b, cfg.gridSize),
                                                       cfg.radius);
        p.ks = kernel2d_separable(assemble_kernels(baseT, schemeT, dual_for(schemeT)),
                                  assemble_kernels(baseS, schemeS, dual_for(schemeS)));
    }
    return p;
}

int guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const DegenerateKernelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

// ---- verify checks ----

struct CheckRunner {
    bool allOk = true;

    void report(const std::string& name, bool ok, const std::string& metric) {
        std::cout << "[verify] " << name << ": " << (ok ? "ok" : "FAILED") << " (" << metric
                  << ")\n";
        allOk = allOk && ok;
    }
};

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

}  // namespace

int run_kernel(const ExperimentConfig& cfg, const std::filesystem::path& outDir) {
    return guard([&]() {
        std::filesystem::create_directories(outDir);
        const Eigen::VectorXd grid = cfg.evalGrid.points();
        if (!cfg.is2d()) {
            const Pipeline1D p = build_1d(cfg);
            Eigen::VectorXd s(grid.size());
            for (Eigen::Index i = 0; i < grid.size(); ++i) s[i] = p.ks.base(p.gen, grid[i]);
            write_csv_1d(outDir / "S.csv", grid, s);
            for (std::size_t j = 0; j < p.ks.channels.size(); ++j) {
                Eigen::VectorXd v(grid.size());
                for (Eigen::Index i = 0; i < grid.size(); ++i) {
                    v[i] = p.ks.channel(p.gen, static_cast<int>(j), grid[i]);
                }
                write_csv_1d(outDir / ("T" + std::to_string(j + 1) + ".csv"), grid, v,
                             {"kernel " + p.ks.labels[j]});
            }
            json dump = kernel_set_to_json(p.ks);
            dump["generator"] = p.gen.describe();
            write_json(outDir / "kernelset.json", dump);
            std::cout << "kernel: wrote S.csv and " << p.ks.channels.size()
                      << " channel kernels to " << outDir.string() << "\n";
        } else {
            const Pipeline2D p = build_2d(cfg);
            Eigen::MatrixXd s(grid.size(), grid.size());
            for (Eigen::Index i = 0; i < grid.size(); ++i) {
                for (Eigen::Index j = 0; j < grid.size(); ++j) {
                    s(i, j) = p.ks.base(p.genT, p.genS, grid[i], grid[j]);
                }
            }
            write_csv_2d(outDir / "S.csv", grid, grid, s);
            for (std::size_t c = 0; c < p.ks.channels.size(); ++c) {
                Eigen::MatrixXd v(grid.size(), grid.size());
                for (Eigen::Index i = 0; i < grid.size(); ++i) {
                    for (Eigen::Index j = 0; j < grid.size(); ++j) {
                        v(i, j) = p.ks.channel(p.genT, p.genS, static_cast<int>(c), grid[i],
                                               grid[j]);
                    }
                }
                write_csv_2d(outDir / ("T" + std::to_string(c + 1) + ".csv"), grid, grid, v,
                             {"kernel " + p.ks.labels[c]});
            }
            json dump = kernel_set_to_json(p.ks);
            dump["generator"] = p.genT.describe() + " x " + p.genS.describe();
            write_json(outDir / "kernelset.json", dump);
            std::cout << "kernel: wrote S.csv and " << p.ks.channels.size()
                      << " channel kernels to " << outDir.string() << "\n";
        }
        return kExitOk;
    });
}

int run_reconstruct(const ExperimentConfig& cfg, const std::filesystem::path& outDir) {
    return guard([&]() {
        std::filesystem::create_directories(outDir);
        const auto started = std::chrono::steady_clock::now();
        const Eigen::VectorXd grid = cfg.evalGrid.points();
        const bool seeded = cfg.signal.source == "random";
        std::vector<std::string> meta;
        if (seeded) meta.push_back("seed=" + std::to_string(cfg.signal.seed));

        json report;
        report["schemaVersion"] = kSchemaVersion;
        if (seeded) report["seed"] = cfg.signal.seed;

        if (!cfg.is2d()) {
            const Pipeline1D p = build_1d(cfg);
            const Signal f =
                seeded ? random_signal(cfg.signal.seed, cfg.signal.supportFirst,
                                       static_cast<int>(cfg.signal.supportLast -
                                                        cfg.signal.supportFirst + 1))
                       : load_signal_csv(cfg.signal.path);
            const BlockWindow window =
                required_blocks(p.ks, p.gen, grid.minCoeff(), grid.maxCoeff());
            const SampleSet samples =
                apply_operators(f, p.gen, p.specs, p.ks.offset, p.ks.period, window);
            const Eigen::VectorXd recon = reconstruct_1d(samples, p.ks, p.gen, grid);
            Eigen::VectorXd ref(grid.size());
            for (Eigen::Index i = 0; i < grid.size(); ++i) ref[i] = f.eval(p.gen, grid[i]);

            ReconstructionReport rep = make_report(ref, recon, cfg.evalGrid.step);
            rep.channelSampleCounts.assign(p.ks.channels.size(), window.count());
            rep.radius = p.ks.radius;
            rep.runtimeSeconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

            write_csv_1d(outDir / "recon.csv", grid, recon, meta);
            write_csv_1d(outDir / "error.csv", grid, recon - ref, meta);
            report["maxAbsError"] = rep.maxAbsError;
            report["l2GridError"] = rep.l2GridError;
            report["channelSampleCounts"] = rep.channelSampleCounts;
            report["radius"] = rep.radius;
            report["runtimeSeconds"] = rep.runtimeSeconds;
            report["evalPoints"] = grid.size();
            write_json(outDir / "report.json", report);
            std::cout << "reconstruct: maxAbsError = " << num(rep.maxAbsError)
                      << ", l2GridError = " << num(rep.l2GridError) << "\n";
        } else {
            const Pipeline2D p = build_2d(cfg);
            const Signal2D f =
                seeded
                    ? random_signal_2d(cfg.signal.seed, cfg.signal.supportFirst,
                                       cfg.signal.supportFirst2,
                                       static_cast<int>(cfg.signal.supportLast -
                                                        cfg.signal.supportFirst + 1),
                                       static_cast<int>(cfg.signal.supportLast2 -
                                                        cfg.signal.supportFirst2 + 1))
                    : load_signal_2d_csv(cfg.signal.path);
            const BlockWindow winT =
                required_blocks_t(p.ks, p.genT, grid.minCoeff(), grid.maxCoeff());
            const BlockWindow winS =
                required_blocks_s(p.ks, p.genS, grid.minCoeff(), grid.maxCoeff());
            const SampleSet2D samples =
                apply_operators_2d(f, p.genT, p.genS, p.specsT, p.specsS, p.ks.offsetT,
                                   p.ks.offsetS, p.ks.periodT, p.ks.periodS, winT, winS);
            const Eigen::MatrixXd recon = reconstruct_2d(samples, p.ks, p.genT, p.genS, grid,
                                                         grid);
            Eigen::MatrixXd ref(grid.size(), grid.size());
            for (Eigen::Index i = 0; i < grid.size(); ++i) {
                for (Eigen::Index j = 0; j < grid.size(); ++j) {
                    ref(i, j) = f.eval(p.genT, p.genS, grid[i], grid[j]);
                }
            }
            const Eigen::MatrixXd err = recon - ref;
            const double runtime =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

            write_csv_2d(outDir / "recon.csv", grid, grid, recon, meta);
            write_csv_2d(outDir / "error.csv", grid, grid, err, meta);
            report["maxAbsError"] = err.cwiseAbs().maxCoeff();
            report["l2GridError"] =
                std::sqrt(cfg.evalGrid.step * cfg.evalGrid.step * err.squaredNorm());
            report["channelSampleCounts"] =
                std::vector<long>(p.ks.channels.size(), winT.count() * winS.count());
            report["radius"] = p.ks.radius;
            report["runtimeSeconds"] = runtime;
            report["evalPoints"] = grid.size() * grid.size();
            write_json(outDir / "report.json", report);
            std::cout << "reconstruct: maxAbsError = " << num(err.cwiseAbs().maxCoeff()) << "\n";
        }
        return kExitOk;
    });
}

int run_verify(const ExperimentConfig& cfg, const VerifyOptions& opts) {
    return guard([&]() {
        CheckRunner checks;

        {  // partition of unity over a grid, orders 1..6
            double dev = 0.0;
            for (int m = 1; m <= 6; ++m) {
                for (int i = 0; i <= 200; ++i) {
                    const double t = -1.0 + 0.04 * i;
                    double sum = 0.0;
                    const int lo = static_cast<int>(std::floor(t)) - m;
                    for (int n = lo; n <= lo + m + 1; ++n) {
                        sum += bspline_eval(m, t - n);
                    }
                    dev = std::max(dev, std::abs(sum - 1.0));
                }
            }
            checks.report("partition of unity (orders 1..6)", dev <= 1e-12,
                          "max deviation " + num(dev));
        }

        {  // kernel shifting identity K_{a+m}(x) = e^{-2 pi i m x} K_a(x)
            double dev = 0.0;
            const int G = 256;
            for (const int order : {3, 4}) {
                const Generator gen = Generator::bspline(order);
                const Eigen::VectorXcd atA = zak_series(gen, 0.25, G);
                for (int m = -3; m <= 3; ++m) {
                    const Eigen::VectorXcd direct = zak_series(gen, 0.25 + m, G);
                    for (int j = 0; j < G; ++j) {
                        const double ang = -kTwoPi * m * static_cast<double>(j) / G;
                        const Complex mod = Complex(std::cos(ang), std::sin(ang)) * atA[j];
                        dev = std::max(dev, std::abs(direct[j] - mod));
                    }
                }
            }
            checks.report("kernel shifting identity", dev <= 1e-12, "max deviation " + num(dev));
        }

        {  // forward-difference matrices: inverse has unsigned binomial entries
            bool ok = true;
            for (int p = 2; p <= 8; ++p) {
                std::vector<OperatorSpec> specs;
                for (int k = 0; k < p; ++k) {
                    specs.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::forward(k));
                }
                const SchemeMatrix m = scheme_matrix(specs, p);
                const DualMatrix d = invert_scheme(m);
                for (int r = 0; r < p; ++r) {
                    for (int c = 0; c < p; ++c) {
                        ok = ok && d.columns(r, c) == static_cast<double>(binom(r, c));
                    }
                }
            }
            checks.report("Pascal inverse (forward schemes, p <= 8)", ok,
                          ok ? "exact" : "mismatch");
        }

        {  // backward-difference matrices are involutions
            bool ok = true;
            for (int p = 2; p <= 8; ++p) {
                std::vector<OperatorSpec> specs;
                for (int k = p - 1; k >= 0; --k) {
                    specs.push_back(k == 0 ? OperatorSpec::identity() : OperatorSpec::backward(k));
                }
                const SchemeMatrix m = scheme_matrix(specs, p);
                const DualMatrix d = invert_scheme(m);
                ok = ok && (d.columns.array() == m.rows.array()).all();
                const Eigen::MatrixXd prod = m.rows * m.rows;
                ok = ok && (prod.array() == Eigen::MatrixXd::Identity(p, p).array()).all();
            }
            checks.report("backward involution (p <= 8)", ok, ok ? "exact" : "mismatch");
        }

        {  // interpolation property of the spline kernels
            const ZakKernel cubic = zak_kernel(Generator::bspline(4), 0.0, cfg.gridSize);
            const double devCubic =
                interpolation_check(shannon_kernel(cubic, cfg.radius), Generator::bspline(4), 10);
            const ZakKernel quad = zak_kernel(Generator::bspline(3), 0.5, cfg.gridSize);
            const double devQuad =
                interpolation_check(shannon_kernel(quad, cfg.radius), Generator::bspline(3), 10);
            const double dev = std::max(devCubic, devQuad);
            checks.report("interpolation S_a(a+n) = delta", dev <= 1e-8,
                          "max deviation " + num(dev));
        }

        {  // dual pairing of the configured scheme
            const Generator gen = make_generator(cfg.generator);
            const SchemeMatrix scheme = scheme_matrix(parse_specs(cfg.scheme), cfg.period);
            DualMatrix dual = dual_for(scheme);
            if (opts.injectWrongSign) {
                for (Eigen::Index i = 0; i < dual.columns.size(); ++i) {
                    if (dual.columns(i) != 0.0) {
                        dual.columns(i) = -dual.columns(i);
                        break;
                    }
                }
            }
            const std::string suffix = opts.injectWrongSign ? " (wrong-sign fixture)" : "";
            if (scheme.basisMode()) {
                const ZakKernel zak = zak_kernel(gen, cfg.a, cfg.gridSize);
                const double dev = biorthogonality_check(scheme, dual, zak, 3);
                checks.report("biorthogonality" + suffix, dev <= 1e-6,
                              "max deviation " + num(dev));
            } else {
                const double dev = (dual.columns * scheme.rows -
                                    Eigen::MatrixXd::Identity(scheme.period, scheme.period))
                                       .cwiseAbs()
                                       .maxCoeff();
                checks.report("left-inverse identity" + suffix, dev <= 1e-10,
                              "max deviation " + num(dev));
            }
        }

        return checks.allOk ? kExitOk : kExitCheckFailed;
    });
}

}  // namespace sisamp::cli
