#include "sisamp/generator.hpp"

#include <cmath>

#include "sisamp/bspline.hpp"

namespace sisamp {

namespace {

double sinc_value(double t) {
    const double x = M_PI * t;
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

Generator Generator::bspline(int order) {
    if (order < 1) {
        throw InvalidOrderError("Generator::bspline: order must be >= 1, got " +
                                std::to_string(order));
    }
    Generator g;
    g.kind_ = GeneratorKind::BSpline;
    g.order_ = order;
    return g;
}

Generator Generator::sinc(int seriesRadius) {
    if (seriesRadius < 1) {
        throw Error("Generator::sinc: series radius must be >= 1");
    }
    Generator g;
    g.kind_ = GeneratorKind::Sinc;
    g.seriesRadius_ = seriesRadius;
    return g;
}

Generator Generator::tabulated(Eigen::VectorXd values, double start, double step) {
    if (values.size() < 2) {
        throw Error("Generator::tabulated: need at least two samples");
    }
    if (!(step > 0.0)) {
        throw Error("Generator::tabulated: grid step must be positive");
    }
    Generator g;
    g.kind_ = GeneratorKind::Tabulated;
    g.values_ = std::move(values);
    g.tabStart_ = start;
    g.tabStep_ = step;
    return g;
}

double Generator::operator()(double t) const {
    switch (kind_) {
        case GeneratorKind::BSpline:
            return bspline_eval(order_, t);
        case GeneratorKind::Sinc:
            return sinc_value(t);
        case GeneratorKind::Tabulated: {
            const double pos = (t - tabStart_) / tabStep_;
            if (pos < 0.0 || pos > static_cast<double>(values_.size() - 1)) return 0.0;
            const auto i = static_cast<Eigen::Index>(pos);
            if (i >= values_.size() - 1) return values_[values_.size() - 1];
            const double frac = pos - static_cast<double>(i);
            return values_[i] + frac * (values_[i + 1] - values_[i]);
        }
    }
    return 0.0;
}

double Generator::supportBegin() const {
    switch (kind_) {
        case GeneratorKind::BSpline: return 0.0;
        case GeneratorKind::Sinc: return -static_cast<double>(seriesRadius_);
        case GeneratorKind::Tabulated: return tabStart_;
    }
    return 0.0;
}

double Generator::supportEnd() const {
    switch (kind_) {
        case GeneratorKind::BSpline: return static_cast<double>(order_);
        case GeneratorKind::Sinc: return static_cast<double>(seriesRadius_);
        case GeneratorKind::Tabulated:
            return tabStart_ + tabStep_ * static_cast<double>(values_.size() - 1);
    }
    return 0.0;
}

std::pair<long, long> Generator::shiftRange(double lo, double hi) const {
    // phi(x - n) != 0 needs x - n in (supportBegin, supportEnd).
    const double nLo = lo - supportEnd();
    const double nHi = hi - supportBegin();
    return {static_cast<long>(std::ceil(nLo)), static_cast<long>(std::floor(nHi))};
}

std::string Generator::describe() const {
    switch (kind_) {
        case GeneratorKind::BSpline: return "bspline(" + std::to_string(order_) + ")";
        case GeneratorKind::Sinc: return "sinc(radius=" + std::to_string(seriesRadius_) + ")";
        case GeneratorKind::Tabulated:
            return "tabulated(" + std::to_string(values_.size()) + " samples)";
    }
    return "generator";
}

GeneratorDiagnostics generator_diagnostics(const Generator& gen, int gridSize) {
    if (gridSize < 2) throw Error("generator_diagnostics: grid size must be >= 2");
    GeneratorDiagnostics d{0.0, 0.0, 0.0};
    const double lo = gen.supportBegin();
    const double hi = gen.supportEnd();
    const double h = (hi - lo) / gridSize;
    for (int j = 0; j < gridSize; ++j) {
        const double t = lo + h * j;
        d.maxGridDelta = std::max(d.maxGridDelta, std::abs(gen(t + h) - gen(t)));
    }
    bool first = true;
    for (int j = 0; j < gridSize; ++j) {
        const double t = static_cast<double>(j) / gridSize;
        const auto [nLo, nHi] = gen.shiftRange(t, t);
        double sum = 0.0;
        for (long n = nLo; n <= nHi; ++n) {
            const double v = gen(t - static_cast<double>(n));
            sum += v * v;
        }
        if (first || sum < d.sumSquaresMin) d.sumSquaresMin = sum;
        if (first || sum > d.sumSquaresMax) d.sumSquaresMax = sum;
        first = false;
    }
    return d;
}

}  // namespace sisamp
