#include "sisamp/scheme.hpp"

#include <algorithm>

namespace sisamp {

SchemeMatrix scheme_matrix(const std::vector<OperatorSpec>& specs, int period) {
    if (period < 1) throw Error("scheme_matrix: period must be >= 1");
    const int q = static_cast<int>(specs.size());
    if (q < period) {
        throw UnderdeterminedError("scheme_matrix: " + std::to_string(q) +
                                   " channels cannot determine a period-" +
                                   std::to_string(period) + " scheme");
    }

    std::vector<std::pair<int, Eigen::VectorXd>> stencils;
    stencils.reserve(specs.size());
    int windowStart = 0, windowEnd = -1;
    bool first = true;
    for (const auto& spec : specs) {
        auto st = spec.stencil();
        const int lo = st.first;
        const int hi = st.first + static_cast<int>(st.second.size()) - 1;
        if (hi - lo + 1 > period) {
            throw WindowOverflowError("scheme_matrix: spec '" + spec.str() + "' spans " +
                                      std::to_string(hi - lo + 1) +
                                      " offsets, more than the period " +
                                      std::to_string(period));
        }
        windowStart = first ? lo : std::min(windowStart, lo);
        windowEnd = first ? hi : std::max(windowEnd, hi);
        first = false;
        stencils.push_back(std::move(st));
    }
    if (windowEnd - windowStart + 1 > period) {
        throw WindowOverflowError(
            "scheme_matrix: combined offsets [" + std::to_string(windowStart) + ", " +
            std::to_string(windowEnd) + "] do not fit in one period window of " +
            std::to_string(period));
    }

    SchemeMatrix m;
    m.period = period;
    m.windowStart = windowStart;
    m.rows = Eigen::MatrixXd::Zero(q, period);
    for (int j = 0; j < q; ++j) {
        const auto& [start, w] = stencils[j];
        for (Eigen::Index i = 0; i < w.size(); ++i) {
            m.rows(j, start + static_cast<int>(i) - windowStart) = w[i];
        }
        m.labels.push_back(specs[j].str());
    }
    return m;
}

SampleSet apply_operators(const Signal& f, const Generator& gen,
                          const std::vector<OperatorSpec>& specs, double a, int period,
                          BlockWindow blocks) {
    if (blocks.count() < 1) throw Error("apply_operators: empty block window");
    const auto feval = [&](double t) { return f.eval(gen, t); };
    SampleSet s;
    s.period = period;
    s.offset = a;
    s.blocks = blocks;
    s.channels.resize(static_cast<Eigen::Index>(specs.size()), blocks.count());
    for (std::size_t j = 0; j < specs.size(); ++j) {
        for (long i = 0; i < blocks.count(); ++i) {
            const double t = a + static_cast<double>(period) *
                                     static_cast<double>(blocks.first + i);
            s.channels(static_cast<Eigen::Index>(j), i) = specs[j].apply(feval, t);
        }
    }
    return s;
}

SampleSet2D apply_operators_2d(const Signal2D& f, const Generator& genT, const Generator& genS,
                               const std::vector<OperatorSpec>& specsT,
                               const std::vector<OperatorSpec>& specsS, double a, double b,
                               int periodT, int periodS, BlockWindow blocksT,
                               BlockWindow blocksS) {
    if (blocksT.count() < 1 || blocksS.count() < 1) {
        throw Error("apply_operators_2d: empty block window");
    }
    SampleSet2D s;
    s.periodT = periodT;
    s.periodS = periodS;
    s.offsetT = a;
    s.offsetS = b;
    s.blocksT = blocksT;
    s.blocksS = blocksS;
    for (const auto& specT : specsT) {
        for (const auto& specS : specsS) {
            Eigen::MatrixXd ch(blocksT.count(), blocksS.count());
            for (long i = 0; i < blocksT.count(); ++i) {
                const double t = a + static_cast<double>(periodT) *
                                         static_cast<double>(blocksT.first + i);
                for (long j = 0; j < blocksS.count(); ++j) {
                    const double sPoint = b + static_cast<double>(periodS) *
                                                  static_cast<double>(blocksS.first + j);
                    // the axis operators commute; apply along s, then along t
                    const auto slice = [&](double u) {
                        const auto line = [&](double v) { return f.eval(genT, genS, u, v); };
                        return specS.apply(line, sPoint);
                    };
                    ch(i, j) = specT.apply(slice, t);
                }
            }
            s.channels.push_back(std::move(ch));
        }
    }
    return s;
}

}  // namespace sisamp
