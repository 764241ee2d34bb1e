#include "sisamp/serialize.hpp"

#include <fstream>
#include <sstream>

namespace sisamp {

using nlohmann::json;

namespace {

json terms_to_json(const std::vector<KernelTerm>& combo) {
    json arr = json::array();
    for (const auto& t : combo) arr.push_back({{"shift", t.shift}, {"weight", t.weight}});
    return arr;
}

json terms_to_json(const std::vector<KernelTerm2D>& combo) {
    json arr = json::array();
    for (const auto& t : combo) {
        arr.push_back({{"shiftT", t.shiftT}, {"shiftS", t.shiftS}, {"weight", t.weight}});
    }
    return arr;
}

void require_schema(const json& j, const char* what) {
    if (!j.is_object()) throw ConfigError(std::string(what) + ": expected a JSON object");
    if (j.value("schemaVersion", 0) != kSchemaVersion) {
        throw ConfigError(std::string(what) + ": unsupported schemaVersion");
    }
}

}  // namespace

json kernel_set_to_json(const SamplingKernelSet& ks) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["dim"] = 1;
    j["offset"] = ks.offset;
    j["gridSize"] = ks.gridSize;
    j["radius"] = ks.radius;
    j["baseStart"] = ks.baseStart;
    j["baseCoeffs"] = std::vector<double>(ks.baseCoeffs.begin(), ks.baseCoeffs.end());
    j["tailMass"] = ks.tailMass;
    j["period"] = ks.period;
    j["windowStart"] = ks.windowStart;
    json channels = json::array();
    for (std::size_t c = 0; c < ks.channels.size(); ++c) {
        channels.push_back({{"label", ks.labels.at(c)}, {"terms", terms_to_json(ks.channels[c])}});
    }
    j["channels"] = channels;
    return j;
}

SamplingKernelSet kernel_set_from_json(const json& j) {
    require_schema(j, "kernel set");
    if (j.value("dim", 1) != 1) throw ConfigError("kernel set: expected dim 1");
    SamplingKernelSet ks;
    ks.offset = j.at("offset").get<double>();
    ks.gridSize = j.at("gridSize").get<int>();
    ks.radius = j.at("radius").get<int>();
    ks.baseStart = j.at("baseStart").get<int>();
    const auto coeffs = j.at("baseCoeffs").get<std::vector<double>>();
    ks.baseCoeffs = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                      static_cast<Eigen::Index>(coeffs.size()));
    ks.tailMass = j.at("tailMass").get<double>();
    ks.period = j.at("period").get<int>();
    ks.windowStart = j.at("windowStart").get<int>();
    for (const auto& ch : j.at("channels")) {
        std::vector<KernelTerm> combo;
        for (const auto& t : ch.at("terms")) {
            combo.push_back({t.at("shift").get<int>(), t.at("weight").get<double>()});
        }
        ks.channels.push_back(std::move(combo));
        ks.labels.push_back(ch.at("label").get<std::string>());
    }
    return ks;
}

json kernel_set_to_json(const SamplingKernelSet2D& ks) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["dim"] = 2;
    j["offsetT"] = ks.offsetT;
    j["offsetS"] = ks.offsetS;
    j["gridSize"] = ks.gridSize;
    j["radius"] = ks.radius;
    j["baseStartT"] = ks.baseStartT;
    j["baseStartS"] = ks.baseStartS;
    json rows = json::array();
    for (Eigen::Index i = 0; i < ks.baseCoeffs.rows(); ++i) {
        rows.push_back(std::vector<double>(ks.baseCoeffs.row(i).begin(),
                                           ks.baseCoeffs.row(i).end()));
    }
    j["baseCoeffs"] = rows;
    j["tailMass"] = ks.tailMass;
    j["periodT"] = ks.periodT;
    j["periodS"] = ks.periodS;
    j["windowStartT"] = ks.windowStartT;
    j["windowStartS"] = ks.windowStartS;
    json channels = json::array();
    for (std::size_t c = 0; c < ks.channels.size(); ++c) {
        channels.push_back({{"label", ks.labels.at(c)}, {"terms", terms_to_json(ks.channels[c])}});
    }
    j["channels"] = channels;
    return j;
}

SamplingKernelSet2D kernel_set_2d_from_json(const json& j) {
    require_schema(j, "kernel set");
    if (j.value("dim", 1) != 2) throw ConfigError("kernel set: expected dim 2");
    SamplingKernelSet2D ks;
    ks.offsetT = j.at("offsetT").get<double>();
    ks.offsetS = j.at("offsetS").get<double>();
    ks.gridSize = j.at("gridSize").get<int>();
    ks.radius = j.at("radius").get<int>();
    ks.baseStartT = j.at("baseStartT").get<int>();
    ks.baseStartS = j.at("baseStartS").get<int>();
    const auto& rows = j.at("baseCoeffs");
    const Eigen::Index nRows = static_cast<Eigen::Index>(rows.size());
    if (nRows == 0) throw ConfigError("kernel set: empty baseCoeffs");
    const Eigen::Index nCols = static_cast<Eigen::Index>(rows.at(0).size());
    ks.baseCoeffs.resize(nRows, nCols);
    for (Eigen::Index i = 0; i < nRows; ++i) {
        const auto row = rows.at(i).get<std::vector<double>>();
        if (static_cast<Eigen::Index>(row.size()) != nCols) {
            throw ConfigError("kernel set: ragged baseCoeffs");
        }
        ks.baseCoeffs.row(i) =
            Eigen::Map<const Eigen::VectorXd>(row.data(), static_cast<Eigen::Index>(row.size()));
    }
    ks.tailMass = j.at("tailMass").get<double>();
    ks.periodT = j.at("periodT").get<int>();
    ks.periodS = j.at("periodS").get<int>();
    ks.windowStartT = j.at("windowStartT").get<int>();
    ks.windowStartS = j.at("windowStartS").get<int>();
    for (const auto& ch : j.at("channels")) {
        std::vector<KernelTerm2D> combo;
        for (const auto& t : ch.at("terms")) {
            combo.push_back({t.at("shiftT").get<int>(), t.at("shiftS").get<int>(),
                             t.at("weight").get<double>()});
        }
        ks.channels.push_back(std::move(combo));
        ks.labels.push_back(ch.at("label").get<std::string>());
    }
    return ks;
}

Generator make_generator(const GeneratorConfig& cfg) {
    if (cfg.kind == "bspline") return Generator::bspline(cfg.order);
    if (cfg.kind == "sinc") return Generator::sinc(cfg.radius);
    if (cfg.kind == "tabulated") {
        Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(
            cfg.values.data(), static_cast<Eigen::Index>(cfg.values.size()));
        return Generator::tabulated(std::move(v), cfg.start, cfg.step);
    }
    throw ConfigError("generator: unknown kind '" + cfg.kind + "'");
}

Eigen::VectorXd GridConfig::points() const {
    if (!(step > 0.0) || stop < start) throw ConfigError("evalGrid: need stop >= start, step > 0");
    const auto count = static_cast<Eigen::Index>(std::floor((stop - start) / step + 0.5)) + 1;
    Eigen::VectorXd pts(count);
    for (Eigen::Index i = 0; i < count; ++i) pts[i] = start + step * static_cast<double>(i);
    return pts;
}

namespace {

GeneratorConfig parse_generator(const json& j) {
    GeneratorConfig g;
    if (!j.is_object()) throw ConfigError("generator: expected an object");
    g.kind = j.value("kind", "bspline");
    g.order = j.value("order", 4);
    g.radius = j.value("radius", 64);
    if (j.contains("values")) g.values = j.at("values").get<std::vector<double>>();
    g.start = j.value("start", 0.0);
    g.step = j.value("step", 1.0);
    if (g.kind == "tabulated" && g.values.size() < 2) {
        throw ConfigError("generator: tabulated kind needs a 'values' array");
    }
    return g;
}

}  // namespace

ExperimentConfig parse_config(const json& j, const std::filesystem::path& baseDir) {
    try {
        require_schema(j, "config");
        ExperimentConfig cfg;
        if (j.contains("generator")) cfg.generator = parse_generator(j.at("generator"));
        if (j.contains("generator2")) cfg.generator2 = parse_generator(j.at("generator2"));
        cfg.a = j.value("a", 0.0);
        cfg.b = j.value("b", 0.0);
        cfg.gridSize = j.value("gridSize", 4096);
        cfg.radius = j.value("radius", 40);
        if (!(cfg.a >= 0.0 && cfg.a < 1.0) || !(cfg.b >= 0.0 && cfg.b < 1.0)) {
            throw ConfigError("config: offsets a/b must lie in [0,1)");
        }
        if (cfg.gridSize < 2 || cfg.radius < 1) {
            throw ConfigError("config: need gridSize >= 2 and radius >= 1");
        }

        if (j.contains("scheme")) cfg.scheme = j.at("scheme").get<std::vector<std::string>>();
        cfg.period = j.value("period", static_cast<int>(cfg.scheme.size()));
        if (j.contains("scheme2")) cfg.scheme2 = j.at("scheme2").get<std::vector<std::string>>();
        cfg.period2 = j.value("period2", static_cast<int>(cfg.scheme2.size()));
        cfg.kernel2dMode = j.value("kernel2d", "separable");
        if (cfg.kernel2dMode != "separable" && cfg.kernel2dMode != "general") {
            throw ConfigError("config: kernel2d must be 'separable' or 'general'");
        }

        if (j.contains("signal")) {
            const auto& s = j.at("signal");
            cfg.signal.source = s.value("source", "random");
            cfg.signal.seed = s.value("seed", std::uint64_t{1});
            if (s.contains("support")) {
                const auto sup = s.at("support").get<std::vector<long>>();
                if (sup.size() != 2 || sup[1] < sup[0]) {
                    throw ConfigError("signal: support must be [first, last]");
                }
                cfg.signal.supportFirst = sup[0];
                cfg.signal.supportLast = sup[1];
                cfg.signal.supportFirst2 = sup[0];
                cfg.signal.supportLast2 = sup[1];
            }
            if (s.contains("support2")) {
                const auto sup = s.at("support2").get<std::vector<long>>();
                if (sup.size() != 2 || sup[1] < sup[0]) {
                    throw ConfigError("signal: support2 must be [first, last]");
                }
                cfg.signal.supportFirst2 = sup[0];
                cfg.signal.supportLast2 = sup[1];
            }
            if (cfg.signal.source == "file") {
                if (!s.contains("path")) throw ConfigError("signal: file source needs 'path'");
                cfg.signal.path = baseDir / s.at("path").get<std::string>();
                if (!std::filesystem::exists(cfg.signal.path)) {
                    throw ConfigError("signal: file not found: " + cfg.signal.path.string());
                }
            } else if (cfg.signal.source != "random") {
                throw ConfigError("signal: unknown source '" + cfg.signal.source + "'");
            }
        }

        if (j.contains("evalGrid")) {
            const auto& g = j.at("evalGrid");
            cfg.evalGrid.start = g.value("start", -8.0);
            cfg.evalGrid.stop = g.value("stop", 8.0);
            cfg.evalGrid.step = g.value("step", 0.0625);
        }
        if (!(cfg.evalGrid.step > 0.0) || cfg.evalGrid.stop < cfg.evalGrid.start) {
            throw ConfigError("evalGrid: need stop >= start and step > 0");
        }

        if (j.contains("kernelSet")) {
            cfg.kernelSetPath = baseDir / j.at("kernelSet").get<std::string>();
            if (!std::filesystem::exists(*cfg.kernelSetPath)) {
                throw ConfigError("kernelSet: file not found: " + cfg.kernelSetPath->string());
            }
        }
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    return parse_config(j, path.parent_path());
}

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path,
                                               std::size_t fields) {
    std::ifstream in(path);
    if (!in) throw ConfigError("csv: cannot open " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    bool headerSkipped = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!headerSkipped) {  // mandatory header line
            headerSkipped = true;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != fields) {
            throw ConfigError("csv: " + path.string() + ": expected " + std::to_string(fields) +
                              " fields, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError("csv: " + path.string() + ": no data rows");
    return rows;
}

}  // namespace

Signal load_signal_csv(const std::filesystem::path& path) {
    const auto rows = read_csv_rows(path, 2);
    long lo = static_cast<long>(rows.front()[0]), hi = lo;
    for (const auto& r : rows) {
        lo = std::min(lo, static_cast<long>(r[0]));
        hi = std::max(hi, static_cast<long>(r[0]));
    }
    Signal f;
    f.start = lo;
    f.coeffs = Eigen::VectorXd::Zero(hi - lo + 1);
    for (const auto& r : rows) f.coeffs[static_cast<long>(r[0]) - lo] = r[1];
    return f;
}

Signal2D load_signal_2d_csv(const std::filesystem::path& path) {
    const auto rows = read_csv_rows(path, 3);
    long tLo = static_cast<long>(rows.front()[0]), tHi = tLo;
    long sLo = static_cast<long>(rows.front()[1]), sHi = sLo;
    for (const auto& r : rows) {
        tLo = std::min(tLo, static_cast<long>(r[0]));
        tHi = std::max(tHi, static_cast<long>(r[0]));
        sLo = std::min(sLo, static_cast<long>(r[1]));
        sHi = std::max(sHi, static_cast<long>(r[1]));
    }
    Signal2D f;
    f.startT = tLo;
    f.startS = sLo;
    f.coeffs = Eigen::MatrixXd::Zero(tHi - tLo + 1, sHi - sLo + 1);
    for (const auto& r : rows) {
        f.coeffs(static_cast<long>(r[0]) - tLo, static_cast<long>(r[1]) - sLo) = r[2];
    }
    return f;
}

}  // namespace sisamp
