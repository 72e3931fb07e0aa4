#include "kernelalg/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "kernelalg/algebra.hpp"

namespace kernelalg {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::axioms: return "axioms";
        case Suite::units: return "units";
        case Suite::center: return "center";
        case Suite::ideals: return "ideals";
        case Suite::representation: return "representation";
        case Suite::derivation: return "derivation";
        case Suite::all: return "all";
    }
    return "?";
}

Suite suite_from_string(const std::string& name) {
    for (Suite s : {Suite::axioms, Suite::units, Suite::center, Suite::ideals,
                    Suite::representation, Suite::derivation, Suite::all})
        if (to_string(s) == name) return s;
    throw ConfigError("unknown suite: " + name);
}

namespace {

SpaceKind kind_from_string(const std::string& name) {
    for (SpaceKind k :
         {SpaceKind::finite, SpaceKind::interval, SpaceKind::circle, SpaceKind::torus2})
        if (to_string(k) == name) return k;
    throw ConfigError("unknown space kind: " + name);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_numbers(const std::string& s) {
    std::istringstream is(s);
    std::vector<double> out;
    double v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw ConfigError("malformed number list: " + s);
    return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) throw ConfigError("empty key or value: " + line);
        if (kv.count(key)) throw ConfigError("duplicate key: " + key);
        kv[key] = val;
    }

    if (!kv.count("schema") || kv["schema"] != "kernelalg-config-v1")
        throw ConfigError("missing or unsupported schema tag");
    kv.erase("schema");

    ExperimentConfig cfg;
    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return "";
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (const std::string v = take("kind"); !v.empty()) cfg.kind = kind_from_string(v);
    if (const std::string v = take("resolution"); !v.empty()) {
        try {
            cfg.resolution = std::stoi(v);
        } catch (const std::exception&) {
            throw ConfigError("bad resolution: " + v);
        }
    }
    if (const std::string v = take("suite"); !v.empty()) cfg.suite = suite_from_string(v);
    if (const std::string v = take("seed"); !v.empty()) {
        try {
            cfg.seed = std::stoull(v);
        } catch (const std::exception&) {
            throw ConfigError("bad seed: " + v);
        }
    }
    if (const std::string v = take("out"); !v.empty()) cfg.out = v;
    auto parse_tol = [](const char* key, const std::string& v) {
        try {
            std::size_t used = 0;
            const double x = std::stod(v, &used);
            if (used != v.size() || !(x > 0.0)) throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw ConfigError(std::string("bad ") + key + ": " + v);
        }
    };
    if (const std::string v = take("tol_algebraic"); !v.empty())
        cfg.tol.algebraic = parse_tol("tol_algebraic", v);
    if (const std::string v = take("tol_rank"); !v.empty()) cfg.tol.rank = parse_tol("tol_rank", v);
    if (const std::string v = take("quad_slack_c"); !v.empty())
        cfg.tol.quad_slack_c = parse_tol("quad_slack_c", v);

    if (const std::string v = take("weights"); !v.empty()) {
        const auto nums = parse_numbers(v);
        cfg.weights = Eigen::Map<const Eigen::VectorXd>(nums.data(), nums.size());
    }
    if (const std::string v = take("metric"); !v.empty()) {
        std::vector<std::vector<double>> rows;
        std::string row;
        std::istringstream rs(v);
        while (std::getline(rs, row, ';')) rows.push_back(parse_numbers(row));
        const int n = static_cast<int>(rows.size());
        cfg.metric.resize(n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw ConfigError("metric table is not square");
            for (int j = 0; j < n; ++j) cfg.metric(i, j) = rows[i][j];
        }
    }

    if (cfg.kind == SpaceKind::finite) {
        if (cfg.weights.size() == 0) throw ConfigError("finite kind requires weights");
        if (cfg.metric.size() == 0) throw ConfigError("finite kind requires a metric table");
    }
    if (!kv.empty()) throw ConfigError("unknown key: " + kv.begin()->first);
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

DiscreteSpace::Ptr build_space(const ExperimentConfig& config) {
    switch (config.kind) {
        case SpaceKind::finite: return DiscreteSpace::finite(config.weights, config.metric);
        case SpaceKind::interval: return DiscreteSpace::interval(config.resolution);
        case SpaceKind::circle: return DiscreteSpace::circle(config.resolution);
        case SpaceKind::torus2: return DiscreteSpace::torus2(config.resolution);
    }
    throw ConfigError("bad space kind");
}

std::string describe_space(const ExperimentConfig& config) {
    const auto space = build_space(config);
    std::ostringstream os;
    os << space->size() << " nodes, diameter " << space->diameter() << ", weights in ["
       << space->weights().minCoeff() << ", " << space->weights().maxCoeff() << "]";
    const ConditionCheck cc = check_conditions(*space, default_delta_sequence());
    os << ", C1 " << (cc.c1 ? "ok" : "fails") << ", C2 " << (cc.c2 ? "ok" : "fails");
    if (space->kind() == SpaceKind::finite)
        os << ", unit exists (sup norm " << 1.0 / space->weights().minCoeff() << ")";
    else
        os << ", no unit";
    return os.str();
}

}  // namespace kernelalg
