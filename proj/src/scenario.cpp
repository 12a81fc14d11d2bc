#include "pipeflow/scenario.hpp"

#include "pipeflow/csv.hpp"
#include "pipeflow/dpde.hpp"
#include "pipeflow/lumped.hpp"
#include "pipeflow/metrics.hpp"
#include "pipeflow/pde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pipeflow {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid number for " + what + ": '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("invalid number for " + what + ": '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    for (const std::string& part : split(text, ',')) {
        if (part.empty()) continue;
        values.push_back(parse_double(part, what));
    }
    return values;
}

// One parsed `key = value` store per config section.
using Section = std::map<std::string, std::string>;

struct ConfigFile {
    std::map<std::string, Section> sections;
    std::string base_dir;
};

ConfigFile read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ConfigFile config;
    config.base_dir = std::filesystem::path(path).parent_path().string();
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                            ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            config.sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty())
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected 'key = value' inside a section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": empty key");
        config.sections[section][key] = value;
    }
    return config;
}

const std::string* find_key(const ConfigFile& config, const std::string& section,
                            const std::string& key) {
    const auto s = config.sections.find(section);
    if (s == config.sections.end()) return nullptr;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    return &k->second;
}

double require_number(const ConfigFile& config, const std::string& section,
                      const std::string& key) {
    const std::string* value = find_key(config, section, key);
    if (!value)
        throw std::invalid_argument("missing config key [" + section + "] " + key);
    return parse_double(*value, "[" + section + "] " + key);
}

PipeParameters parse_parameters(const ConfigFile& config) {
    PipeGeometry geom;
    geom.length = require_number(config, "parameters", "length_m");
    geom.inner_radius = require_number(config, "parameters", "inner_radius_m");
    geom.outer_radius = require_number(config, "parameters", "outer_radius_m");

    MaterialProperties mat;
    mat.rho_m = require_number(config, "parameters", "rho_m");
    mat.cp_m = require_number(config, "parameters", "cp_m");
    mat.rho_w = require_number(config, "parameters", "rho_w");
    mat.cp_w = require_number(config, "parameters", "cp_w");
    mat.lambda_w = require_number(config, "parameters", "lambda_w");

    HeatTransferSpec ht;
    ht.alpha_wa = require_number(config, "parameters", "alpha_wa");
    if (const std::string* a0 = find_key(config, "parameters", "alpha_mw0")) {
        ht.alpha_mw0 = parse_double(*a0, "[parameters] alpha_mw0");
        ht.alpha_mw1 = require_number(config, "parameters", "alpha_mw1");
        ht.alpha_mw = *ht.alpha_mw0;
    } else {
        ht.alpha_mw = require_number(config, "parameters", "alpha_mw");
    }
    if (const std::string* eps = find_key(config, "parameters", "epsilon"))
        ht.epsilon = parse_double(*eps, "[parameters] epsilon");
    return PipeParameters::make(geom, mat, ht);
}

}  // namespace

Signal parse_signal_spec(const std::string& spec, const std::string& base_dir) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("malformed signal spec '" + spec +
                                    "': expected kind:arguments");
    const std::string kind = trim(spec.substr(0, colon));
    const std::string body = trim(spec.substr(colon + 1));
    if (kind == "const") {
        return Signal::constant(parse_double(body, "const signal"));
    }
    if (kind == "step") {
        const std::vector<double> a = parse_number_list(body, "step signal");
        if (a.size() != 3)
            throw std::invalid_argument("step signal needs t,v0,v1: '" + spec + "'");
        return Signal::step(a[0], a[1], a[2]);
    }
    if (kind == "ramp") {
        const std::vector<double> a = parse_number_list(body, "ramp signal");
        if (a.size() != 4)
            throw std::invalid_argument("ramp signal needs t0,t1,v0,v1: '" + spec + "'");
        return Signal::ramp(a[0], a[1], a[2], a[3]);
    }
    if (kind == "csv") {
        std::filesystem::path file(body);
        if (file.is_relative() && !base_dir.empty())
            file = std::filesystem::path(base_dir) / file;
        return signal_from_csv(file.string());
    }
    throw std::invalid_argument("unknown signal kind '" + kind + "' in '" + spec + "'");
}

Scenario Scenario::load(const std::string& path) {
    const ConfigFile config = read_config(path);
    Scenario s;
    s.params = parse_parameters(config);

    const std::string* v = find_key(config, "signals", "v");
    const std::string* tin = find_key(config, "signals", "Tin");
    const std::string* tamb = find_key(config, "signals", "Tamb");
    if (!v || !tin || !tamb)
        throw std::invalid_argument("[signals] must define v, Tin and Tamb");
    s.signals.velocity = parse_signal_spec(*v, config.base_dir);
    s.signals.inlet = parse_signal_spec(*tin, config.base_dir);
    s.signals.ambient = parse_signal_spec(*tamb, config.base_dir);
    if (!s.signals.velocity.strictly_positive())
        throw std::invalid_argument("velocity signal must be strictly positive");

    s.t_end = require_number(config, "simulation", "t_end");
    if (const std::string* n = find_key(config, "simulation", "n")) {
        const double value = parse_double(*n, "[simulation] n");
        s.n = static_cast<int>(value);
        if (s.n < 1 || static_cast<double>(s.n) != value)
            throw std::invalid_argument("[simulation] n must be a positive integer");
    }
    if (const std::string* dt = find_key(config, "simulation", "dt"))
        s.dt = parse_double(*dt, "[simulation] dt");
    if (const std::string* probes = find_key(config, "simulation", "probes"))
        s.probes = parse_number_list(*probes, "[simulation] probes");

    if (const std::string* ref = find_key(config, "models", "reference"))
        s.reference = *ref;
    if (const std::string* compare = find_key(config, "models", "compare")) {
        for (const std::string& name : split(*compare, ','))
            if (!name.empty()) s.compare.push_back(name);
    }
    if (const std::string* dir = find_key(config, "output", "directory"))
        s.output_dir = *dir;
    return s;
}

double Scenario::resolved_dt() const {
    if (dt > 0.0) return dt;
    const double vmax = signals.velocity.max_value();
    return 0.5 * params.geometry.length / (n * vmax);
}

std::string Scenario::resolved_output_dir() const {
    if (!output_dir.empty()) return output_dir;
    if (const char* env = std::getenv("PIPEFLOW_OUT_DIR"))
        if (*env) return env;
    return ".";
}

ModelOutput run_model(const std::string& name, const PipeParameters& params,
                      const BoundarySignals& signals,
                      const SimulationSettings& settings) {
    SimulationSettings run = settings;
    if (name == "pde") return simulate_pde(params, signals, run);
    if (name == "pde_simplified") return simulate_simplified_pde(params, signals, run);
    if (name == "dpde") return simulate_dpde(params, signals, run);
    if (name.rfind("dpde:", 0) == 0) {
        const double n = parse_double(name.substr(5), "dpde section count");
        run.n = static_cast<int>(n);
        if (run.n < 1 || static_cast<double>(run.n) != n)
            throw std::invalid_argument("dpde section count must be a positive integer");
        return simulate_dpde(params, signals, run);
    }
    if (name == "dpde1") return simulate_dpde1(params, signals, run);
    run.probes.clear();
    if (name == "ode") return simulate_ode(params, signals, run);
    if (name == "dde") return simulate_dde(params, signals, run);
    if (name == "adapted_dde") return simulate_adapted_dde(params, signals, run);
    throw std::invalid_argument("unknown model name '" + name + "'");
}

namespace {

std::string file_safe(const std::string& name) {
    std::string safe = name;
    std::replace(safe.begin(), safe.end(), ':', '_');
    return safe;
}

}  // namespace

ComparisonReport run_scenario(const Scenario& scenario) {
    SimulationSettings settings;
    settings.n = scenario.n;
    settings.dt = scenario.resolved_dt();
    settings.t_end = scenario.t_end;
    settings.probes = scenario.probes;

    const std::filesystem::path out_dir(scenario.resolved_output_dir());
    std::filesystem::create_directories(out_dir);

    const ModelOutput reference =
        run_model(scenario.reference, scenario.params, scenario.signals, settings);
    write_model_output((out_dir / (file_safe(scenario.reference) + ".csv")).string(),
                       reference);

    ComparisonReport report;
    report.reference = scenario.reference;
    for (const std::string& name : scenario.compare) {
        const ModelOutput out =
            run_model(name, scenario.params, scenario.signals, settings);
        write_model_output((out_dir / (file_safe(name) + ".csv")).string(), out);
        ComparisonEntry entry;
        entry.model = name;
        const ErrorPair medium =
            error_pair(reference.t, reference.tm_out, out.t, out.tm_out);
        entry.e2 = medium.e2;
        entry.einf = medium.einf;
        if (!reference.tw_out.empty() && !out.tw_out.empty()) {
            const ErrorPair wall =
                error_pair(reference.t, reference.tw_out, out.t, out.tw_out);
            entry.has_wall = true;
            entry.wall_e2 = wall.e2;
            entry.wall_einf = wall.einf;
        }
        report.entries.push_back(entry);
    }

    const std::string report_path = (out_dir / "report.csv").string();
    std::ofstream file(report_path);
    if (!file) throw std::runtime_error("cannot write file: " + report_path);
    file << "model,e2,einf,wall_e2,wall_einf\n";
    for (const ComparisonEntry& e : report.entries) {
        file << e.model << ',' << format_value(e.e2) << ',' << format_value(e.einf);
        file << ',' << (e.has_wall ? format_value(e.wall_e2) : "");
        file << ',' << (e.has_wall ? format_value(e.wall_einf) : "");
        file << '\n';
    }
    return report;
}

}  // namespace pipeflow
