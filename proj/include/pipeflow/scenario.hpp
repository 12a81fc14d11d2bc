#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <string>
#include <vector>

namespace pipeflow {

// A complete simulation experiment read from a config file: pipe parameters,
// boundary signals, discretization, and the set of models to run.
struct Scenario {
    PipeParameters params;
    BoundarySignals signals;
    int n = 200;
    double dt = 0.0;  // 0 selects half the CFL limit of the reference grid
    double t_end = 0.0;
    std::vector<double> probes;
    std::string reference = "pde";
    std::vector<std::string> compare;
    std::string output_dir;  // empty selects $PIPEFLOW_OUT_DIR, then "."

    // Parses an INI-style config file. Sections: [parameters], [signals],
    // [simulation], [models], [output]. '#' starts a comment. Signal values
    // use inline specs, see parse_signal_spec().
    static Scenario load(const std::string& path);

    double resolved_dt() const;
    std::string resolved_output_dir() const;
};

// Inline signal specs:
//   const:<v>               constant value
//   step:<t>,<v0>,<v1>      v0 before t, v1 from t on
//   ramp:<t0>,<t1>,<v0>,<v1> linear between the two points, held outside
//   csv:<path>              columns "t" and "v"; relative to base_dir
Signal parse_signal_spec(const std::string& spec, const std::string& base_dir);

// Runs one model by name: pde, pde_simplified, dpde, dpde:<n>, dpde1, ode,
// dde, adapted_dde. Lumped models ignore `n` and `probes`.
ModelOutput run_model(const std::string& name, const PipeParameters& params,
                      const BoundarySignals& signals,
                      const SimulationSettings& settings);

// Medium and wall error metrics of one model against the reference run.
struct ComparisonEntry {
    std::string model;
    double e2 = 0.0;
    double einf = 0.0;
    bool has_wall = false;
    double wall_e2 = 0.0;
    double wall_einf = 0.0;
};

struct ComparisonReport {
    std::string reference;
    std::vector<ComparisonEntry> entries;
};

// Runs the reference and every comparison model, writes one CSV per model
// plus report.csv into the scenario's output directory, and returns the
// error table.
ComparisonReport run_scenario(const Scenario& scenario);

}  // namespace pipeflow
