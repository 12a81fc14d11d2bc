#pragma once

#include "pipeflow/signal.hpp"

#include <optional>
#include <vector>

namespace pipeflow {

// Boundary data shared by every model: flow velocity, inlet temperature and
// ambient temperature, each a time signal.
struct BoundarySignals {
    Signal velocity;
    Signal inlet;
    Signal ambient;
};

// Discretization and run-length settings. `probes` lists interior positions
// whose medium temperature is recorded; each snaps to the nearest grid node.
struct SimulationSettings {
    int n = 200;            // number of spatial intervals (n+1 nodes)
    double dt = 0.0;        // time step [s]
    double t_end = 0.0;     // final time [s]; samples at k*dt from 0
    std::vector<double> probes;
    std::optional<double> initial;  // uniform initial temperature; default:
                                    // first inlet sample
    bool record_delayed_inlet = false;
};

struct ProbeSeries {
    double position = 0.0;  // snapped node position [m]
    std::vector<double> temperature;
};

// Time series produced by a simulation. Columns that a model does not have
// stay empty (e.g. lumped models have no wall temperature).
struct ModelOutput {
    std::vector<double> t;
    std::vector<double> tm_out;        // medium temperature at the outlet
    std::vector<double> tw_out;        // wall temperature at the outlet
    std::vector<double> tin_delayed;   // delayed inlet seen by the model
    std::vector<ProbeSeries> probes;
};

}  // namespace pipeflow
