#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <vector>

namespace pipeflow {

// Upwind semi-discretization of the coupled medium/wall transport system
//   v dT_m/dz + dT_m/dt = h1 (T_w - T_m)
//   dT_w/dt = h2 (T_m - T_w) - h3 (T_w - T_inf)
// on n intervals (n+1 nodes, dz = l/n). Node 0 of the medium is the inlet
// boundary and carries no rate.
class PdeSemiDiscretization {
public:
    PdeSemiDiscretization(const PipeParameters& params, BoundarySignals signals,
                          int n);

    int intervals() const { return n_; }
    double dz() const { return dz_; }

    // Fills dtm[1..n] and dtw[0..n]; dtm[0] is set to zero.
    void rates(double t, const std::vector<double>& tm,
               const std::vector<double>& tw, std::vector<double>& dtm,
               std::vector<double>& dtw) const;

private:
    PipeParameters params_;
    BoundarySignals signals_;
    int n_;
    double dz_;
};

PdeSemiDiscretization semidiscretize(const PipeParameters& params,
                                     const BoundarySignals& signals, int n);

// Explicit Euler integration of the semi-discretization. Requires the CFL
// condition max(v)*dt/dz <= 1; violations are rejected up front.
ModelOutput simulate_pde(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings);

// Single advection equation with the lumped ambient loss h4 in place of the
// wall state: v dT/dz + dT/dt = -h4 (T - T_inf). No wall output.
ModelOutput simulate_simplified_pde(const PipeParameters& params,
                                    const BoundarySignals& signals,
                                    const SimulationSettings& settings);

}  // namespace pipeflow
