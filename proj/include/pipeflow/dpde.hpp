#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <vector>

namespace pipeflow {

// Constants of one spatial interval of the delayed-field filter at constant
// flow:
//   k1 = (h2+h3) v / (v + h1 dz)
//   k2 = h1 h3 dz / (v + h1 dz)
//   k3 = v / (v + h1 dz)
struct DpdeConstants {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

DpdeConstants dpde_constants(double h1, double h2, double h3, double v,
                             double dz);

// Serial decomposition of the pipe: the inlet signal is transported by the
// exact variable delay, then filtered by the semi-discretized first-order
// system on the delayed field. The integrator state per node is the
// feedthrough-free combination w_i = T_i - k3_i T_{i-1}, so no input
// derivative is ever formed. tw_out is reconstructed from the delayed medium
// field; tin_delayed records the transported inlet when requested.
ModelOutput simulate_dpde(const PipeParameters& params,
                          const BoundarySignals& signals,
                          const SimulationSettings& settings);

// Single-interval variant (n = 1): the same integrator on one interval,
// stated separately because it is the model intended for control design.
// Its trajectory is identical to simulate_dpde with settings.n = 1.
ModelOutput simulate_dpde1(const PipeParameters& params,
                           const BoundarySignals& signals,
                           const SimulationSettings& settings);

// Wall temperature from a delayed medium field:
//   T_w = (v_del/h1) dT/dz + T
// with backward differences; the first node reuses the difference of its
// right neighbor since it has no upstream node. Needs at least two nodes.
std::vector<double> reconstruct_wall(const std::vector<double>& tm_delayed,
                                     const std::vector<double>& v_delayed,
                                     double h1, double dz);

// Wall equilibrium for a frozen medium temperature.
double steady_wall(double h2, double h3, double tm, double tamb);

}  // namespace pipeflow
