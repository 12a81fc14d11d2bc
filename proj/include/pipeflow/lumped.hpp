#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <optional>

namespace pipeflow {

// Lumped single-state models of the outlet temperature
//   ODE:          dT/dt = (v/L)(T_in(t) - T) + h4 (T_inf - T)
//   DDE:          dT/dt = (v/L)(T_in(t - tau(L, t)) - T) + h4 (T_inf - T)
//   adapted DDE:  eps dT/dt = same right-hand side as the DDE
// where L is the observed position (default: the pipe length; an interior
// position shortens the transport path, h4 is per length and unchanged).
// eps comes from the heat-transfer spec. The integrators sample with the
// same explicit Euler grid as the field models, so their outputs align.
struct LumpedOptions {
    std::optional<double> position;  // L in (0, length]; default length
};

ModelOutput simulate_ode(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings,
                         const LumpedOptions& options = {});

ModelOutput simulate_dde(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings,
                         const LumpedOptions& options = {});

ModelOutput simulate_adapted_dde(const PipeParameters& params,
                                 const BoundarySignals& signals,
                                 const SimulationSettings& settings,
                                 const LumpedOptions& options = {});

// Closed-form fixed point of the lumped dynamics at constant inputs.
double steady_lumped(const PipeParameters& params, double v, double tin,
                     double tamb, std::optional<double> position = {});

}  // namespace pipeflow
