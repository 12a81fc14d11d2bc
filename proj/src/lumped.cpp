#include "pipeflow/lumped.hpp"

#include "pipeflow/delay.hpp"

#include <cmath>
#include <stdexcept>

namespace pipeflow {

namespace {

enum class InletKind { instantaneous, delayed };

int step_count(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
    return static_cast<int>(std::llround(std::ceil(t_end / dt - 1e-9)));
}

double observed_position(const PipeParameters& params,
                         const LumpedOptions& options) {
    const double l = params.geometry.length;
    const double pos = options.position.value_or(l);
    if (!(pos > 0.0) || !(pos <= l * (1.0 + 1e-12)))
        throw std::invalid_argument("observed position must lie in (0, length]");
    return pos;
}

ModelOutput integrate(const PipeParameters& params,
                      const BoundarySignals& signals,
                      const SimulationSettings& settings,
                      const LumpedOptions& options, InletKind inlet_kind,
                      double epsilon) {
    const double pos = observed_position(params, options);
    const int steps = step_count(settings.t_end, settings.dt);
    const double dt = settings.dt;

    std::optional<FlowIntegrator> flow;
    if (inlet_kind == InletKind::delayed) flow.emplace(signals.velocity);
    else if (!signals.velocity.strictly_positive())
        throw std::invalid_argument("velocity must be strictly positive");

    double tm = settings.initial.value_or(signals.inlet.front_value());

    ModelOutput out;
    out.t.reserve(steps + 1);
    out.tm_out.reserve(steps + 1);
    if (settings.record_delayed_inlet) out.tin_delayed.reserve(steps + 1);

    for (int k = 0; k <= steps; ++k) {
        const double t = k * dt;
        double tin_eff = 0.0;
        if (inlet_kind == InletKind::delayed) {
            tin_eff = signals.inlet(t - flow->solve_delay(t, pos));
        } else {
            tin_eff = signals.inlet(t);
        }
        out.t.push_back(t);
        out.tm_out.push_back(tm);
        if (settings.record_delayed_inlet) out.tin_delayed.push_back(tin_eff);
        if (k == steps) break;

        const double v = signals.velocity(t);
        const double h4 = params.at_velocity(v).h4;
        const double rate = v / pos * (tin_eff - tm) +
                            h4 * (signals.ambient(t) - tm);
        tm += dt * rate / epsilon;
    }
    return out;
}

}  // namespace

ModelOutput simulate_ode(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings,
                         const LumpedOptions& options) {
    return integrate(params, signals, settings, options,
                     InletKind::instantaneous, 1.0);
}

ModelOutput simulate_dde(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings,
                         const LumpedOptions& options) {
    return integrate(params, signals, settings, options, InletKind::delayed,
                     1.0);
}

ModelOutput simulate_adapted_dde(const PipeParameters& params,
                                 const BoundarySignals& signals,
                                 const SimulationSettings& settings,
                                 const LumpedOptions& options) {
    return integrate(params, signals, settings, options, InletKind::delayed,
                     params.heat.epsilon);
}

double steady_lumped(const PipeParameters& params, double v, double tin,
                     double tamb, std::optional<double> position) {
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
    LumpedOptions options;
    options.position = position;
    const double pos = observed_position(params, options);
    const double a = v / pos;
    const double h4 = params.at_velocity(v).h4;
    return (a * tin + h4 * tamb) / (a + h4);
}

}  // namespace pipeflow
