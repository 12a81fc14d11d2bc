#include "pipeflow/pde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pipeflow {

namespace {

int step_count(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
    return static_cast<int>(std::llround(std::ceil(t_end / dt - 1e-9)));
}

void check_cfl(const Signal& velocity, double dt, double dz) {
    const double ratio = velocity.max_value() * dt / dz;
    if (ratio > 1.0 + 1e-12) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "CFL condition violated: max(v)*dt/dz = %.6g > 1", ratio);
        throw std::invalid_argument(msg);
    }
}

int snap_probe(double z, double dz, int n) {
    if (!(z >= 0.0) || !(z <= dz * n * (1.0 + 1e-12)))
        throw std::invalid_argument("probe position outside the pipe");
    const int i = static_cast<int>(std::llround(z / dz));
    return std::clamp(i, 0, n);
}

void validate_settings(const SimulationSettings& s) {
    if (s.n < 1) throw std::invalid_argument("need at least one spatial interval");
    if (!(s.dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(s.t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
}

}  // namespace

PdeSemiDiscretization::PdeSemiDiscretization(const PipeParameters& params,
                                             BoundarySignals signals, int n)
    : params_(params), signals_(std::move(signals)), n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one spatial interval");
    dz_ = params.geometry.length / n;
}

void PdeSemiDiscretization::rates(double t, const std::vector<double>& tm,
                                  const std::vector<double>& tw,
                                  std::vector<double>& dtm,
                                  std::vector<double>& dtw) const {
    const std::size_t nodes = static_cast<std::size_t>(n_) + 1;
    if (tm.size() != nodes || tw.size() != nodes)
        throw std::invalid_argument("state size does not match the grid");
    dtm.resize(nodes);
    dtw.resize(nodes);
    const double v = signals_.velocity(t);
    const double tamb = signals_.ambient(t);
    const DerivedCoefficients c = params_.at_velocity(v);
    dtm[0] = 0.0;
    for (std::size_t i = 1; i < nodes; ++i)
        dtm[i] = -v * (tm[i] - tm[i - 1]) / dz_ + c.h1 * (tw[i] - tm[i]);
    for (std::size_t i = 0; i < nodes; ++i)
        dtw[i] = c.h2 * (tm[i] - tw[i]) - c.h3 * (tw[i] - tamb);
}

PdeSemiDiscretization semidiscretize(const PipeParameters& params,
                                     const BoundarySignals& signals, int n) {
    return PdeSemiDiscretization(params, signals, n);
}

ModelOutput simulate_pde(const PipeParameters& params,
                         const BoundarySignals& signals,
                         const SimulationSettings& settings) {
    validate_settings(settings);
    const int n = settings.n;
    const double dz = params.geometry.length / n;
    check_cfl(signals.velocity, settings.dt, dz);
    const PdeSemiDiscretization disc(params, signals, n);

    const int steps = step_count(settings.t_end, settings.dt);
    const std::size_t nodes = static_cast<std::size_t>(n) + 1;
    const double fill = settings.initial.value_or(signals.inlet.front_value());
    std::vector<double> tm(nodes, fill), tw(nodes, fill);
    std::vector<double> dtm(nodes), dtw(nodes);

    ModelOutput out;
    out.t.reserve(steps + 1);
    out.tm_out.reserve(steps + 1);
    out.tw_out.reserve(steps + 1);
    std::vector<std::size_t> probe_nodes;
    for (double z : settings.probes) {
        probe_nodes.push_back(static_cast<std::size_t>(snap_probe(z, dz, n)));
        out.probes.push_back({probe_nodes.back() * dz, {}});
    }

    for (int k = 0; k <= steps; ++k) {
        const double t = k * settings.dt;
        out.t.push_back(t);
        out.tm_out.push_back(tm[nodes - 1]);
        out.tw_out.push_back(tw[nodes - 1]);
        for (std::size_t p = 0; p < probe_nodes.size(); ++p)
            out.probes[p].temperature.push_back(tm[probe_nodes[p]]);
        if (k == steps) break;
        disc.rates(t, tm, tw, dtm, dtw);
        for (std::size_t i = 1; i < nodes; ++i) tm[i] += settings.dt * dtm[i];
        for (std::size_t i = 0; i < nodes; ++i) tw[i] += settings.dt * dtw[i];
        tm[0] = signals.inlet(t + settings.dt);
    }
    return out;
}

ModelOutput simulate_simplified_pde(const PipeParameters& params,
                                    const BoundarySignals& signals,
                                    const SimulationSettings& settings) {
    validate_settings(settings);
    const int n = settings.n;
    const double dz = params.geometry.length / n;
    check_cfl(signals.velocity, settings.dt, dz);

    const int steps = step_count(settings.t_end, settings.dt);
    const std::size_t nodes = static_cast<std::size_t>(n) + 1;
    const double fill = settings.initial.value_or(signals.inlet.front_value());
    std::vector<double> tm(nodes, fill), next(nodes);

    ModelOutput out;
    out.t.reserve(steps + 1);
    out.tm_out.reserve(steps + 1);
    std::vector<std::size_t> probe_nodes;
    for (double z : settings.probes) {
        probe_nodes.push_back(static_cast<std::size_t>(snap_probe(z, dz, n)));
        out.probes.push_back({probe_nodes.back() * dz, {}});
    }

    for (int k = 0; k <= steps; ++k) {
        const double t = k * settings.dt;
        out.t.push_back(t);
        out.tm_out.push_back(tm[nodes - 1]);
        for (std::size_t p = 0; p < probe_nodes.size(); ++p)
            out.probes[p].temperature.push_back(tm[probe_nodes[p]]);
        if (k == steps) break;
        const double v = signals.velocity(t);
        const double tamb = signals.ambient(t);
        const double h4 = params.at_velocity(v).h4;
        next[0] = 0.0;
        for (std::size_t i = 1; i < nodes; ++i)
            next[i] = tm[i] + settings.dt * (-v * (tm[i] - tm[i - 1]) / dz -
                                             h4 * (tm[i] - tamb));
        std::copy(next.begin() + 1, next.end(), tm.begin() + 1);
        tm[0] = signals.inlet(t + settings.dt);
    }
    return out;
}

}  // namespace pipeflow
