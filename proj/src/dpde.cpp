#include "pipeflow/dpde.hpp"

#include "pipeflow/delay.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pipeflow {

namespace {

int step_count(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
    return static_cast<int>(std::llround(std::ceil(t_end / dt - 1e-9)));
}

int snap_probe(double z, double dz, int n) {
    if (!(z >= 0.0) || !(z <= dz * n * (1.0 + 1e-12)))
        throw std::invalid_argument("probe position outside the pipe");
    const int i = static_cast<int>(std::llround(z / dz));
    return std::min(std::max(i, 0), n);
}

}  // namespace

DpdeConstants dpde_constants(double h1, double h2, double h3, double v,
                             double dz) {
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
    if (!(dz > 0.0)) throw std::invalid_argument("interval length must be positive");
    if (!(h1 > 0.0) || !(h2 > 0.0) || !(h3 >= 0.0))
        throw std::invalid_argument("h parameters out of range");
    const double denom = v + h1 * dz;
    return {(h2 + h3) * v / denom, h1 * h3 * dz / denom, v / denom};
}

std::vector<double> reconstruct_wall(const std::vector<double>& tm_delayed,
                                     const std::vector<double>& v_delayed,
                                     double h1, double dz) {
    if (tm_delayed.size() < 2)
        throw std::invalid_argument("wall reconstruction needs at least two nodes");
    if (v_delayed.size() != tm_delayed.size())
        throw std::invalid_argument("velocity field size mismatch");
    if (!(h1 > 0.0) || !(dz > 0.0))
        throw std::invalid_argument("h1 and dz must be positive");
    std::vector<double> tw(tm_delayed.size());
    for (std::size_t i = 1; i < tm_delayed.size(); ++i) {
        const double grad = (tm_delayed[i] - tm_delayed[i - 1]) / dz;
        tw[i] = v_delayed[i] / h1 * grad + tm_delayed[i];
    }
    const double grad0 = (tm_delayed[1] - tm_delayed[0]) / dz;
    tw[0] = v_delayed[0] / h1 * grad0 + tm_delayed[0];
    return tw;
}

double steady_wall(double h2, double h3, double tm, double tamb) {
    if (!(h2 > 0.0) || !(h3 >= 0.0))
        throw std::invalid_argument("h parameters out of range");
    return (h2 * tm + h3 * tamb) / (h2 + h3);
}

ModelOutput simulate_dpde(const PipeParameters& params,
                          const BoundarySignals& signals,
                          const SimulationSettings& settings) {
    if (settings.n < 1)
        throw std::invalid_argument("need at least one spatial interval");
    const int n = settings.n;
    const double l = params.geometry.length;
    const double dz = l / n;
    const double dt = settings.dt;
    const int steps = step_count(settings.t_end, dt);

    const FlowIntegrator flow(signals.velocity);

    // Characteristic times and transported velocities at every node for the
    // previous, current and next step; the centered difference of v_del over
    // t +- dt supplies the transport correction of the w dynamics.
    std::vector<double> z(n + 1), phi_now(n + 1), phi_next(n + 1);
    std::vector<double> vdel_prev(n + 1), vdel_now(n + 1), vdel_next(n + 1);
    for (int i = 0; i <= n; ++i) z[i] = i * dz;
    for (int i = 0; i <= n; ++i) {
        phi_now[i] = flow.characteristic_time(z[i], 0.0, l);
        vdel_now[i] = signals.velocity(phi_now[i]);
        vdel_prev[i] = signals.velocity(flow.characteristic_time(z[i], -dt, l));
    }

    const double fill = settings.initial.value_or(signals.inlet.front_value());
    std::vector<double> tm(n + 1, fill), w(n + 1, 0.0), wrate(n + 1, 0.0);
    {
        const DerivedCoefficients c = params.at_velocity(signals.velocity(0.0));
        for (int i = 1; i <= n; ++i) {
            const double k3 = vdel_now[i] / (vdel_now[i] + c.h1 * dz);
            w[i] = tm[i] - k3 * tm[i - 1];
        }
    }

    ModelOutput out;
    out.t.reserve(steps + 1);
    out.tm_out.reserve(steps + 1);
    out.tw_out.reserve(steps + 1);
    if (settings.record_delayed_inlet) out.tin_delayed.reserve(steps + 1);
    std::vector<std::size_t> probe_nodes;
    for (double zp : settings.probes) {
        probe_nodes.push_back(static_cast<std::size_t>(snap_probe(zp, dz, n)));
        out.probes.push_back({probe_nodes[probe_nodes.size() - 1] * dz, {}});
    }

    for (int k = 0; k <= steps; ++k) {
        const double t = k * dt;
        const DerivedCoefficients c = params.at_velocity(signals.velocity(t));

        out.t.push_back(t);
        out.tm_out.push_back(tm[n]);
        out.tw_out.push_back(vdel_now[n] / c.h1 * (tm[n] - tm[n - 1]) / dz +
                             tm[n]);
        if (settings.record_delayed_inlet) out.tin_delayed.push_back(tm[0]);
        for (std::size_t p = 0; p < probe_nodes.size(); ++p)
            out.probes[p].temperature.push_back(tm[probe_nodes[p]]);
        if (k == steps) break;

        const double tnext = t + dt;
        for (int i = 0; i <= n; ++i) {
            phi_next[i] = flow.characteristic_time(z[i], tnext, l);
            vdel_next[i] = signals.velocity(phi_next[i]);
        }

        const double v_now = signals.velocity(t);
        for (int i = 1; i <= n; ++i) {
            const double denom = vdel_now[i] + c.h1 * dz;
            const double k1 = (c.h2 + c.h3) * v_now / denom;
            const double k2 = c.h1 * c.h3 * dz * v_now / (vdel_now[i] * denom);
            const double vdot = (vdel_next[i] - vdel_prev[i]) / (2.0 * dt);
            const double tamb_del = signals.ambient(phi_now[i]);
            wrate[i] = k1 * (tm[i - 1] - tm[i]) + k2 * (tamb_del - tm[i]) -
                       vdot / denom * w[i];
        }
        for (int i = 1; i <= n; ++i) w[i] += dt * wrate[i];

        // Advance the boundary along its characteristic, then rebuild the
        // medium field from the transformed state at the new time.
        tm[0] = signals.inlet(phi_next[0]);
        const DerivedCoefficients cn = params.at_velocity(signals.velocity(tnext));
        for (int i = 1; i <= n; ++i) {
            const double k3 = vdel_next[i] / (vdel_next[i] + cn.h1 * dz);
            tm[i] = w[i] + k3 * tm[i - 1];
        }

        std::swap(vdel_prev, vdel_now);
        std::swap(vdel_now, vdel_next);
        std::swap(phi_now, phi_next);
    }
    return out;
}

ModelOutput simulate_dpde1(const PipeParameters& params,
                           const BoundarySignals& signals,
                           const SimulationSettings& settings) {
    SimulationSettings s = settings;
    s.n = 1;
    return simulate_dpde(params, signals, s);
}

}  // namespace pipeflow
