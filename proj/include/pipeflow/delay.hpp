#pragma once

#include "pipeflow/signal.hpp"

#include <vector>

namespace pipeflow {

// Transport-delay machinery on a velocity signal. The antiderivative of a
// piecewise-linear signal is piecewise quadratic, so cumulative flows and the
// implicit delay equation integral_{t-tau}^{t} v = distance are evaluated and
// inverted exactly, up to rounding.
class FlowIntegrator {
public:
    // The velocity must be strictly positive at every sample; linearity keeps
    // it positive in between and constant-hold keeps it positive outside.
    explicit FlowIntegrator(Signal velocity);

    const Signal& velocity() const { return v_; }

    // integral of v over [t0, t1]; requires t1 >= t0.
    double cumulative(double t0, double t1) const;

    // Transport delay tau(t, distance) >= 0 solving the implicit equation.
    double solve_delay(double t, double distance) const;

    // Time phi(z, t) at which the parcel arriving at z = pipe_length at time
    // t passed position z; phi(pipe_length, t) = t.
    double characteristic_time(double z, double t, double pipe_length) const;

    // v(phi(z, t)): the velocity the parcel had when passing z.
    double delayed_velocity(double z, double t, double pipe_length) const;

private:
    Signal v_;
    std::vector<double> prefix_;  // antiderivative at the sample times

    double antiderivative(double t) const;
    double invert(double target) const;
};

double cumulative_flow(const Signal& velocity, double t0, double t1);
double solve_delay(const Signal& velocity, double t, double distance);

}  // namespace pipeflow
