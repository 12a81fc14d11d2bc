#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <optional>
#include <vector>

namespace pipeflow {

// Modified Bessel function of the first kind, order one, for x >= 0,
// evaluated by its power series until the terms fall below 1e-16 of the
// partial sum.
double bessel_i1(double x);

// S(y) = sum_{n>=0} y^n / ((n+1)! n!) for y >= 0; equals I1(2 sqrt(y))/sqrt(y)
// and carries the impulse response without the square-root singularity.
double bessel_series_s(double y);

// Constant-flow impulse response of the medium temperature at position z for
// an insulated pipe (h3 = 0): a Dirac pulse of this weight at the transport
// delay z/v ...
double impulse_dirac_weight(double z, double h1, double v);

// ... followed by the continuous tail g(t) = exp(-h1 z/v - h2 t) a S(a t)
// with a = h1 h2 z / v, parameterized by the time t >= 0 after the delay.
double impulse_response(double z, double t, double h1, double h2, double v);

// Sampled continuous tail on a uniform grid, extended until the remaining
// mass is negligible. The total mass (dirac weight + integral of the tail)
// equals one exactly in the continuum; the trapezoid sum reproduces it to
// well below 1e-6.
struct ImpulseKernel {
    double z = 0.0, v = 0.0, h1 = 0.0, h2 = 0.0;
    double dirac_weight = 0.0;
    double dt = 0.0;          // sample spacing, min(dt_hint, 0.1/h2)
    std::vector<double> g;    // tail samples at k*dt

    double mass() const;      // dirac_weight + trapezoid integral of g
};

ImpulseKernel build_kernel(double z, double h1, double h2, double v,
                           double dt_hint);

// Convolution of the inlet signal with the impulse response: the exact
// constant-flow solution for an insulated pipe, used as an oracle for the
// transport models. Rejects parameters with ambient coupling (h3 != 0).
// dt_hint sets the kernel resolution (a simulation time step, typically);
// zero falls back to the 0.1/h2 default.
std::vector<double> convolve_constant_flow(const PipeParameters& params,
                                           const Signal& inlet, double v,
                                           double z,
                                           const std::vector<double>& t_grid,
                                           double dt_hint = 0.0);

// Same, taking the velocity as a signal that must be constant.
std::vector<double> convolve_constant_flow(const PipeParameters& params,
                                           const Signal& inlet,
                                           const Signal& velocity, double z,
                                           const std::vector<double>& t_grid,
                                           double dt_hint = 0.0);

// Closed-form constant-input fixed points.
double steady_outlet(const PipeParameters& params, double v, double tin,
                     double tamb);
double steady_outlet_simplified(const PipeParameters& params, double v,
                                double tin, double tamb);

}  // namespace pipeflow
