#include "pipeflow/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pipeflow {

double bessel_i1(double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_i1 needs x >= 0");
    if (x == 0.0) return 0.0;
    const double half = 0.5 * x;
    double term = half;  // (x/2)^(2n+1) / (n! (n+1)!) at n = 0
    double sum = term;
    for (int n = 0; n < 10000; ++n) {
        term *= half * half / ((n + 1.0) * (n + 2.0));
        sum += term;
        if (term < 1e-16 * sum) return sum;
    }
    throw std::runtime_error("bessel_i1 series did not converge");
}

double bessel_series_s(double y) {
    if (!(y >= 0.0)) throw std::invalid_argument("series needs y >= 0");
    double term = 1.0;  // y^n / ((n+1)! n!) at n = 0
    double sum = term;
    for (int n = 0; n < 10000; ++n) {
        term *= y / ((n + 2.0) * (n + 1.0));
        sum += term;
        if (term < 1e-16 * sum) return sum;
    }
    throw std::runtime_error("series did not converge");
}

namespace {

void check_kernel_args(double z, double h1, double h2, double v) {
    if (!(z >= 0.0)) throw std::invalid_argument("position must be non-negative");
    if (!(h1 >= 0.0) || !(h2 > 0.0))
        throw std::invalid_argument("h parameters out of range");
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
}

}  // namespace

double impulse_dirac_weight(double z, double h1, double v) {
    if (!(z >= 0.0) || !(h1 >= 0.0) || !(v > 0.0))
        throw std::invalid_argument("impulse weight arguments out of range");
    return std::exp(-h1 * z / v);
}

double impulse_response(double z, double t, double h1, double h2, double v) {
    check_kernel_args(z, h1, h2, v);
    if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");
    const double a = h1 * h2 * z / v;
    if (a == 0.0) return 0.0;
    return std::exp(-h1 * z / v - h2 * t) * a * bessel_series_s(a * t);
}

double ImpulseKernel::mass() const {
    double integral = 0.0;
    for (std::size_t k = 1; k < g.size(); ++k)
        integral += 0.5 * (g[k] + g[k - 1]) * dt;
    return dirac_weight + integral;
}

ImpulseKernel build_kernel(double z, double h1, double h2, double v,
                           double dt_hint) {
    check_kernel_args(z, h1, h2, v);
    if (!(dt_hint > 0.0)) throw std::invalid_argument("dt must be positive");

    ImpulseKernel kernel;
    kernel.z = z;
    kernel.v = v;
    kernel.h1 = h1;
    kernel.h2 = h2;
    kernel.dirac_weight = impulse_dirac_weight(z, h1, v);
    kernel.dt = std::min(dt_hint, 0.1 / h2);

    // Grow the sampled tail block by block until a whole block carries less
    // than 1e-10 of mass; the tail decays like exp(-h2 t + 2 sqrt(a t)), so
    // this always terminates, but guard against runaway growth anyway.
    const std::size_t block =
        std::max<std::size_t>(64, static_cast<std::size_t>(
                                      std::ceil(20.0 / (h2 * kernel.dt))));
    const std::size_t cap = 20000000;
    kernel.g.push_back(impulse_response(z, 0.0, h1, h2, v));
    while (true) {
        double block_mass = 0.0;
        for (std::size_t j = 0; j < block; ++j) {
            const double t = kernel.g.size() * kernel.dt;
            const double value = impulse_response(z, t, h1, h2, v);
            block_mass += 0.5 * (value + kernel.g.back()) * kernel.dt;
            kernel.g.push_back(value);
        }
        if (block_mass < 1e-10) break;
        if (kernel.g.size() > cap)
            throw std::runtime_error("impulse-response tail does not decay");
    }
    return kernel;
}

std::vector<double> convolve_constant_flow(const PipeParameters& params,
                                           const Signal& inlet, double v,
                                           double z,
                                           const std::vector<double>& t_grid,
                                           double dt_hint) {
    if (params.coeff.h3 != 0.0)
        throw std::invalid_argument(
            "analytic convolution requires an insulated pipe (h3 = 0)");
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
    if (!(z >= 0.0) || !(z <= params.geometry.length))
        throw std::invalid_argument("position must lie within the pipe");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1]))
            throw std::invalid_argument("output grid must be increasing");

    const DerivedCoefficients c = params.at_velocity(v);
    const double dt = dt_hint > 0.0 ? dt_hint : 0.1 / c.h2;
    const ImpulseKernel kernel = build_kernel(z, c.h1, c.h2, v, dt);
    const double delay = z / v;

    // Trapezoid weights collapse into one product per kernel sample.
    std::vector<double> weighted(kernel.g.size());
    for (std::size_t k = 0; k < kernel.g.size(); ++k) {
        const bool edge = (k == 0 || k + 1 == kernel.g.size());
        weighted[k] = kernel.g[k] * kernel.dt * (edge ? 0.5 : 1.0);
    }

    std::vector<double> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const double base = t - delay;
        double value = kernel.dirac_weight * inlet(base);
        for (std::size_t k = 0; k < weighted.size(); ++k)
            value += weighted[k] * inlet(base - k * kernel.dt);
        out.push_back(value);
    }
    return out;
}

std::vector<double> convolve_constant_flow(const PipeParameters& params,
                                           const Signal& inlet,
                                           const Signal& velocity, double z,
                                           const std::vector<double>& t_grid,
                                           double dt_hint) {
    if (!velocity.is_constant())
        throw std::invalid_argument(
            "analytic convolution requires a constant velocity");
    return convolve_constant_flow(params, inlet, velocity.front_value(), z,
                                  t_grid, dt_hint);
}

double steady_outlet(const PipeParameters& params, double v, double tin,
                     double tamb) {
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
    const DerivedCoefficients c = params.at_velocity(v);
    const double decay = std::exp(-c.h1 * c.h3 * params.geometry.length /
                                  ((c.h2 + c.h3) * v));
    return tamb + (tin - tamb) * decay;
}

double steady_outlet_simplified(const PipeParameters& params, double v,
                                double tin, double tamb) {
    if (!(v > 0.0)) throw std::invalid_argument("velocity must be positive");
    const DerivedCoefficients c = params.at_velocity(v);
    return tamb + (tin - tamb) * std::exp(-c.h4 * params.geometry.length / v);
}

}  // namespace pipeflow
