#include "pipeflow/delay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pipeflow {

namespace {

// Positive root x of v0*x + 0.5*m*x^2 = c with c >= 0, v0 > 0 and
// v0 + m*x > 0 over the bracket. Written to stay stable as m -> 0.
double invert_quadratic(double v0, double m, double c) {
    if (c == 0.0) return 0.0;
    const double disc = v0 * v0 + 2.0 * m * c;
    const double root = std::sqrt(std::max(disc, 0.0));
    return 2.0 * c / (v0 + root);
}

}  // namespace

FlowIntegrator::FlowIntegrator(Signal velocity) : v_(std::move(velocity)) {
    if (!v_.strictly_positive())
        throw std::invalid_argument("velocity must be strictly positive");
    const auto& t = v_.times();
    const auto& v = v_.values();
    prefix_.resize(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i)
        prefix_[i] = prefix_[i - 1] +
                     0.5 * (v[i] + v[i - 1]) * (t[i] - t[i - 1]);
}

double FlowIntegrator::antiderivative(double t) const {
    const auto& ts = v_.times();
    const auto& vs = v_.values();
    if (t <= ts.front()) return vs.front() * (t - ts.front());
    if (t >= ts.back()) return prefix_.back() + vs.back() * (t - ts.back());
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - ts.begin());
    const double dt = t - ts[i - 1];
    const double m = (vs[i] - vs[i - 1]) / (ts[i] - ts[i - 1]);
    return prefix_[i - 1] + vs[i - 1] * dt + 0.5 * m * dt * dt;
}

double FlowIntegrator::cumulative(double t0, double t1) const {
    if (!(t1 >= t0)) throw std::invalid_argument("cumulative flow needs t1 >= t0");
    return antiderivative(t1) - antiderivative(t0);
}

double FlowIntegrator::invert(double target) const {
    const auto& ts = v_.times();
    const auto& vs = v_.values();
    if (target <= 0.0) return ts.front() + target / vs.front();
    if (target >= prefix_.back())
        return ts.back() + (target - prefix_.back()) / vs.back();
    // Segment with prefix_[i-1] <= target < prefix_[i].
    const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), target);
    std::size_t i = static_cast<std::size_t>(it - prefix_.begin());
    i = std::min(i, prefix_.size() - 1);
    const double c = target - prefix_[i - 1];
    const double width = ts[i] - ts[i - 1];
    const double m = (vs[i] - vs[i - 1]) / width;
    const double x = invert_quadratic(vs[i - 1], m, c);
    return ts[i - 1] + std::min(x, width);
}

double FlowIntegrator::solve_delay(double t, double distance) const {
    if (!(distance >= 0.0))
        throw std::invalid_argument("delay distance must be non-negative");
    if (distance == 0.0) return 0.0;
    const double s = invert(antiderivative(t) - distance);
    return t - s;
}

double FlowIntegrator::characteristic_time(double z, double t,
                                           double pipe_length) const {
    if (!(pipe_length > 0.0))
        throw std::invalid_argument("pipe length must be positive");
    if (!(z >= 0.0) || !(z <= pipe_length))
        throw std::invalid_argument("position must lie within the pipe");
    return t - solve_delay(t, pipe_length - z);
}

double FlowIntegrator::delayed_velocity(double z, double t,
                                        double pipe_length) const {
    return v_(characteristic_time(z, t, pipe_length));
}

double cumulative_flow(const Signal& velocity, double t0, double t1) {
    return FlowIntegrator(velocity).cumulative(t0, t1);
}

double solve_delay(const Signal& velocity, double t, double distance) {
    return FlowIntegrator(velocity).solve_delay(t, distance);
}

}  // namespace pipeflow
