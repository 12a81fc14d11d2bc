#include "pipeflow/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pipeflow {

Signal Signal::constant(double value) {
    return from_samples({0.0}, {value});
}

Signal Signal::ramp(double t0, double t1, double v0, double v1) {
    if (!(t1 > t0)) throw std::invalid_argument("ramp needs t1 > t0");
    return from_samples({t0, t1}, {v0, v1});
}

Signal Signal::step(double t, double before, double after) {
    const double up = std::nextafter(t, std::numeric_limits<double>::infinity());
    return from_samples({t, up}, {before, after});
}

Signal Signal::from_samples(std::vector<double> times, std::vector<double> values) {
    if (times.empty()) throw std::invalid_argument("signal needs at least one sample");
    if (times.size() != values.size())
        throw std::invalid_argument("signal times and values differ in length");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("signal samples must be finite");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("signal times must be strictly increasing");
    }
    Signal s;
    s.times_ = std::move(times);
    s.values_ = std::move(values);
    return s;
}

double Signal::operator()(double t) const {
    if (t <= times_.front()) return values_.front();
    if (t >= times_.back()) return values_.back();
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times_.begin());
    const double w = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
    return values_[i - 1] + w * (values_[i] - values_[i - 1]);
}

double Signal::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double Signal::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

Signal Signal::affine(double a, double b) const {
    Signal s = *this;
    for (double& v : s.values_) v = a * v + b;
    return s;
}

}  // namespace pipeflow
