#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pipeflow {

// Sampled time series with piecewise-linear interpolation between samples and
// constant-hold extrapolation outside them. Sample times are strictly
// increasing. A step change is represented by two samples one ulp apart.
class Signal {
public:
    Signal() = default;

    static Signal constant(double value);
    static Signal ramp(double t0, double t1, double v0, double v1);
    static Signal step(double t, double before, double after);
    static Signal from_samples(std::vector<double> times, std::vector<double> values);

    double operator()(double t) const;

    std::size_t size() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }
    double front_time() const { return times_.front(); }
    double back_time() const { return times_.back(); }
    double front_value() const { return values_.front(); }
    double back_value() const { return values_.back(); }

    double min_value() const;  // attained at a sample: interpolation is linear
    double max_value() const;

    bool strictly_positive() const { return min_value() > 0.0; }
    bool is_constant() const { return min_value() == max_value(); }

    // Affine image a*s + b, sampled at the same times.
    Signal affine(double a, double b) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

}  // namespace pipeflow
