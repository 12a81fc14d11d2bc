#include "pipeflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pipeflow {

namespace {

ErrorPair accumulate(const std::vector<double>& t_ref,
                     const std::vector<double>& ref,
                     const std::vector<double>& t_cand,
                     const std::vector<double>& cand) {
    if (t_ref.size() != ref.size() || t_cand.size() != cand.size())
        throw std::invalid_argument("trajectory times and values differ in length");
    if (t_ref.empty() || t_cand.empty())
        throw std::invalid_argument("trajectories must be non-empty");

    const Signal resampler = Signal::from_samples(t_cand, cand);
    const double lo = std::max(t_ref.front(), t_cand.front());
    const double hi = std::min(t_ref.back(), t_cand.back());
    if (!(lo <= hi))
        throw std::invalid_argument("trajectories do not overlap in time");

    double sumsq = 0.0, dmax = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < t_ref.size(); ++k) {
        if (t_ref[k] < lo || t_ref[k] > hi) continue;
        const double d = ref[k] - resampler(t_ref[k]);
        sumsq += d * d;
        dmax = std::max(dmax, std::abs(d));
        ++count;
    }
    if (count == 0)
        throw std::invalid_argument("no reference samples in the overlap window");
    return {std::sqrt(sumsq / count), dmax};
}

}  // namespace

double rms_error(const std::vector<double>& t_ref, const std::vector<double>& ref,
                 const std::vector<double>& t_cand,
                 const std::vector<double>& cand) {
    return accumulate(t_ref, ref, t_cand, cand).e2;
}

double max_error(const std::vector<double>& t_ref, const std::vector<double>& ref,
                 const std::vector<double>& t_cand,
                 const std::vector<double>& cand) {
    return accumulate(t_ref, ref, t_cand, cand).einf;
}

ErrorPair error_pair(const std::vector<double>& t_ref,
                     const std::vector<double>& ref,
                     const std::vector<double>& t_cand,
                     const std::vector<double>& cand) {
    return accumulate(t_ref, ref, t_cand, cand);
}

}  // namespace pipeflow
