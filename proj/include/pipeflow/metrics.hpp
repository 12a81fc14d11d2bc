#pragma once

#include "pipeflow/signal.hpp"

#include <vector>

namespace pipeflow {

// Deviation of a candidate trajectory from a reference trajectory. The
// candidate is resampled linearly onto the reference sample times restricted
// to the overlap of both time ranges; both metrics run over those samples.
// An empty overlap is an error.
double rms_error(const std::vector<double>& t_ref,
                 const std::vector<double>& ref,
                 const std::vector<double>& t_cand,
                 const std::vector<double>& cand);

double max_error(const std::vector<double>& t_ref,
                 const std::vector<double>& ref,
                 const std::vector<double>& t_cand,
                 const std::vector<double>& cand);

struct ErrorPair {
    double e2 = 0.0;    // root mean square deviation
    double einf = 0.0;  // maximum absolute deviation
};

ErrorPair error_pair(const std::vector<double>& t_ref,
                     const std::vector<double>& ref,
                     const std::vector<double>& t_cand,
                     const std::vector<double>& cand);

}  // namespace pipeflow
