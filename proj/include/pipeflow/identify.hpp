#pragma once

#include "pipeflow/geometry.hpp"
#include "pipeflow/model_output.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pipeflow {

// Derivative-free box-constrained minimization (Nelder-Mead with candidate
// projection onto the box). Deterministic: no randomness enters the search.
struct SearchResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

SearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& x0,
                         const std::vector<double>& lower,
                         const std::vector<double>& upper,
                         int max_iterations = 500, double tolerance = 1e-6);

// Measured time series of one experiment. Tout is the medium temperature at
// the outlet; wall and probe columns are optional (empty when absent).
struct MeasurementSet {
    std::vector<double> t;
    std::vector<double> tin;
    std::vector<double> tout;
    std::vector<double> v;
    std::vector<double> tamb;
    std::vector<double> tw_out;    // optional
    std::vector<double> tm_probe;  // optional

    // Columns: t,Tin,Tout,Tw_out,Tm_probe,v,Tamb; blank cells allowed in the
    // optional columns only.
    static MeasurementSet from_csv(const std::string& path);

    void validate() const;
    Signal inlet() const;
    Signal velocity() const;
    Signal ambient() const;
    BoundarySignals signals() const;
};

enum class FitModel { pde, dpde, adapted_dde };

struct FitOptions {
    FitModel model = FitModel::pde;
    int dpde_n = 1;         // intervals when model == dpde
    int n = 100;            // grid of the forward simulation (pde/dpde)
    double dt = 0.0;        // 0: derived from the CFL target 0.5
    bool fit_wall = false;  // include the wall residual (needs Tw_out data)
    std::vector<double> lower;  // bounds in the model's parameter order
    std::vector<double> upper;
    std::vector<double> guess;
    int max_iterations = 500;
    double tolerance = 1e-6;
};

// For pde/dpde the parameters are (alpha_mw, alpha_wa); for the adapted
// delay model the single parameter is epsilon (alpha_ma derives from the
// heat-transfer spec as usual).
struct FitResult {
    double alpha_mw = 0.0;
    double alpha_wa = 0.0;
    double epsilon = 0.0;
    double residual = 0.0;  // root mean square over all fitted channels
    int iterations = 0;
    bool converged = false;
};

FitResult identify(const MeasurementSet& data, const PipeGeometry& geom,
                   const MaterialProperties& mat, const HeatTransferSpec& ht,
                   const FitOptions& options);

}  // namespace pipeflow
