#include "pipeflow/identify.hpp"

#include "pipeflow/csv.hpp"
#include "pipeflow/dpde.hpp"
#include "pipeflow/lumped.hpp"
#include "pipeflow/metrics.hpp"
#include "pipeflow/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pipeflow {

namespace {

std::vector<double> clip(std::vector<double> x, const std::vector<double>& lo,
                         const std::vector<double>& hi) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
}

}  // namespace

SearchResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& x0,
                         const std::vector<double>& lower,
                         const std::vector<double>& upper,
                         int max_iterations, double tolerance) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw std::invalid_argument("empty start point");
    if (lower.size() != dim || upper.size() != dim)
        throw std::invalid_argument("bounds do not match the dimension");
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("lower bound must be below upper bound");
        if (x0[i] < lower[i] || x0[i] > upper[i])
            throw std::invalid_argument("start point outside the bounds");
    }

    // Initial simplex: the start point plus a 5% (or box-scaled) step per axis.
    std::vector<std::vector<double>> xs;
    xs.push_back(clip(x0, lower, upper));
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> p = x0;
        const double step = std::max(0.05 * std::abs(x0[i]),
                                     0.01 * (upper[i] - lower[i]));
        p[i] = std::clamp(p[i] + step, lower[i], upper[i]);
        if (p[i] == x0[i]) p[i] = std::clamp(x0[i] - step, lower[i], upper[i]);
        xs.push_back(std::move(p));
    }
    std::vector<double> fs(xs.size());
    std::transform(xs.begin(), xs.end(), fs.begin(),
                   [&](const std::vector<double>& p) { return f(p); });

    auto order = [&] {
        std::vector<std::size_t> idx(xs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<std::vector<double>> xs2;
        std::vector<double> fs2;
        for (std::size_t i : idx) {
            xs2.push_back(xs[i]);
            fs2.push_back(fs[i]);
        }
        xs = std::move(xs2);
        fs = std::move(fs2);
    };

    SearchResult result;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        order();

        // Relative spread of the simplex in values and coordinates.
        const double fscale = std::max(1.0, std::abs(fs.front()));
        double xspread = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double lo = xs[0][i], hi = xs[0][i];
            for (const auto& p : xs) {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            xspread = std::max(xspread, (hi - lo) / std::max(1.0, std::abs(xs[0][i])));
        }
        if ((fs.back() - fs.front()) / fscale < tolerance && xspread < tolerance) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t p = 0; p + 1 < xs.size(); ++p)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += xs[p][i];
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coeff) {
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i)
                p[i] = centroid[i] + coeff * (centroid[i] - xs.back()[i]);
            return clip(std::move(p), lower, upper);
        };

        const std::vector<double> reflected = blend(1.0);
        const double fr = f(reflected);
        if (fr < fs.front()) {
            const std::vector<double> expanded = blend(2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                xs.back() = expanded;
                fs.back() = fe;
            } else {
                xs.back() = reflected;
                fs.back() = fr;
            }
            continue;
        }
        if (fr < fs[fs.size() - 2]) {
            xs.back() = reflected;
            fs.back() = fr;
            continue;
        }
        const std::vector<double> contracted = blend(-0.5);
        const double fc = f(contracted);
        if (fc < fs.back()) {
            xs.back() = contracted;
            fs.back() = fc;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t p = 1; p < xs.size(); ++p) {
            for (std::size_t i = 0; i < dim; ++i)
                xs[p][i] = xs[0][i] + 0.5 * (xs[p][i] - xs[0][i]);
            fs[p] = f(xs[p]);
        }
    }
    order();
    result.x = xs.front();
    result.value = fs.front();
    result.iterations = iter;
    return result;
}

void MeasurementSet::validate() const {
    const std::size_t m = t.size();
    if (m < 2) throw std::invalid_argument("measurement set needs at least two samples");
    if (tin.size() != m || tout.size() != m || v.size() != m || tamb.size() != m)
        throw std::invalid_argument("measurement columns differ in length");
    if (!tw_out.empty() && tw_out.size() != m)
        throw std::invalid_argument("wall column length mismatch");
    if (!tm_probe.empty() && tm_probe.size() != m)
        throw std::invalid_argument("probe column length mismatch");
    for (std::size_t k = 1; k < m; ++k)
        if (!(t[k] > t[k - 1]))
            throw std::invalid_argument("measurement times must be strictly increasing");
    for (std::size_t k = 0; k < m; ++k) {
        if (std::isnan(tin[k]) || std::isnan(tout[k]) || std::isnan(v[k]) ||
            std::isnan(tamb[k]))
            throw std::invalid_argument("required measurement columns contain gaps");
        if (!(v[k] > 0.0))
            throw std::invalid_argument("measured velocity must be positive");
    }
}

MeasurementSet MeasurementSet::from_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    MeasurementSet data;
    data.t = table.column("t");
    data.tin = table.column("Tin");
    data.tout = table.column("Tout");
    data.v = table.column("v");
    data.tamb = table.column("Tamb");
    auto optional_column = [&](const std::string& name) -> std::vector<double> {
        if (!table.has_column(name)) return {};
        const auto& col = table.column(name);
        const bool all_nan = std::all_of(col.begin(), col.end(),
                                         [](double x) { return std::isnan(x); });
        return all_nan ? std::vector<double>{} : col;
    };
    data.tw_out = optional_column("Tw_out");
    data.tm_probe = optional_column("Tm_probe");
    data.validate();
    return data;
}

Signal MeasurementSet::inlet() const { return Signal::from_samples(t, tin); }
Signal MeasurementSet::velocity() const { return Signal::from_samples(t, v); }
Signal MeasurementSet::ambient() const { return Signal::from_samples(t, tamb); }

BoundarySignals MeasurementSet::signals() const {
    return {velocity(), inlet(), ambient()};
}

namespace {

double loss_against(const MeasurementSet& data, const ModelOutput& sim,
                    bool with_wall) {
    double sumsq = 0.0;
    std::size_t count = 0;
    const Signal medium = Signal::from_samples(sim.t, sim.tm_out);
    for (std::size_t k = 0; k < data.t.size(); ++k) {
        if (data.t[k] > sim.t.back()) break;
        const double d = data.tout[k] - medium(data.t[k]);
        sumsq += d * d;
        ++count;
    }
    if (with_wall) {
        const Signal wall = Signal::from_samples(sim.t, sim.tw_out);
        for (std::size_t k = 0; k < data.t.size(); ++k) {
            if (data.t[k] > sim.t.back()) break;
            if (std::isnan(data.tw_out[k])) continue;
            const double d = data.tw_out[k] - wall(data.t[k]);
            sumsq += d * d;
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("no overlapping samples in fit");
    return std::sqrt(sumsq / count);
}

}  // namespace

FitResult identify(const MeasurementSet& data, const PipeGeometry& geom,
                   const MaterialProperties& mat, const HeatTransferSpec& ht,
                   const FitOptions& options) {
    data.validate();
    if (options.fit_wall && data.tw_out.empty())
        throw std::invalid_argument("wall fit requested but no wall data present");
    if (options.fit_wall && options.model == FitModel::adapted_dde)
        throw std::invalid_argument("the adapted delay model has no wall output");

    const BoundarySignals signals = data.signals();
    SimulationSettings settings;
    settings.t_end = data.t.back();
    settings.initial = data.tout.front();

    const bool scalar = options.model == FitModel::adapted_dde;
    const std::size_t dim = scalar ? 1 : 2;
    if (options.guess.size() != dim || options.lower.size() != dim ||
        options.upper.size() != dim)
        throw std::invalid_argument("guess/bounds dimension mismatch");

    // Time step from the CFL target 0.5 on the n-interval grid unless pinned.
    const double vmax = signals.velocity.max_value();
    const double dt_default = 0.5 * geom.length / (options.n * vmax);

    auto forward = [&](const std::vector<double>& x) {
        HeatTransferSpec candidate = ht;
        if (scalar) {
            candidate.epsilon = x[0];
        } else {
            candidate.alpha_mw = x[0];
            candidate.alpha_wa = x[1];
        }
        SimulationSettings run = settings;
        run.dt = options.dt > 0.0 ? options.dt : dt_default;
        const PipeParameters params = PipeParameters::make(geom, mat, candidate);
        switch (options.model) {
            case FitModel::pde:
                run.n = options.n;
                return simulate_pde(params, signals, run);
            case FitModel::dpde:
                run.n = options.dpde_n;
                return simulate_dpde(params, signals, run);
            default:
                return simulate_adapted_dde(params, signals, run);
        }
    };

    auto loss = [&](const std::vector<double>& x) {
        try {
            return loss_against(data, forward(x), options.fit_wall);
        } catch (const std::invalid_argument&) {
            // Infeasible candidate (e.g. degenerate parameters): steer away.
            return 1e12;
        }
    };

    const SearchResult search =
        nelder_mead(loss, options.guess, options.lower, options.upper,
                    options.max_iterations, options.tolerance);

    FitResult result;
    result.residual = search.value;
    result.iterations = search.iterations;
    result.converged = search.converged;
    if (scalar) {
        result.alpha_mw = ht.alpha_mw;
        result.alpha_wa = ht.alpha_wa;
        result.epsilon = search.x[0];
    } else {
        result.alpha_mw = search.x[0];
        result.alpha_wa = search.x[1];
        result.epsilon = ht.epsilon;
    }
    return result;
}

}  // namespace pipeflow
