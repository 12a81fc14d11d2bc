// Acceptance suite: one criterion per invocation (argv[1] in 1..8), or all
// criteria when no argument is given. Prints one verdict line per criterion.

#include "pipeflow/analytic.hpp"
#include "pipeflow/csv.hpp"
#include "pipeflow/delay.hpp"
#include "pipeflow/dpde.hpp"
#include "pipeflow/identify.hpp"
#include "pipeflow/lumped.hpp"
#include "pipeflow/metrics.hpp"
#include "pipeflow/pde.hpp"
#include "pipeflow/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

using namespace pipeflow;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

PipeGeometry simulation_geometry() { return {5.0, 0.0077, 0.01065}; }
PipeGeometry measurement_geometry() { return {1.62, 0.0077, 0.01065}; }

MaterialProperties table_material() {
    return {997.04, 4179.0, 7856.0, 500.0, 20.0};
}

HeatTransferSpec simulation_heat() {
    HeatTransferSpec ht;
    ht.alpha_mw = 1000.0;
    ht.alpha_wa = 80.0;
    ht.epsilon = 0.7;
    return ht;
}

HeatTransferSpec measurement_heat() {
    HeatTransferSpec ht;
    ht.alpha_mw = 3052.87;
    ht.alpha_wa = 46.98;
    ht.epsilon = 0.91;
    return ht;
}

// Inlet ramp 20->60 over [0, 50] s, ambient 30->20 over [0, 200] s, constant
// 0.5 m/s: the scenario behind the published error table.
BoundarySignals ramp_signals() {
    return {Signal::constant(0.5), Signal::ramp(0.0, 50.0, 20.0, 60.0),
            Signal::ramp(0.0, 200.0, 30.0, 20.0)};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool criterion_1() {
    const double sim =
        alpha_ma(simulation_geometry(), table_material(), simulation_heat());
    const double meas =
        alpha_ma(measurement_geometry(), table_material(), measurement_heat());
    const bool ok = std::abs(sim - 73.39) <= 0.01 && std::abs(meas - 46.00) <= 0.01;
    std::printf("criterion 1: %s - alpha_ma simulation %.4f (want 73.39 +- 0.01), "
                "measurement %.4f (want 46.00 +- 0.01)\n",
                ok ? "PASS" : "FAIL", sim, meas);
    return ok;
}

bool criterion_2() {
    const Stopwatch clock;
    const PipeParameters params =
        PipeParameters::make(simulation_geometry(), table_material(),
                             simulation_heat());
    const BoundarySignals signals = ramp_signals();
    SimulationSettings settings;
    settings.n = 200;
    settings.dt = 0.005;
    settings.t_end = 200.0;

    const ModelOutput benchmark = run_model("pde", params, signals, settings);

    struct Row {
        const char* model;
        double e2_want, einf_want;
        double wall_e2_want, wall_einf_want;  // 0 when the model has no wall
    };
    const Row rows[] = {
        {"dde", 1.2483, 2.5454, 0.0, 0.0},
        {"adapted_dde", 0.6435, 1.6612, 0.0, 0.0},
        {"dpde1", 0.3087, 0.7077, 0.2672, 0.5907},
        {"dpde:5", 0.0619, 0.1791, 0.0849, 0.1823},
    };

    bool ok = true;
    int out_of_band = 0;
    std::vector<double> e2s, einfs;
    auto band = [&](const char* model, const char* what, double got, double want) {
        const double rel = (got - want) / want;
        const bool inside = std::abs(rel) <= 0.20;
        if (!inside) {
            ok = false;
            ++out_of_band;
        }
        std::printf("  %-12s %-9s %8.4f vs %8.4f  (%+6.1f%%) %s\n", model, what,
                    got, want, 100.0 * rel, inside ? "ok" : "OUT OF BAND");
    };
    for (const Row& row : rows) {
        const ModelOutput out = run_model(row.model, params, signals, settings);
        const ErrorPair medium =
            error_pair(benchmark.t, benchmark.tm_out, out.t, out.tm_out);
        band(row.model, "e2", medium.e2, row.e2_want);
        band(row.model, "einf", medium.einf, row.einf_want);
        e2s.push_back(medium.e2);
        einfs.push_back(medium.einf);
        if (row.wall_e2_want > 0.0) {
            const ErrorPair wall =
                error_pair(benchmark.t, benchmark.tw_out, out.t, out.tw_out);
            band(row.model, "wall_e2", wall.e2, row.wall_e2_want);
            band(row.model, "wall_einf", wall.einf, row.wall_einf_want);
        }
    }

    // Strict orderings DDE > adapted > D(P)DE1 > D(P)DE5 for both metrics.
    bool ordered = true;
    for (std::size_t i = 1; i < e2s.size(); ++i)
        ordered = ordered && e2s[i - 1] > e2s[i] && einfs[i - 1] > einfs[i];
    if (!ordered) ok = false;
    std::printf("  orderings DDE > adapted > D(P)DE1 > D(P)DE5: %s\n",
                ordered ? "hold for e2 and einf" : "VIOLATED");

    const double elapsed = clock.seconds();
    if (elapsed > 10.0) ok = false;
    std::printf("criterion 2: %s - %d of 12 entries outside +-20%%, orderings %s, "
                "%.2f s (limit 10 s)\n",
                ok ? "PASS" : "FAIL", out_of_band, ordered ? "hold" : "violated",
                elapsed);
    return ok;
}

bool criterion_3() {
    const PipeParameters params =
        PipeParameters::make(simulation_geometry(), table_material(),
                             simulation_heat());
    const double v = 1.0, tin = 60.0, tamb = 20.0;
    const BoundarySignals signals{Signal::constant(v), Signal::constant(tin),
                                  Signal::constant(tamb)};
    const DerivedCoefficients& c = params.coeff;
    const double l = params.geometry.length;
    const double target =
        tamb + (tin - tamb) * std::exp(-c.h1 * c.h3 * l / ((c.h2 + c.h3) * v));

    bool ok = true;
    auto check_distributed = [&](const char* model, int n) {
        SimulationSettings settings;
        settings.n = n;
        settings.dt = 0.01;
        settings.t_end = 2000.0;
        const ModelOutput out = run_model(model, params, signals, settings);
        const double got = out.tm_out.back();
        const bool inside = std::abs(got - target) <= 0.05;
        if (!inside) ok = false;
        std::printf("  %-14s outlet %10.6f vs %10.6f  (|diff| %.4f, tol 0.05) %s\n",
                    model, got, target, std::abs(got - target),
                    inside ? "ok" : "OUT");
    };
    check_distributed("pde", 200);
    check_distributed("pde_simplified", 200);
    check_distributed("dpde", 50);
    check_distributed("dpde:5", 200);
    check_distributed("dpde1", 200);

    const double lumped_target = steady_lumped(params, v, tin, tamb, l);
    auto check_lumped = [&](const char* model) {
        SimulationSettings settings;
        settings.dt = 0.01;
        settings.t_end = 2000.0;
        const ModelOutput out = run_model(model, params, signals, settings);
        const double got = out.tm_out.back();
        const bool inside = std::abs(got - lumped_target) <= 1e-6;
        if (!inside) ok = false;
        std::printf("  %-14s outlet %10.6f vs %10.6f  (|diff| %.2e, tol 1e-6) %s\n",
                    model, got, lumped_target, std::abs(got - lumped_target),
                    inside ? "ok" : "OUT");
    };
    check_lumped("ode");
    check_lumped("dde");
    check_lumped("adapted_dde");

    std::printf("criterion 3: %s - steady states at v = 1 m/s, Tin = 60, "
                "Tamb = 20\n",
                ok ? "PASS" : "FAIL");
    return ok;
}

bool criterion_4() {
    PipeGeometry geom = simulation_geometry();
    HeatTransferSpec ht = simulation_heat();
    ht.alpha_wa = 0.0;  // insulated outer surface, h3 = 0
    const PipeParameters params = PipeParameters::make(geom, table_material(), ht);
    const double v = 0.5;

    const BoundarySignals signals{Signal::constant(v), Signal::step(0.0, 20.0, 60.0),
                                  Signal::constant(20.0)};
    SimulationSettings settings;
    settings.n = 40;
    settings.dt = 0.01;
    settings.t_end = 200.0;
    const ModelOutput dpde = simulate_dpde(params, signals, settings);

    const std::vector<double> exact = convolve_constant_flow(
        params, signals.inlet, v, geom.length, dpde.t, settings.dt);
    const double worst = max_abs_diff(exact, dpde.tm_out);

    const ImpulseKernel kernel =
        build_kernel(geom.length, params.coeff.h1, params.coeff.h2, v, settings.dt);
    const double mass_err = std::abs(kernel.mass() - 1.0);

    const bool ok = worst <= 0.25 && mass_err <= 1e-6;
    std::printf("criterion 4: %s - convolution vs DPDE(n=40) max diff %.4f "
                "(tol 0.25) over 200 s, kernel mass 1 %+.2e (tol 1e-6)\n",
                ok ? "PASS" : "FAIL", worst, kernel.mass() - 1.0);
    return ok;
}

bool criterion_5() {
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> segment_count(1, 11);
    std::uniform_real_distribution<double> gap(0.5, 30.0);
    std::uniform_real_distribution<double> speed(0.1, 2.0);
    std::uniform_real_distribution<double> pick(0.0, 1.0);

    bool ok = true;
    double worst_residual = 0.0, worst_semigroup = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> times{0.0}, values{speed(rng)};
        const int segments = segment_count(rng);
        for (int s = 0; s < segments; ++s) {
            times.push_back(times.back() + gap(rng));
            values.push_back(speed(rng));
        }
        const Signal v = Signal::from_samples(times, values);
        const FlowIntegrator flow(v);

        const double t = times.back() * (0.2 + 0.8 * pick(rng));
        const double distance = 0.1 + 9.9 * pick(rng);
        const double tau = flow.solve_delay(t, distance);
        const double residual =
            std::abs(flow.cumulative(t - tau, t) - distance);
        worst_residual = std::max(worst_residual, residual);

        const double d1 = distance * pick(rng);
        const double tau1 = flow.solve_delay(t, d1);
        const double tau2 = flow.solve_delay(t - tau1, distance - d1);
        worst_semigroup = std::max(worst_semigroup, std::abs(tau1 + tau2 - tau));
    }
    if (worst_residual > 1e-9 || worst_semigroup > 1e-9) ok = false;

    double worst_const = 0.0;
    for (double v : {0.1, 0.25, 0.5, 1.0, 2.0}) {
        for (double l : {0.5, 1.62, 5.0, 25.0}) {
            const double tau = solve_delay(Signal::constant(v), 100.0, l);
            worst_const = std::max(worst_const, std::abs(tau - l / v) / (l / v));
        }
    }
    if (worst_const > 1e-12) ok = false;

    std::printf("criterion 5: %s - 1000 random signals: residual max %.2e m "
                "(tol 1e-9), semigroup max %.2e s (tol 1e-9), constant-flow "
                "rel err %.2e (tol 1e-12)\n",
                ok ? "PASS" : "FAIL", worst_residual, worst_semigroup,
                worst_const);
    return ok;
}

bool criterion_6() {
    const PipeParameters params =
        PipeParameters::make(simulation_geometry(), table_material(),
                             simulation_heat());
    const BoundarySignals signals = ramp_signals();
    SimulationSettings settings;
    settings.n = 1;
    settings.dt = 0.005;
    settings.t_end = 200.0;
    settings.record_delayed_inlet = true;
    const ModelOutput a = simulate_dpde(params, signals, settings);
    const ModelOutput b = simulate_dpde1(params, signals, settings);
    const double worst =
        std::max({max_abs_diff(a.t, b.t), max_abs_diff(a.tm_out, b.tm_out),
                  max_abs_diff(a.tw_out, b.tw_out),
                  max_abs_diff(a.tin_delayed, b.tin_delayed)});
    const bool ok = worst <= 1e-12;
    std::printf("criterion 6: %s - dpde(n=1) vs dpde1 on the ramp scenario: "
                "max trajectory diff %.2e (tol 1e-12)\n",
                ok ? "PASS" : "FAIL", worst);
    return ok;
}

bool criterion_7() {
    const Stopwatch clock;
    const PipeGeometry geom = measurement_geometry();
    const MaterialProperties mat = table_material();
    const HeatTransferSpec truth = measurement_heat();
    const PipeParameters params = PipeParameters::make(geom, mat, truth);
    const BoundarySignals signals{
        Signal::constant(0.4),
        Signal::from_samples({0.0, 50.0, 100.0}, {60.0, 60.0, 30.0}),
        Signal::constant(22.0)};

    auto sample = [&](const ModelOutput& sim) {
        MeasurementSet data;
        const Signal tm = Signal::from_samples(sim.t, sim.tm_out);
        for (double t = 0.0; t <= sim.t.back() + 1e-9; t += 1.0) {
            data.t.push_back(t);
            data.tin.push_back(signals.inlet(t));
            data.tout.push_back(tm(t));
            data.v.push_back(signals.velocity(t));
            data.tamb.push_back(signals.ambient(t));
        }
        return data;
    };

    SimulationSettings fine;
    fine.n = 160;
    fine.dt = 0.0125;
    fine.t_end = 300.0;
    const MeasurementSet pde_data = sample(simulate_pde(params, signals, fine));

    FitOptions alpha_fit;
    alpha_fit.model = FitModel::pde;
    alpha_fit.n = 80;
    alpha_fit.guess = {2000.0, 60.0};
    alpha_fit.lower = {100.0, 5.0};
    alpha_fit.upper = {10000.0, 500.0};
    const FitResult alphas = identify(pde_data, geom, mat, truth, alpha_fit);
    const double err_mw = std::abs(alphas.alpha_mw - truth.alpha_mw) / truth.alpha_mw;
    const double err_wa = std::abs(alphas.alpha_wa - truth.alpha_wa) / truth.alpha_wa;

    SimulationSettings lumped;
    lumped.dt = 0.01;
    lumped.t_end = 300.0;
    const MeasurementSet eps_data =
        sample(simulate_adapted_dde(params, signals, lumped));

    FitOptions eps_fit;
    eps_fit.model = FitModel::adapted_dde;
    eps_fit.guess = {0.5};
    eps_fit.lower = {0.05};
    eps_fit.upper = {3.0};
    const FitResult eps = identify(eps_data, geom, mat, truth, eps_fit);
    const double err_eps = std::abs(eps.epsilon - 0.91) / 0.91;

    const double elapsed = clock.seconds();
    const bool ok =
        err_mw <= 0.02 && err_wa <= 0.02 && err_eps <= 0.05 && elapsed <= 60.0;
    std::printf("criterion 7: %s - recovered alpha_mw %.1f (%.2f%% err, tol 2%%), "
                "alpha_wa %.2f (%.2f%% err, tol 2%%), epsilon %.4f (%.2f%% err, "
                "tol 5%%), %.1f s (limit 60 s)\n",
                ok ? "PASS" : "FAIL", alphas.alpha_mw, 100.0 * err_mw,
                alphas.alpha_wa, 100.0 * err_wa, eps.epsilon, 100.0 * err_eps,
                elapsed);
    return ok;
}

bool criterion_8() {
    // The published measurement-error table is not reproducible: the raw rig
    // recordings were never released. The ingestion and identification
    // pipeline is exercised by criterion 7; here the shipped synthetic
    // fixture must load and validate as a stand-in measurement file.
    std::string path = "data/synthetic_measurement.csv";
    MeasurementSet data;
    try {
        data = MeasurementSet::from_csv(path);
    } catch (const std::exception&) {
        path = "../data/synthetic_measurement.csv";
        data = MeasurementSet::from_csv(path);
    }
    data.validate();
    const bool ok = data.t.size() == 301 && !data.tw_out.empty() &&
                    !data.tm_probe.empty() && data.velocity().strictly_positive();
    std::printf("criterion 8: %s - measurement table reproduction is out of "
                "scope (raw rig data unpublished); synthetic fixture %s loads "
                "with %zu rows, wall and probe channels present\n",
                ok ? "PASS" : "FAIL", path.c_str(), data.t.size());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                            criterion_5, criterion_6, criterion_7, criterion_8};
    if (argc > 1) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 8) {
            std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
            return 2;
        }
        return criteria[k - 1]() ? 0 : 1;
    }
    bool all = true;
    for (auto* criterion : criteria) all = criterion() && all;
    return all ? 0 : 1;
}
