#include "CLI11.hpp"

#include "pipeflow/analytic.hpp"
#include "pipeflow/csv.hpp"
#include "pipeflow/delay.hpp"
#include "pipeflow/identify.hpp"
#include "pipeflow/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

namespace {

using namespace pipeflow;

// %.9g with a decimal marker forced, so round-trip values stay numbers with
// an explicit fraction (10 prints as 10.0).
std::string format_number(double v) {
    std::string s = format_value(v);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

int cmd_simulate(const std::string& config_path, std::string model,
                 std::string out_path) {
    const Scenario scenario = Scenario::load(config_path);
    if (model.empty()) model = scenario.reference;

    SimulationSettings settings;
    settings.n = scenario.n;
    settings.dt = scenario.resolved_dt();
    settings.t_end = scenario.t_end;
    settings.probes = scenario.probes;

    const ModelOutput out =
        run_model(model, scenario.params, scenario.signals, settings);
    if (out_path.empty()) {
        std::string safe = model;
        std::replace(safe.begin(), safe.end(), ':', '_');
        const std::filesystem::path dir(scenario.resolved_output_dir());
        std::filesystem::create_directories(dir);
        out_path = (dir / (safe + ".csv")).string();
    }
    write_model_output(out_path, out);
    std::printf("%s: %zu samples, dt = %s, Tm_out(end) = %s -> %s\n",
                model.c_str(), out.t.size(), format_number(settings.dt).c_str(),
                format_number(out.tm_out.back()).c_str(), out_path.c_str());
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir) {
    Scenario scenario = Scenario::load(config_path);
    if (!out_dir.empty()) scenario.output_dir = out_dir;
    const ComparisonReport report = run_scenario(scenario);
    std::printf("reference: %s\n", report.reference.c_str());
    std::printf("%-14s %12s %12s %12s %12s\n", "model", "e2", "einf", "wall_e2",
                "wall_einf");
    for (const ComparisonEntry& e : report.entries) {
        std::printf("%-14s %12s %12s", e.model.c_str(),
                    format_number(e.e2).c_str(), format_number(e.einf).c_str());
        if (e.has_wall)
            std::printf(" %12s %12s\n", format_number(e.wall_e2).c_str(),
                        format_number(e.wall_einf).c_str());
        else
            std::printf(" %12s %12s\n", "-", "-");
    }
    std::printf("output: %s\n", scenario.resolved_output_dir().c_str());
    return 0;
}

FitModel parse_fit_model(const std::string& name, int& dpde_n) {
    if (name == "pde") return FitModel::pde;
    if (name == "adapted_dde") return FitModel::adapted_dde;
    if (name == "dpde") return FitModel::dpde;
    if (name.rfind("dpde:", 0) == 0) {
        dpde_n = std::stoi(name.substr(5));
        if (dpde_n < 1)
            throw CLI::ValidationError("--model",
                                       "dpde section count must be positive");
        return FitModel::dpde;
    }
    throw CLI::ValidationError("--model", "expected pde, dpde[:<n>] or adapted_dde");
}

int cmd_identify(const std::string& config_path, const std::string& data_path,
                 const std::string& model_name, bool fit_wall, int n, double dt,
                 std::vector<double> guess, std::vector<double> lower,
                 std::vector<double> upper, int max_iterations, double tolerance) {
    const Scenario scenario = Scenario::load(config_path);
    const MeasurementSet data = MeasurementSet::from_csv(data_path);

    FitOptions options;
    options.model = parse_fit_model(model_name, options.dpde_n);
    options.fit_wall = fit_wall;
    options.n = n;
    options.dt = dt;
    options.max_iterations = max_iterations;
    options.tolerance = tolerance;
    if (options.model == FitModel::adapted_dde) {
        options.guess = {0.7};
        options.lower = {0.05};
        options.upper = {3.0};
    } else {
        options.guess = {2000.0, 60.0};
        options.lower = {100.0, 5.0};
        options.upper = {10000.0, 500.0};
    }
    if (!guess.empty()) options.guess = std::move(guess);
    if (!lower.empty()) options.lower = std::move(lower);
    if (!upper.empty()) options.upper = std::move(upper);

    const FitResult fit = identify(data, scenario.params.geometry,
                                   scenario.params.material,
                                   scenario.params.heat, options);
    if (options.model == FitModel::adapted_dde)
        std::printf("epsilon = %s\n", format_number(fit.epsilon).c_str());
    else
        std::printf("alpha_mw = %s\nalpha_wa = %s\n",
                    format_number(fit.alpha_mw).c_str(),
                    format_number(fit.alpha_wa).c_str());
    std::printf("residual_rms = %s\niterations = %d\nconverged = %s\n",
                format_number(fit.residual).c_str(), fit.iterations,
                fit.converged ? "yes" : "no");
    return fit.converged ? 0 : 3;
}

int cmd_delay(const std::string& spec, double distance, double t) {
    const Signal v = parse_signal_spec(spec, "");
    std::printf("%s\n", format_number(solve_delay(v, t, distance)).c_str());
    return 0;
}

int cmd_kernel(double z, double v, double h1, double h2, double dt,
               const std::string& out_path) {
    const ImpulseKernel kernel = build_kernel(z, h1, h2, v, dt);
    if (!out_path.empty()) {
        CsvTable table;
        table.header = {"t", "g"};
        table.columns.assign(2, {});
        for (std::size_t i = 0; i < kernel.g.size(); ++i) {
            table.columns[0].push_back(static_cast<double>(i) * kernel.dt);
            table.columns[1].push_back(kernel.g[i]);
        }
        write_csv(out_path, table);
        std::printf("wrote %zu samples -> %s\n", kernel.g.size(), out_path.c_str());
    }
    std::printf("dirac_weight = %s\ntail_mass = %s\ntotal_mass = %s\n",
                format_number(kernel.dirac_weight).c_str(),
                format_number(kernel.mass() - kernel.dirac_weight).c_str(),
                format_number(kernel.mass()).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermal pipe-flow model suite"};
    app.require_subcommand(1);

    std::string config_path, data_path, model, out_path, signal_spec;
    bool fit_wall = false;
    int n = 100, max_iterations = 500;
    double dt = 0.0, tolerance = 1e-6;
    double distance = 0.0, t = 0.0, z = 0.0, velocity = 0.0, h1 = 0.0, h2 = 0.0;
    double kernel_dt = 0.01;
    std::vector<double> guess, lower, upper;

    CLI::App* simulate = app.add_subcommand("simulate", "run one model");
    simulate->add_option("--config", config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--model", model,
                         "model name (default: the scenario reference)");
    simulate->add_option("--out", out_path, "output CSV path");

    CLI::App* compare = app.add_subcommand(
        "compare", "run the reference and every comparison model");
    compare->add_option("--config", config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("--out", out_path, "output directory override");

    CLI::App* identify = app.add_subcommand(
        "identify", "fit heat-transfer parameters to measured data");
    identify->add_option("--config", config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    identify->add_option("--data", data_path, "measurement CSV")
        ->required()
        ->check(CLI::ExistingFile);
    identify->add_option("--model", model, "pde, dpde[:<n>] or adapted_dde")
        ->default_val("pde");
    identify->add_flag("--fit-wall", fit_wall, "include the wall residual");
    identify->add_option("--n", n, "forward-simulation grid intervals");
    identify->add_option("--dt", dt, "forward-simulation time step");
    identify->add_option("--guess", guess, "start values")->delimiter(',');
    identify->add_option("--lower", lower, "lower bounds")->delimiter(',');
    identify->add_option("--upper", upper, "upper bounds")->delimiter(',');
    identify->add_option("--max-iter", max_iterations, "iteration budget");
    identify->add_option("--tol", tolerance, "convergence tolerance");

    CLI::App* delay = app.add_subcommand(
        "delay", "transport delay through the pipe for a flow history");
    delay->add_option("--v", signal_spec, "velocity signal spec")->required();
    delay->add_option("--distance", distance, "distance to traverse [m]")
        ->required();
    delay->add_option("--t", t, "arrival time [s]")->required();

    CLI::App* kernel = app.add_subcommand(
        "kernel", "impulse-response kernel of the insulated pipe");
    kernel->add_option("--z", z, "position along the pipe [m]")->required();
    kernel->add_option("--v", velocity, "constant velocity [m/s]")->required();
    kernel->add_option("--h1", h1, "medium coupling rate [1/s]")->required();
    kernel->add_option("--h2", h2, "wall coupling rate [1/s]")->required();
    kernel->add_option("--dt", kernel_dt, "kernel resolution [s]");
    kernel->add_option("--out", out_path, "kernel CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(config_path, model, out_path);
        if (compare->parsed()) return cmd_compare(config_path, out_path);
        if (identify->parsed())
            return cmd_identify(config_path, data_path, model, fit_wall, n, dt,
                                guess, lower, upper, max_iterations, tolerance);
        if (delay->parsed()) return cmd_delay(signal_spec, distance, t);
        if (kernel->parsed())
            return cmd_kernel(z, velocity, h1, h2, kernel_dt, out_path);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }
    return 1;
}
