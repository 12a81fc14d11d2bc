#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pipeflow/scenario.hpp"

#include "pipeflow/csv.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

using namespace pipeflow;
namespace fs = std::filesystem;

namespace {

const char* kConfig = R"(# comparison experiment
[parameters]
length_m = 5.0
inner_radius_m = 0.0077
outer_radius_m = 0.01065   # wall outside
rho_m = 997.04
cp_m = 4179.0
rho_w = 7856.0
cp_w = 500.0
lambda_w = 20.0
alpha_mw = 3052.87
alpha_wa = 46.98

[signals]
v = const:0.5
Tin = ramp:0,50,20,60
Tamb = const:20

[simulation]
n = 50
t_end = 60
probes = 2.5

[models]
reference = pde
compare = dpde:5, dpde1, dde

[output]
directory = {OUT}
)";

std::string write_config(const fs::path& dir, std::string text) {
    fs::create_directories(dir);
    const std::string out = (dir / "out").string();
    const auto pos = text.find("{OUT}");
    text.replace(pos, 5, out);
    const fs::path path = dir / "scenario.cfg";
    std::ofstream file(path);
    file << text;
    return path.string();
}

}  // namespace

TEST_CASE("signal specs parse to the expected shapes") {
    CHECK(parse_signal_spec("const:42.5", "")(7.0) == doctest::Approx(42.5));

    const Signal step = parse_signal_spec("step:10,1,2", "");
    CHECK(step(9.99) == doctest::Approx(1.0));
    CHECK(step(10.01) == doctest::Approx(2.0));

    const Signal ramp = parse_signal_spec("ramp:0,100,20,60", "");
    CHECK(ramp(-5.0) == doctest::Approx(20.0));
    CHECK(ramp(50.0) == doctest::Approx(40.0));
    CHECK(ramp(150.0) == doctest::Approx(60.0));

    const fs::path dir = "/tmp/pipeflow_sigspec";
    fs::create_directories(dir);
    {
        std::ofstream file(dir / "flow.csv");
        file << "t,v\n0,0.4\n10,0.8\n";
    }
    const Signal from_csv = parse_signal_spec("csv:flow.csv", dir.string());
    CHECK(from_csv(5.0) == doctest::Approx(0.6));
    fs::remove_all(dir);

    CHECK_THROWS_AS(parse_signal_spec("const", ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_signal_spec("step:1,2", ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_signal_spec("ramp:1,2,3", ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_signal_spec("wiggle:1", ""), std::invalid_argument);
}

TEST_CASE("scenario config files load with defaults and overrides") {
    const fs::path dir = "/tmp/pipeflow_scn_load";
    const std::string path = write_config(dir, kConfig);
    const Scenario s = Scenario::load(path);

    CHECK(s.params.geometry.length == doctest::Approx(5.0));
    const DerivedCoefficients expect = h_parameters(
        s.params.geometry, s.params.material, s.params.heat);
    CHECK(s.params.coeff.h1 == doctest::Approx(expect.h1).epsilon(1e-14));
    CHECK(s.params.coeff.h3 == doctest::Approx(expect.h3).epsilon(1e-14));
    CHECK(s.signals.inlet(25.0) == doctest::Approx(40.0));
    CHECK(s.n == 50);
    CHECK(s.t_end == doctest::Approx(60.0));
    CHECK(s.probes.size() == 1);
    CHECK(s.reference == "pde");
    REQUIRE(s.compare.size() == 3);
    CHECK(s.compare[0] == "dpde:5");
    CHECK(s.compare[2] == "dde");
    CHECK(s.output_dir == (dir / "out").string());

    // dt = 0 resolves to half the CFL limit of the reference grid.
    CHECK(s.dt == 0.0);
    CHECK(s.resolved_dt() == doctest::Approx(0.5 * 5.0 / (50 * 0.5)));
    fs::remove_all(dir);
}

TEST_CASE("malformed configs are rejected with context") {
    const fs::path dir = "/tmp/pipeflow_scn_bad";
    fs::create_directories(dir);
    auto load_text = [&](const std::string& text) {
        const fs::path path = dir / "bad.cfg";
        std::ofstream(path) << text;
        return Scenario::load(path.string());
    };
    CHECK_THROWS_AS(load_text("length_m = 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_text("[parameters\nlength_m = 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_text("[parameters]\nlength_m = bogus\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_text("[parameters]\nlength_m = 5\n"),
                    std::invalid_argument);  // missing required keys
    CHECK_THROWS_AS(Scenario::load((dir / "absent.cfg").string()),
                    std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("model dispatch honors the section-count suffix") {
    const fs::path dir = "/tmp/pipeflow_scn_dispatch";
    const std::string path = write_config(dir, kConfig);
    const Scenario s = Scenario::load(path);

    SimulationSettings settings;
    settings.n = s.n;
    settings.dt = s.resolved_dt();
    settings.t_end = 10.0;
    settings.probes = {2.5};

    const ModelOutput five = run_model("dpde:5", s.params, s.signals, settings);
    const ModelOutput one = run_model("dpde1", s.params, s.signals, settings);
    CHECK(five.probes.size() == 1);
    CHECK(five.probes[0].position == doctest::Approx(3.0));  // half rounds up, dz = 1
    CHECK(five.tm_out.size() == one.tm_out.size());

    const ModelOutput dde = run_model("dde", s.params, s.signals, settings);
    CHECK(dde.tw_out.empty());
    CHECK(dde.probes.empty());  // lumped models have no interior field

    CHECK_THROWS_AS(run_model("dpde:0", s.params, s.signals, settings),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_model("spectral", s.params, s.signals, settings),
                    std::invalid_argument);
}

TEST_CASE("scenario runs write per-model output and an error report") {
    const fs::path dir = "/tmp/pipeflow_scn_run";
    const std::string path = write_config(dir, kConfig);
    const Scenario s = Scenario::load(path);
    const ComparisonReport report = run_scenario(s);

    CHECK(report.reference == "pde");
    REQUIRE(report.entries.size() == 3);
    for (const ComparisonEntry& e : report.entries) {
        CHECK(e.e2 >= 0.0);
        CHECK(e.einf >= e.e2);
    }
    CHECK(report.entries[0].model == "dpde:5");
    CHECK(report.entries[0].has_wall);
    CHECK(!report.entries[2].has_wall);  // lumped model has no wall channel
    // More sections track the reference more closely.
    CHECK(report.entries[0].e2 < report.entries[1].e2);

    const fs::path out = dir / "out";
    CHECK(fs::exists(out / "pde.csv"));
    CHECK(fs::exists(out / "dpde_5.csv"));
    CHECK(fs::exists(out / "dpde1.csv"));
    CHECK(fs::exists(out / "dde.csv"));
    CHECK(fs::exists(out / "report.csv"));

    // Write/read/write of model output is bit-stable.
    const ModelOutput back = read_model_output((out / "dpde_5.csv").string());
    CHECK(back.t.size() == back.tm_out.size());
    CHECK(back.probes.size() == 1);
    const fs::path again = out / "again.csv";
    write_model_output(again.string(), back);
    std::ifstream a((out / "dpde_5.csv"));
    std::ifstream b(again);
    const std::string text_a((std::istreambuf_iterator<char>(a)), {});
    const std::string text_b((std::istreambuf_iterator<char>(b)), {});
    CHECK(text_a == text_b);
    fs::remove_all(dir);
}

TEST_CASE("output directory falls back to the environment") {
    const char* config = R"(
[parameters]
length_m = 5.0
inner_radius_m = 0.0077
outer_radius_m = 0.01065
rho_m = 997.04
cp_m = 4179.0
rho_w = 7856.0
cp_w = 500.0
lambda_w = 20.0
alpha_mw = 3052.87
alpha_wa = 46.98

[signals]
v = const:0.5
Tin = const:40
Tamb = const:20

[simulation]
n = 20
t_end = 5
)";
    const fs::path dir = "/tmp/pipeflow_scn_env";
    fs::create_directories(dir);
    const fs::path path = dir / "plain.cfg";
    std::ofstream(path) << config;
    const Scenario s = Scenario::load(path.string());
    CHECK(s.output_dir.empty());
    CHECK(s.compare.empty());

    const fs::path env_out = dir / "env_out";
    setenv("PIPEFLOW_OUT_DIR", env_out.string().c_str(), 1);
    CHECK(s.resolved_output_dir() == env_out.string());
    run_scenario(s);
    CHECK(fs::exists(env_out / "pde.csv"));
    CHECK(fs::exists(env_out / "report.csv"));
    unsetenv("PIPEFLOW_OUT_DIR");
    CHECK(s.resolved_output_dir() == ".");
    fs::remove_all(dir);
}
