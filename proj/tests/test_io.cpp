#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rydsim/csv.hpp>
#include <rydsim/presets.hpp>
#include <rydsim/scenario_json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rydsim;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream is(p);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string first_line(const fs::path& p)
{
    std::ifstream is(p);
    std::string line;
    std::getline(is, line);
    return line;
}

fs::path temp_dir(const std::string& tag)
{
    fs::path dir = fs::temp_directory_path() / ("rydsim_io_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

#ifdef RYDSIM_BIN
int run_cli(const std::string& args)
{
    const std::string cmd = std::string(RYDSIM_BIN) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}
#endif

} // namespace

TEST_CASE("every preset scenario round-trips through JSON exactly")
{
    for (const auto& preset : preset_library()) {
        for (const auto& [name, sc] : preset.simulations) {
            const json j1 = to_json(sc);
            const Scenario sc2 = scenario_from_json(j1);
            const json j2 = to_json(sc2);
            CHECK(j1 == j2);
            CHECK(scenario_hash(sc) == scenario_hash(sc2));
        }
        for (const auto& [name, cs] : preset.campaigns) {
            const json j1 = to_json(cs);
            const CampaignSpec cs2 = campaign_from_json(j1);
            CHECK(j1 == to_json(cs2));
        }
    }
}

TEST_CASE("unknown or missing config keys are rejected")
{
    const json good = to_json(make_two_qubit(Scheme::cyclic, TwoQubitParams{}));
    CHECK_NOTHROW(scenario_from_json(good));

    json extra = good;
    extra["surprise"] = 1;
    CHECK_THROWS_AS(scenario_from_json(extra), ConfigError);

    json extra_nested = good;
    extra_nested["drives"][0]["colour"] = "red";
    CHECK_THROWS_AS(scenario_from_json(extra_nested), ConfigError);

    json missing = good;
    missing.erase("t_final_us");
    CHECK_THROWS_AS(scenario_from_json(missing), ConfigError);

    json bad_drive = good;
    bad_drive["drives"][0]["kind"] = "triangle";
    CHECK_THROWS_AS(scenario_from_json(bad_drive), ConfigError);

    json bad_level = good;
    bad_level["stark_terms"] = json::array({{{"atom", 1}, {"level", "x"}, {"amp_mhz", 1.0}}});
    CHECK_THROWS_AS(scenario_from_json(bad_level), ConfigError);
}

TEST_CASE("CSV headers match the documented schemas")
{
    const auto dir = temp_dir("csv");

    Scenario sc = make_two_qubit(Scheme::cyclic, TwoQubitParams{});
    SimOptions opt;
    opt.n_samples = 4;
    const Trajectory traj = simulate_scenario(sc, opt);
    const GateReport rep = build_gate_report(traj, sc);

    write_trajectory_csv((dir / "traj.csv").string(), traj, sc);
    CHECK(first_line(dir / "traj.csv") ==
          "t,norm,pop_00,pop_01,pop_10,pop_11,pop_rydberg");

    write_gate_report_csv((dir / "rep.csv").string(), rep);
    CHECK(first_line(dir / "rep.csv") ==
          "t,F,pop_00,pop_01,pop_10,pop_11,phase_00,phase_01,phase_10,phase_11");

    CampaignResult res;
    res.name = "r";
    res.metric = "E";
    res.points = {{1.0, 0.5, 0.1, 3}};
    write_campaign_csv((dir / "camp.csv").string(), res);
    CHECK(first_line(dir / "camp.csv") == "grid_value,mean_error,std_error,n_trials");

    // Leak column appears exactly when decay is configured.
    Scenario open_sc = sc;
    open_sc.noise.decay = DecaySpec{50.0};
    SimOptions fast;
    fast.tol_scale = 100.0;
    fast.n_samples = 2;
    const Trajectory open_traj = simulate_scenario(open_sc, fast);
    write_trajectory_csv((dir / "open.csv").string(), open_traj, open_sc);
    CHECK(first_line(dir / "open.csv") ==
          "t,norm,pop_00,pop_01,pop_10,pop_11,pop_rydberg,pop_leak");
}

#ifdef RYDSIM_BIN

TEST_CASE("cli: simulate preset writes the documented artifacts")
{
    const auto dir = temp_dir("sim");
    const int rc = run_cli("simulate --preset fig2 --out " + dir.string() + " --emit-plot-script");
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "fig2_trajectory.csv"));
    CHECK(fs::exists(dir / "fig2_gate_report.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "plot.py"));
    const json summary = json::parse(slurp(dir / "summary.json"));
    CHECK(summary.at("fidelity_at_gate_time").get<double>() >= 1.0 - 1e-5);
    CHECK(summary.at("errors").contains("E_in"));
}

TEST_CASE("cli: frequency-modulated preset reports plateau metrics")
{
    const auto dir = temp_dir("fig4");
    const int rc = run_cli("simulate --preset fig4 --out " + dir.string() + " --tol 100 --samples 450");
    CHECK(rc == 0);
    const json summary = json::parse(slurp(dir / "summary.json"));
    REQUIRE(summary.contains("plateau"));
    CHECK(summary.at("plateau").at("min_fidelity").get<double>() >= 0.99);
    CHECK(summary.at("plateau").at("t_lo_us").get<double>() == doctest::Approx(3.5));
}

TEST_CASE("cli: malformed config exits 2 and writes nothing")
{
    const auto dir = temp_dir("bad");
    const auto cfg = dir / "bad.json";
    std::ofstream(cfg) << "{\"atoms\": 2, \"oops\": true}";
    const auto out = dir / "out";
    const int rc = run_cli("simulate --config " + cfg.string() + " --out " + out.string());
    CHECK(rc == 2);
    CHECK_FALSE(fs::exists(out / "summary.json"));

    const int rc2 = run_cli("simulate --preset does-not-exist --out " + out.string());
    CHECK(rc2 == 2);

    // Campaign preset fed to simulate is a usage error.
    const int rc3 = run_cli("simulate --preset fig5 --out " + out.string());
    CHECK(rc3 == 2);
}

TEST_CASE("cli: campaign from config is bit-identical across --jobs")
{
    const auto dir = temp_dir("camp");
    CampaignSpec spec;
    spec.kind = CampaignSpec::Kind::doppler_monte_carlo;
    spec.name = "mini";
    spec.scheme = 2;
    spec.grid = {10.0, 30.0};
    spec.trials_per_point = 5;
    spec.base_seed = 7;
    spec.params.omega2_mhz = 1.0;
    spec.params.v_mhz = 50.0;
    spec.params.omega_m_strong_mhz = 10.0;
    const auto cfg = dir / "mini.json";
    std::ofstream(cfg) << to_json(spec).dump(2);

    const auto out1 = dir / "j1";
    const auto out8 = dir / "j8";
    CHECK(run_cli("campaign --config " + cfg.string() + " --out " + out1.string() + " --jobs 1") == 0);
    CHECK(run_cli("campaign --config " + cfg.string() + " --out " + out8.string() + " --jobs 8") == 0);
    CHECK(slurp(out1 / "mini.csv") == slurp(out8 / "mini.csv"));
    CHECK(first_line(out1 / "mini.csv") == "grid_value,mean_error,std_error,n_trials");
}

TEST_CASE("cli: radius-scan preset emits the documented campaign table")
{
    const auto dir = temp_dir("fig12");
    CHECK(run_cli("campaign --preset fig12 --out " + dir.string()) == 0);
    const json summary = json::parse(slurp(dir / "summary.json"));
    REQUIRE(summary.size() == 1);
    const auto& pts = summary[0].at("points");
    // Gate error grows with radius and crosses 1e-2 inside [10, 30] nm.
    double cross = -1.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        CHECK(pts[k].at("mean").get<double>() > pts[k - 1].at("mean").get<double>());
        if (pts[k - 1].at("mean").get<double>() < 1e-2 && pts[k].at("mean").get<double>() >= 1e-2)
            cross = pts[k].at("grid_value").get<double>();
    }
    CHECK(cross >= 10.0);
    CHECK(cross <= 30.0);
    CHECK(first_line(dir / "fig12_radius.csv") == "grid_value,mean_error,std_error,n_trials");
}

TEST_CASE("cli: golden regression checks")
{
    const auto dir = temp_dir("goldens");
    CHECK(run_cli("check --goldens " + dir.string() + " --update") == 0);
    CHECK(fs::exists(dir / "tolerances.json"));
    CHECK(fs::exists(dir / "fig2.json"));

    // Unchanged code passes.
    CHECK(run_cli("check --goldens " + dir.string()) == 0);

    // A perturbed golden value is reported as a regression (exit 1).
    json g = json::parse(slurp(dir / "check-decay.json"));
    g["E_de"] = g["E_de"].get<double>() * 1.2;
    std::ofstream(dir / "check-decay.json") << g.dump(2);
    CHECK(run_cli("check --goldens " + dir.string()) == 1);

    // Tolerance file missing is a configuration error (exit 2).
    fs::remove(dir / "tolerances.json");
    CHECK(run_cli("check --goldens " + dir.string()) == 2);
}

#endif // RYDSIM_BIN
