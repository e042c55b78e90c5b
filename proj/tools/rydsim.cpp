// rydsim: simulate and analyze periodically driven Rydberg-atom phase gates.
//
// Subcommands:
//   simulate      run one scenario, write trajectory/gate-report CSVs + summary
//   campaign      run a parameter sweep or Monte Carlo ensemble
//   check         regression-compare fast presets against stored goldens
//   list-presets  show the built-in preset library

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <rydsim/csv.hpp>
#include <rydsim/presets.hpp>
#include <rydsim/scenario_json.hpp>
#include <rydsim/version.hpp>

namespace fs = std::filesystem;
using namespace rydsim;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_regression = 1;
constexpr int exit_config = 2;
constexpr int exit_integrator = 3;

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    double tol = 1.0;
    int samples = 400;
    int jobs = 1;
    bool emit_plot_script = false;
    std::string method = "adaptive";
};

std::optional<std::uint64_t> env_seed()
{
    if (const char* s = std::getenv("RYDSIM_SEED")) return std::strtoull(s, nullptr, 10);
    return std::nullopt;
}

json load_json_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
}

std::string hash_hex(std::uint64_t h)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_json_file(const fs::path& path, const json& j)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path.string());
    os << j.dump(2) << "\n";
}

// Plateau window of the frequency-modulated schemes, in us: the near-unity
// stretch spans Omega_2 t / 2pi in [3.5, 4.5].
std::optional<std::pair<double, double>> lzs_plateau_window(const Scenario& sc)
{
    for (const auto& d : sc.drives)
        if (const auto* fm = std::get_if<FrequencyModulatedDrive>(&d.kind)) {
            const double f2 = fm->rabi_mhz;
            if (f2 > 0.0) return std::make_pair(3.5 / f2, 4.5 / f2);
        }
    return std::nullopt;
}

json summarize_simulation(const std::string& name, const Scenario& sc, const GateReport& rep,
                          const Trajectory& traj)
{
    json s;
    s["name"] = name;
    s["scenario_hash"] = hash_hex(scenario_hash(sc));
    s["seed"] = sc.rng_seed;
    s["gate_time_us"] = rep.gate_time_us;
    s["fidelity_at_gate_time"] = rep.fidelity_at_gate_time;
    s["errors"] = rep.errors;
    json phases = json::object(), pops = json::object();
    const std::size_t k = rep.nearest_sample(rep.gate_time_us);
    for (std::size_t i = 0; i < rep.comp_labels.size(); ++i) {
        pops[rep.comp_labels[i]] = rep.populations[i][k];
        const double ph = rep.phases[i][k];
        if (!std::isnan(ph)) phases[rep.comp_labels[i]] = ph;
    }
    s["populations_at_gate_time"] = pops;
    s["phases_at_gate_time"] = phases;
    if (auto win = lzs_plateau_window(sc); win && sc.t_final_us >= win->first) {
        const double hi = std::min(win->second, sc.t_final_us);
        s["plateau"] = {{"t_lo_us", win->first},
                        {"t_hi_us", hi},
                        {"min_fidelity", rep.min_fidelity_in_window(win->first, hi)}};
    }
    s["norm_drift"] = traj.final_drift;
    s["steps_accepted"] = traj.stats.steps_accepted;
    s["steps_rejected"] = traj.stats.steps_rejected;
    return s;
}

int cmd_simulate(const CommonOpts& opt)
{
    std::string name;
    Scenario sc;
    if (!opt.preset.empty()) {
        const Preset* p = find_preset(opt.preset);
        if (!p) throw ConfigError("unknown preset: " + opt.preset);
        if (!p->is_simulation())
            throw ConfigError("preset '" + opt.preset + "' is a campaign; use `rydsim campaign`");
        name = p->simulations[0].first;
        sc = p->simulations[0].second;
    } else if (!opt.config_path.empty()) {
        sc = scenario_from_json(load_json_file(opt.config_path));
        name = fs::path(opt.config_path).stem().string();
    } else {
        throw ConfigError("simulate: need --preset or --config");
    }
    if (auto s = opt.seed ? opt.seed : env_seed()) sc.rng_seed = *s;

    ErrorReportOptions ropt;
    ropt.sim.tol_scale = opt.tol;
    ropt.sim.n_samples = opt.samples;
    ropt.sim.method = opt.method == "rk4" ? IntegratorConfig::Method::fixed_rk4
                                          : IntegratorConfig::Method::adaptive_rk;
    // The fixed-step oracle needs finer steps than the oscillation cap.
    if (ropt.sim.method == IntegratorConfig::Method::fixed_rk4) ropt.sim.max_step_scale = 0.05;
    Trajectory traj;
    ropt.capture = &traj;

    const auto t0 = std::chrono::steady_clock::now();
    const GateReport rep = error_report(sc, ropt);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    write_trajectory_csv((dir / (name + "_trajectory.csv")).string(), traj, sc);
    write_gate_report_csv((dir / (name + "_gate_report.csv")).string(), rep);
    write_json_file(dir / "summary.json", summarize_simulation(name, sc, rep, traj));

    json manifest;
    manifest["command"] = "simulate";
    manifest["preset"] = opt.preset.empty() ? json() : json(opt.preset);
    manifest["config"] = opt.config_path.empty() ? json() : json(opt.config_path);
    manifest["scenario"] = to_json(sc);
    manifest["seed"] = sc.rng_seed;
    manifest["integrator"] = {{"method", opt.method}, {"tol_scale", opt.tol}, {"samples", opt.samples}};
    manifest["version"] = version_string;
    manifest["wall_s"] = wall;
    manifest["outputs"] = {name + "_trajectory.csv", name + "_gate_report.csv", "summary.json"};
    write_json_file(dir / "manifest.json", manifest);
    if (opt.emit_plot_script) write_plot_script((dir / "plot.py").string());

    std::cout << "F(" << rep.gate_time_us << " us) = " << rep.fidelity_at_gate_time << "\n";
    for (const auto& [k, v] : rep.errors) std::cout << k << " = " << v << "\n";
    return exit_ok;
}

int cmd_campaign(const CommonOpts& opt)
{
    std::vector<std::pair<std::string, CampaignSpec>> specs;
    std::string preset_name;
    if (!opt.preset.empty()) {
        const Preset* p = find_preset(opt.preset);
        if (!p) throw ConfigError("unknown preset: " + opt.preset);
        if (p->campaigns.empty())
            throw ConfigError("preset '" + opt.preset + "' is a simulation; use `rydsim simulate`");
        specs = p->campaigns;
        preset_name = p->name;
    } else if (!opt.config_path.empty()) {
        CampaignSpec cs = campaign_from_json(load_json_file(opt.config_path));
        preset_name = cs.name;
        specs.emplace_back(cs.name, cs);
    } else {
        throw ConfigError("campaign: need --preset or --config");
    }
    const auto seed = opt.seed ? opt.seed : env_seed();

    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    json summary = json::array();
    json outputs = json::array();

    const auto t0 = std::chrono::steady_clock::now();
    for (auto& [name, spec] : specs) {
        if (seed) spec.base_seed = *seed;
        const CampaignResult res = run_campaign_spec(spec, opt.jobs);
        const std::string file = name + ".csv";
        write_campaign_csv((dir / file).string(), res);
        outputs.push_back(file);

        json entry;
        entry["name"] = res.name;
        entry["metric"] = res.metric;
        entry["base_seed"] = res.base_seed;
        if (spec.kind == CampaignSpec::Kind::blockade_baseline)
            entry["intrinsic_error"] = res.aux_scalar;
        json pts = json::array();
        for (const auto& p : res.points)
            pts.push_back({{"grid_value", p.grid_value},
                           {"mean", p.mean},
                           {"std_error", p.std_error},
                           {"n_trials", p.n_trials}});
        entry["points"] = pts;
        summary.push_back(entry);
        std::cout << res.name << ": " << res.points.size() << " grid points, "
                  << res.points.front().n_trials << " trials each\n";
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_json_file(dir / "summary.json", summary);
    json manifest;
    manifest["command"] = "campaign";
    manifest["preset"] = preset_name;
    manifest["config"] = opt.config_path.empty() ? json() : json(opt.config_path);
    manifest["seed"] = seed ? json(*seed) : json();
    manifest["jobs"] = opt.jobs;
    manifest["version"] = version_string;
    manifest["wall_s"] = wall;
    manifest["outputs"] = outputs;
    write_json_file(dir / "manifest.json", manifest);
    if (opt.emit_plot_script) write_plot_script((dir / "plot.py").string());
    return exit_ok;
}

// Scalars compared by the regression checker, per fast preset.
std::map<std::string, double> check_scalars(const std::string& preset_name)
{
    const Preset* p = find_preset(preset_name);
    if (!p || !p->is_simulation()) throw ConfigError("check: bad preset " + preset_name);
    Scenario sc = p->simulations[0].second;
    sc.rng_seed = 0;

    ErrorReportOptions ropt;
    ropt.sim.n_samples = 200;
    const GateReport rep = error_report(sc, ropt);

    std::map<std::string, double> out;
    out["F_at_T"] = rep.fidelity_at_gate_time;
    out["E_in"] = rep.errors.at("E_in");
    if (rep.errors.count("E_de")) out["E_de"] = rep.errors.at("E_de");
    if (auto ph = rep.phase_at_gate_time("01")) out["phase_01"] = *ph;
    if (auto win = lzs_plateau_window(sc); win && sc.t_final_us >= win->first)
        out["plateau_min"] =
            rep.min_fidelity_in_window(win->first, std::min(win->second, sc.t_final_us));
    return out;
}

int cmd_check(const std::string& goldens_dir, bool update)
{
    const std::vector<std::string> presets = {"fig2", "fig3", "fig4", "check-decay"};
    const fs::path dir(goldens_dir);

    if (update) {
        fs::create_directories(dir);
        for (const auto& name : presets) {
            json j(check_scalars(name));
            write_json_file(dir / (name + ".json"), j);
            std::cout << "wrote golden " << name << ".json\n";
        }
        if (!fs::exists(dir / "tolerances.json")) {
            const json tol = {{"F_at_T", 1e-7},  {"E_in", 1e-7},       {"E_de", 1e-6},
                              {"phase_01", 1e-5}, {"plateau_min", 1e-6}};
            write_json_file(dir / "tolerances.json", tol);
            std::cout << "wrote tolerances.json\n";
        }
        return exit_ok;
    }

    if (!fs::exists(dir / "tolerances.json"))
        throw ConfigError("check: tolerance file missing: " + (dir / "tolerances.json").string());
    const json tol = load_json_file((dir / "tolerances.json").string());

    bool failed = false;
    for (const auto& name : presets) {
        const fs::path golden_path = dir / (name + ".json");
        if (!fs::exists(golden_path))
            throw ConfigError("check: golden file missing: " + golden_path.string());
        const json golden = load_json_file(golden_path.string());
        const auto got = check_scalars(name);
        for (const auto& [key, want] : golden.items()) {
            if (!got.count(key)) {
                std::cout << "FAIL " << name << "." << key << ": metric not produced\n";
                failed = true;
                continue;
            }
            if (!tol.contains(key))
                throw ConfigError("check: no tolerance declared for metric '" + key + "'");
            const double t = tol.at(key).get<double>();
            const double g = got.at(key);
            const double w = want.get<double>();
            if (std::abs(g - w) <= t) {
                std::cout << "ok   " << name << "." << key << " = " << g << "\n";
            } else {
                std::cout << "FAIL " << name << "." << key << ": got " << g << ", golden " << w
                          << ", tol " << t << "\n";
                failed = true;
            }
        }
    }
    return failed ? exit_regression : exit_ok;
}

int cmd_list_presets()
{
    for (const auto& p : preset_library()) {
        std::cout << p.name << "  [" << (p.is_simulation() ? "simulate" : "campaign") << "]  "
                  << p.summary << "\n";
        for (const auto& [name, _] : p.campaigns) std::cout << "    " << name << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simulation of periodically driven Rydberg-atom phase gates"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    CommonOpts opt;
    std::string goldens_dir;
    bool update_goldens = false;

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("--preset", opt.preset, "built-in preset name");
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
        cmd->add_option("--seed", opt.seed, "RNG seed (fallback: RYDSIM_SEED)");
        cmd->add_option("--tol", opt.tol, "integration tolerance scale")->capture_default_str();
        cmd->add_option("--samples", opt.samples, "trajectory sample count")->capture_default_str();
        cmd->add_flag("--emit-plot-script", opt.emit_plot_script, "write a plot.py beside the CSVs");
        if (with_jobs) cmd->add_option("--jobs", opt.jobs, "concurrent trial workers");
    };

    CLI::App* sim = app.add_subcommand("simulate", "run one scenario");
    add_common(sim, false);
    sim->add_option("--method", opt.method, "adaptive|rk4")->capture_default_str();

    CLI::App* camp = app.add_subcommand("campaign", "run a sweep / Monte Carlo campaign");
    add_common(camp, true);

    CLI::App* chk = app.add_subcommand("check", "compare fast presets against goldens");
    chk->add_option("--goldens", goldens_dir, "goldens directory")->required();
    chk->add_flag("--update", update_goldens, "write new goldens instead of comparing");

    CLI::App* lp = app.add_subcommand("list-presets", "list built-in presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (sim->parsed()) return cmd_simulate(opt);
        if (camp->parsed()) return cmd_campaign(opt);
        if (chk->parsed()) return cmd_check(goldens_dir, update_goldens);
        if (lp->parsed()) return cmd_list_presets();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const IntegratorError& e) {
        std::cerr << "integrator failure: " << e.what() << "\n";
        return exit_integrator;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_integrator;
    }
    return exit_ok;
}
