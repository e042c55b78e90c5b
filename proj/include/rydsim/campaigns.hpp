#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rydsim/gates.hpp"

namespace rydsim {

// ---------------------------------------------------------------------------
// Two-qubit scheme builders
//
// Scheme 1: Omega_m = 2 sqrt(3) Omega_2 (cyclic Rabi + Raman), T = 2 pi / Omega_2.
// Scheme 2: strong control drive Omega_m >> 2 Omega_2, T = 2 pi / Omega_2.
// Scheme 3: scheme 2 plus a frequency-modulated target drive, T = 8 pi / Omega_2.
// The modulation frequency always sits on the antiblockade resonance w = V.

enum class Scheme : int { cyclic = 1, strong = 2, lzs = 3 };

struct TwoQubitParams {
    double omega2_mhz = 1.0;
    double v_mhz = 500.0;                  // explicit interaction strength
    double omega_m_strong_mhz = 100.0;     // control amplitude for schemes 2 and 3
    // Frequency-modulation parameters, in units of Omega_2.
    double lzs_delta0_factor = 5.0;
    double lzs_delta_bar_factor = 6.0;
    double lzs_omega_bar_factor = 0.5;
    // When set, the interaction comes from the power law at d_ideal and the
    // scenario carries the geometry needed for distance disorder.
    std::optional<double> c6_mhz_um6;
    double d_ideal_um = 0.0;
    double k_eff_per_m = 8.76e6;

    double interaction_mhz() const
    {
        return c6_mhz_um6 ? vdw_strength_mhz(*c6_mhz_um6, d_ideal_um) : v_mhz;
    }

    double omega_m_mhz(Scheme s) const
    {
        return s == Scheme::cyclic ? 2.0 * std::sqrt(3.0) * omega2_mhz : omega_m_strong_mhz;
    }

    double gate_time_us(Scheme s) const
    {
        return (s == Scheme::lzs ? 4.0 : 1.0) / omega2_mhz;
    }
};

inline Scenario make_two_qubit(Scheme scheme, const TwoQubitParams& p,
                               double t_final_factor = 1.0)
{
    Scenario sc;
    sc.n_atoms = 2;
    const double v = p.interaction_mhz();

    DriveSpec control;
    control.kind = AmplitudeModulatedDrive{p.omega_m_mhz(scheme), v};  // w = V
    DriveSpec target;
    if (scheme == Scheme::lzs)
        target.kind = FrequencyModulatedDrive{p.omega2_mhz, p.lzs_delta0_factor * p.omega2_mhz,
                                              p.lzs_delta_bar_factor * p.omega2_mhz,
                                              p.lzs_omega_bar_factor * p.omega2_mhz};
    else
        target.kind = ConstantDrive{p.omega2_mhz};
    sc.drives = {control, target};

    if (p.c6_mhz_um6) {
        sc.interactions.geometry = C6Geometry{*p.c6_mhz_um6, {0.0, p.d_ideal_um}};
        sc.interactions.ddf = DdfSpec{1, 2, *p.c6_mhz_um6, p.d_ideal_um, p.d_ideal_um};
    } else {
        sc.interactions.pairs = {{1, 2, v}};
    }

    sc.initial_state.kind = InitialStateSpec::Kind::cz_benchmark;
    sc.target = {GateTargetSpec::Kind::cz_two_qubit, 2};
    sc.gate_time_us = p.gate_time_us(scheme);
    sc.t_final_us = sc.gate_time_us * t_final_factor;
    return sc;
}

// Three-qubit phase gate: two control atoms under the modulated drive, the
// target at equal distance from both (V13 = V23 = V = w), control-control
// strength V'.
inline Scenario make_three_qubit(Scheme scheme, const TwoQubitParams& p, double v_prime_mhz)
{
    if (scheme == Scheme::cyclic)
        throw std::invalid_argument("make_three_qubit: only the strong-drive schemes generalize");
    Scenario sc;
    sc.n_atoms = 3;
    const double v = p.interaction_mhz();

    DriveSpec control;
    control.kind = AmplitudeModulatedDrive{p.omega_m_mhz(scheme), v};
    DriveSpec target;
    if (scheme == Scheme::lzs)
        target.kind = FrequencyModulatedDrive{p.omega2_mhz, p.lzs_delta0_factor * p.omega2_mhz,
                                              p.lzs_delta_bar_factor * p.omega2_mhz,
                                              p.lzs_omega_bar_factor * p.omega2_mhz};
    else
        target.kind = ConstantDrive{p.omega2_mhz};
    sc.drives = {control, control, target};
    sc.interactions.pairs = {{1, 3, v}, {2, 3, v}, {1, 2, v_prime_mhz}};

    sc.initial_state.kind = InitialStateSpec::Kind::uniform_plus;
    sc.target = {GateTargetSpec::Kind::phase_n_qubit, 3};
    sc.gate_time_us = p.gate_time_us(scheme);
    sc.t_final_us = sc.gate_time_us;
    return sc;
}

// Four-qubit phase gate with three blockaded control atoms. Control-control
// strengths are far above every drive scale; states with two excited
// controls are projected out (error of order (Omega_m / 2 V_cc)^2).
inline Scenario make_four_qubit(Scheme scheme, const TwoQubitParams& p, double v12_mhz,
                                double v13_mhz, double v23_mhz)
{
    if (scheme == Scheme::cyclic)
        throw std::invalid_argument("make_four_qubit: only the strong-drive schemes generalize");
    Scenario sc;
    sc.n_atoms = 4;
    const double v = p.interaction_mhz();

    DriveSpec control;
    control.kind = AmplitudeModulatedDrive{p.omega_m_mhz(scheme), v};
    DriveSpec target;
    if (scheme == Scheme::lzs)
        target.kind = FrequencyModulatedDrive{p.omega2_mhz, p.lzs_delta0_factor * p.omega2_mhz,
                                              p.lzs_delta_bar_factor * p.omega2_mhz,
                                              p.lzs_omega_bar_factor * p.omega2_mhz};
    else
        target.kind = ConstantDrive{p.omega2_mhz};
    sc.drives = {control, control, control, target};
    sc.interactions.pairs = {{1, 4, v}, {2, 4, v}, {3, 4, v},
                             {1, 2, v12_mhz}, {1, 3, v13_mhz}, {2, 3, v23_mhz}};
    sc.blockade_cutoff_mhz = 0.99 * std::min({v12_mhz, v13_mhz, v23_mhz});

    sc.initial_state.kind = InitialStateSpec::Kind::uniform_plus;
    sc.target = {GateTargetSpec::Kind::phase_n_qubit, 4};
    sc.gate_time_us = p.gate_time_us(scheme);
    sc.t_final_us = sc.gate_time_us;
    return sc;
}

// Inhomogeneous superatom chain (controls at -R, 0, +R; target at d). The
// modulation frequency stays locked to the central-pair strength, so growing
// R detunes the outer pairs from the antiblockade resonance.
inline Scenario make_superatom_chain(const TwoQubitParams& p, double radius_um)
{
    if (!p.c6_mhz_um6) throw std::invalid_argument("make_superatom_chain: needs C6 geometry");
    Scenario sc;
    sc.n_atoms = 4;
    const double v_center = vdw_strength_mhz(*p.c6_mhz_um6, p.d_ideal_um);

    DriveSpec control;
    control.kind = AmplitudeModulatedDrive{p.omega_m_strong_mhz, v_center};
    DriveSpec target;
    target.kind = ConstantDrive{p.omega2_mhz};
    sc.drives = {control, control, control, target};
    sc.interactions = superatom_layout(radius_um, p.d_ideal_um, *p.c6_mhz_um6);
    sc.blockade_cutoff_mhz = 1e6;  // control-control pairs only; >= 1e10 MHz in the scanned range

    sc.initial_state.kind = InitialStateSpec::Kind::uniform_plus;
    sc.target = {GateTargetSpec::Kind::phase_n_qubit, 4};
    sc.gate_time_us = 10.0;
    sc.t_final_us = 10.0;
    return sc;
}

// GateReport of the multiqubit presets (noiseless).
inline GateReport multiqubit_fidelity(int n_qubits, Scheme scheme,
                                      const TwoQubitParams& p = {},
                                      const ErrorReportOptions& opt = {})
{
    Scenario sc;
    if (n_qubits == 3)
        sc = make_three_qubit(scheme, p, p.interaction_mhz());
    else if (n_qubits == 4)
        sc = make_four_qubit(scheme, p, 100.0 * p.interaction_mhz(),
                             200.0 * p.interaction_mhz(), 500.0 * p.interaction_mhz());
    else
        throw std::invalid_argument("multiqubit_fidelity: n must be 3 or 4");
    return error_report(sc, opt);
}

// ---------------------------------------------------------------------------
// Campaign driver

struct CampaignPoint {
    double grid_value = 0.0;
    double mean = 0.0;
    double std_error = 0.0;  // sample stddev / sqrt(trials)
    int n_trials = 0;
};

struct CampaignResult {
    std::string name;
    std::string metric;  // what `mean` measures (an error scalar in [0,1])
    std::vector<CampaignPoint> points;
    std::vector<std::vector<double>> trial_values;  // [point][trial]
    std::uint64_t base_seed = 0;
    double aux_scalar = 0.0;  // campaign-specific extra (e.g. baseline intrinsic error)
};

template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int n_workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    workers.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& w : workers) w.join();
}

// Runs metric(point, trial_seed) over grid x trials. Trial seeds depend only
// on (base_seed, point, trial) and results land in indexed slots, so the
// outcome is bit-identical for any job count.
inline CampaignResult run_campaign(std::string name, std::string metric,
                                   const std::vector<double>& grid, int trials_per_point,
                                   std::uint64_t base_seed, int jobs,
                                   const std::function<double(std::size_t, std::uint64_t)>& fn)
{
    if (grid.empty()) throw std::invalid_argument("run_campaign: empty grid");
    if (trials_per_point < 1) throw std::invalid_argument("run_campaign: trials_per_point < 1");

    CampaignResult res;
    res.name = std::move(name);
    res.metric = std::move(metric);
    res.base_seed = base_seed;
    res.trial_values.assign(grid.size(), std::vector<double>(static_cast<std::size_t>(trials_per_point)));

    const std::size_t total = grid.size() * static_cast<std::size_t>(trials_per_point);
    parallel_for(total, jobs, [&](std::size_t flat) {
        const std::size_t pi = flat / static_cast<std::size_t>(trials_per_point);
        const std::size_t ti = flat % static_cast<std::size_t>(trials_per_point);
        res.trial_values[pi][ti] = fn(pi, trial_seed(base_seed, pi, ti));
    });

    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
        const auto& vals = res.trial_values[pi];
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(vals.size());
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        const double stderr_ =
            vals.size() > 1 ? std::sqrt(var / static_cast<double>(vals.size() - 1)) /
                                  std::sqrt(static_cast<double>(vals.size()))
                            : 0.0;
        res.points.push_back({grid[pi], mean, stderr_, static_cast<int>(vals.size())});
    }
    return res;
}

// ---------------------------------------------------------------------------
// Campaign specifications (presets and config files map onto this)

struct CampaignSpec {
    enum class Kind {
        relative_error_sweep,  // grid: dX/X on "T" | "omega2" | "V"
        intrinsic_scan,        // grid: scheme index; E_in at nominal T
        decay_scan,            // grid: lifetime in ms
        ddf_monte_carlo,       // grid: sigma_d in um
        doppler_monte_carlo,   // grid: T_a in uK
        blockade_baseline,     // grid: T_a in uK (pi-2pi-pi reference gate)
        radius_scan,           // grid: R in nm
    };

    Kind kind = Kind::relative_error_sweep;
    std::string name = "campaign";
    int scheme = 2;
    std::string parameter;         // for relative_error_sweep
    std::vector<double> grid;
    int trials_per_point = 201;
    std::uint64_t base_seed = 1;
    TwoQubitParams params;
    double baseline_rabi_mhz = 10.0;   // blockade_baseline pulse Rabi
    double tol_scale = 100.0;          // integration tolerance multiplier

    Scheme scheme_enum() const
    {
        if (scheme < 1 || scheme > 3) throw std::invalid_argument("CampaignSpec: scheme must be 1..3");
        return static_cast<Scheme>(scheme);
    }
};

namespace detail {

inline double fidelity_at_gate(const Scenario& sc, double tol_scale)
{
    SimOptions opt;
    opt.tol_scale = tol_scale;
    opt.n_samples = 4;
    const Trajectory traj = simulate_scenario(sc, opt);
    return build_gate_report(traj, sc).fidelity_at_gate_time;
}

inline double ideal_fidelity(const Scenario& sc, double tol_scale)
{
    return fidelity_at_gate(strip_noise(sc), tol_scale);
}

} // namespace detail

inline CampaignResult sweep_relative_error(const CampaignSpec& spec, int jobs = 1)
{
    const Scheme scheme = spec.scheme_enum();
    return run_campaign(spec.name, "gate_error", spec.grid, 1, spec.base_seed, jobs,
                        [&](std::size_t pi, std::uint64_t) {
                            const double rel = spec.grid[pi];
                            TwoQubitParams p = spec.params;
                            Scenario sc;
                            if (spec.parameter == "V") {
                                p.v_mhz = p.interaction_mhz() * (1.0 + rel);
                                p.c6_mhz_um6.reset();
                                sc = make_two_qubit(scheme, p);
                                // Modulation stays at the nominal resonance.
                                auto& am = std::get<AmplitudeModulatedDrive>(sc.drives[0].kind);
                                am.mod_freq_mhz = spec.params.interaction_mhz();
                                am.omega_max_mhz = spec.params.omega_m_mhz(scheme);
                            } else if (spec.parameter == "omega2") {
                                sc = make_two_qubit(scheme, p);
                                if (auto* c = std::get_if<ConstantDrive>(&sc.drives[1].kind))
                                    c->rabi_mhz *= 1.0 + rel;
                                else
                                    std::get<FrequencyModulatedDrive>(sc.drives[1].kind).rabi_mhz *=
                                        1.0 + rel;
                            } else if (spec.parameter == "T") {
                                sc = make_two_qubit(scheme, p);
                                sc.gate_time_us *= 1.0 + rel;
                                sc.t_final_us = sc.gate_time_us;
                            } else {
                                throw std::invalid_argument("sweep_relative_error: parameter must be T, omega2 or V");
                            }
                            return 1.0 - detail::fidelity_at_gate(sc, spec.tol_scale);
                        });
}

// E_in per scheme at the scheme's nominal gate time (grid = scheme indices).
inline CampaignResult intrinsic_scan(const CampaignSpec& spec, int jobs = 1)
{
    return run_campaign(spec.name, "E_in", spec.grid, 1, spec.base_seed, jobs,
                        [&](std::size_t pi, std::uint64_t) {
                            const auto scheme = static_cast<Scheme>(static_cast<int>(spec.grid[pi]));
                            const Scenario sc = make_two_qubit(scheme, spec.params);
                            return 1.0 - detail::fidelity_at_gate(sc, spec.tol_scale);
                        });
}

inline CampaignResult decay_error_scan(const CampaignSpec& spec, int jobs = 1)
{
    const Scheme scheme = spec.scheme_enum();
    const Scenario nominal = make_two_qubit(scheme, spec.params);
    const double f_ideal = detail::ideal_fidelity(nominal, spec.tol_scale);
    return run_campaign(spec.name, "E_de", spec.grid, 1, spec.base_seed, jobs,
                        [&, f_ideal](std::size_t pi, std::uint64_t) {
                            Scenario sc = nominal;
                            sc.noise.decay = DecaySpec{spec.grid[pi] * 1e3};  // ms -> us
                            return std::max(0.0, f_ideal - detail::fidelity_at_gate(sc, spec.tol_scale));
                        });
}

inline CampaignResult ddf_monte_carlo(const CampaignSpec& spec, int jobs = 1)
{
    const Scheme scheme = spec.scheme_enum();
    if (!spec.params.c6_mhz_um6)
        throw std::invalid_argument("ddf_monte_carlo: params need C6 geometry");
    const Scenario nominal = make_two_qubit(scheme, spec.params);
    const double f_ideal = detail::ideal_fidelity(nominal, spec.tol_scale);
    return run_campaign(spec.name, "E_dd", spec.grid, spec.trials_per_point, spec.base_seed, jobs,
                        [&, f_ideal](std::size_t pi, std::uint64_t seed) {
                            Scenario sc = nominal;
                            sc.noise.ddf_sigma_um = spec.grid[pi];
                            sc.rng_seed = seed;
                            SplitMix64 rng(seed);
                            const Scenario drawn = draw_disorder(sc, rng);
                            return std::max(0.0,
                                            f_ideal - detail::fidelity_at_gate(drawn, spec.tol_scale));
                        });
}

inline CampaignResult doppler_monte_carlo(const CampaignSpec& spec, int jobs = 1)
{
    const Scheme scheme = spec.scheme_enum();
    const Scenario nominal = make_two_qubit(scheme, spec.params);
    const double f_ideal = detail::ideal_fidelity(nominal, spec.tol_scale);
    return run_campaign(spec.name, "E_do", spec.grid, spec.trials_per_point, spec.base_seed, jobs,
                        [&, f_ideal](std::size_t pi, std::uint64_t seed) {
                            Scenario sc = nominal;
                            sc.noise.doppler = DopplerSpec{spec.grid[pi], spec.params.k_eff_per_m};
                            sc.rng_seed = seed;
                            SplitMix64 rng(seed);
                            const Scenario drawn = draw_disorder(sc, rng);
                            return std::max(0.0,
                                            f_ideal - detail::fidelity_at_gate(drawn, spec.tol_scale));
                        });
}

// ---------------------------------------------------------------------------
// pi - 2pi - pi Rydberg-blockade reference gate under Doppler sampling

namespace detail {

// Sequential resonant pulses: pi on the control, 2pi on the target, pi on
// the control again; Doppler phases accumulate with absolute time across the
// whole sequence.
inline double blockade_gate_fidelity(double v_mhz, double rabi_mhz, double delta1_mhz,
                                     double delta2_mhz, double tol_scale)
{
    const auto schemes = uniform_schemes(2);
    const double rabi = rabi_mhz * mhz_to_rad;
    const double v = v_mhz * mhz_to_rad;
    const double t1 = std::numbers::pi / rabi;   // pi pulse
    const double t2 = two_pi / rabi;             // 2pi pulse

    std::vector<SparseEntry> c1, c2, vv;
    const Matrix m1 = embed(level_op(schemes[0], Level::g1, Level::ryd), 0, schemes);
    const Matrix m2 = embed(level_op(schemes[1], Level::g1, Level::ryd), 1, schemes);
    const Matrix pv = pair_projector(Level::ryd, Level::ryd, 0, 1, schemes);
    for (Index c = 0; c < 9; ++c)
        for (Index r = 0; r < 9; ++r) {
            if (m1(r, c) != 0.0) c1.push_back({r, c, m1(r, c)});
            if (m2(r, c) != 0.0) c2.push_back({r, c, m2(r, c)});
            if (pv(r, c) != 0.0) vv.push_back({r, c, pv(r, c)});
        }

    const double d1 = delta1_mhz * mhz_to_rad;
    const double d2 = delta2_mhz * mhz_to_rad;

    auto window_h = [&](bool control_on, bool target_on) {
        std::vector<HamTerm> terms;
        if (control_on)
            terms.push_back({[rabi, d1](double t) {
                                 return 0.5 * rabi *
                                        (d1 == 0.0 ? Complex{1.0, 0.0}
                                                   : std::exp(imag_unit * (d1 * t)));
                             },
                             c1, true});
        if (target_on)
            terms.push_back({[rabi, d2](double t) {
                                 return 0.5 * rabi *
                                        (d2 == 0.0 ? Complex{1.0, 0.0}
                                                   : std::exp(imag_unit * (d2 * t)));
                             },
                             c2, true});
        terms.push_back({[v](double) { return Complex{v, 0.0}; }, vv, false});
        std::vector<Index> kept(9);
        for (Index i = 0; i < 9; ++i) kept[static_cast<std::size_t>(i)] = i;
        const double fmax = std::max({v, rabi, std::abs(d1), std::abs(d2)});
        return TimeHamiltonian(9, kept, std::move(terms), fmax);
    };

    Scenario shell;  // used only for the initial state / target embedding
    shell.n_atoms = 2;
    shell.drives = {DriveSpec{}, DriveSpec{}};
    shell.initial_state.kind = InitialStateSpec::Kind::cz_benchmark;
    shell.target = {GateTargetSpec::Kind::cz_two_qubit, 2};
    shell.t_final_us = 1.0;
    Vector psi = initial_state_vector(shell).amplitudes();

    const TimeHamiltonian stages[3] = {window_h(true, false), window_h(false, true),
                                       window_h(true, false)};
    const double bounds[4] = {0.0, t1, t1 + t2, t1 + t2 + t1};
    for (int s = 0; s < 3; ++s) {
        IntegratorConfig cfg;
        cfg.rel_tol = 1e-10 * tol_scale;
        cfg.abs_tol = 1e-12 * tol_scale;
        cfg.max_step = max_step_cap(stages[s].max_angular_freq());
        cfg.sample_times = {bounds[s + 1]};
        Vector out;
        Rhs rhs = [&stages, s](double t, const Vector& y, Vector& dy) {
            stages[s].apply(t, y, dy);
            dy *= -imag_unit;
        };
        integrate(rhs, bounds[s], bounds[s + 1], psi, cfg,
                  [&out](std::size_t, double, const Vector& y) { out = y; });
        psi = std::move(out);
    }

    // Ideal pi-2pi-pi phase pattern: every computational state except |00>
    // picks up -1.
    Matrix u_comp = -Matrix::Identity(4, 4);
    u_comp(0, 0) = 1.0;
    const Matrix u_full = lift_computational(u_comp, schemes);
    return fidelity_pure(psi, initial_state_vector(shell).amplitudes(), u_full);
}

} // namespace detail

inline CampaignResult blockade_baseline_doppler(const CampaignSpec& spec, int jobs = 1)
{
    const double v_mhz = spec.params.interaction_mhz();
    const double f_ideal =
        detail::blockade_gate_fidelity(v_mhz, spec.baseline_rabi_mhz, 0.0, 0.0, spec.tol_scale);
    DopplerSpec doppler_shell{1.0, spec.params.k_eff_per_m};
    CampaignResult res = run_campaign(
        spec.name, "E_do", spec.grid, spec.trials_per_point, spec.base_seed, jobs,
        [&, f_ideal](std::size_t pi, std::uint64_t seed) {
            DopplerSpec d = doppler_shell;
            d.temperature_uk = spec.grid[pi];
            const double sigma_mhz = doppler_sigma_rad(d) / mhz_to_rad;
            SplitMix64 rng(seed);
            const double d1 = sigma_mhz * rng.normal();
            const double d2 = sigma_mhz * rng.normal();
            const double f = detail::blockade_gate_fidelity(v_mhz, spec.baseline_rabi_mhz, d1, d2,
                                                            spec.tol_scale);
            return std::max(0.0, f_ideal - f);
        });
    res.aux_scalar = 1.0 - f_ideal;  // intrinsic blockade error of the reference gate
    return res;
}

inline CampaignResult superatom_radius_scan(const CampaignSpec& spec, int jobs = 1)
{
    return run_campaign(spec.name, "gate_error", spec.grid, 1, spec.base_seed, jobs,
                        [&](std::size_t pi, std::uint64_t) {
                            const double r_um = spec.grid[pi] * 1e-3;  // nm -> um
                            const Scenario sc = make_superatom_chain(spec.params, r_um);
                            return 1.0 - detail::fidelity_at_gate(sc, spec.tol_scale);
                        });
}

inline CampaignResult run_campaign_spec(const CampaignSpec& spec, int jobs = 1)
{
    switch (spec.kind) {
        case CampaignSpec::Kind::relative_error_sweep: return sweep_relative_error(spec, jobs);
        case CampaignSpec::Kind::intrinsic_scan:       return intrinsic_scan(spec, jobs);
        case CampaignSpec::Kind::decay_scan:           return decay_error_scan(spec, jobs);
        case CampaignSpec::Kind::ddf_monte_carlo:      return ddf_monte_carlo(spec, jobs);
        case CampaignSpec::Kind::doppler_monte_carlo:  return doppler_monte_carlo(spec, jobs);
        case CampaignSpec::Kind::blockade_baseline:    return blockade_baseline_doppler(spec, jobs);
        case CampaignSpec::Kind::radius_scan:          return superatom_radius_scan(spec, jobs);
    }
    throw std::logic_error("run_campaign_spec: unknown kind");
}

} // namespace rydsim
