#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rydsim/propagation.hpp"
#include "rydsim/rng.hpp"

namespace rydsim {

// Diagonal +-1 gate on the 2^n computational basis: -1 exactly at |01> for
// the two-qubit CZ and at |0...01> for the n-qubit phase gate (the same
// basis index in both conventions).
inline Matrix target_unitary(GateTargetSpec::Kind kind, int n_qubits)
{
    if (n_qubits < 2) throw std::invalid_argument("target_unitary: need at least 2 qubits");
    if (kind == GateTargetSpec::Kind::cz_two_qubit && n_qubits != 2)
        throw std::invalid_argument("target_unitary: cz target is two-qubit");
    const Index dim = Index{1} << n_qubits;
    Matrix u = Matrix::Identity(dim, dim);
    u(1, 1) = -1.0;
    return u;
}

inline Matrix target_unitary(const GateTargetSpec& t) { return target_unitary(t.kind, t.n_qubits); }

// Computational labels ("00", "01", ...) in basis-index order.
inline std::vector<std::string> computational_labels(int n_qubits)
{
    std::vector<std::string> out;
    for (Index c = 0; c < (Index{1} << n_qubits); ++c) {
        std::string s;
        for (int a = n_qubits - 1; a >= 0; --a) s += ((c >> a) & 1) ? '1' : '0';
        out.push_back(s);
    }
    return out;
}

inline Index computational_index(const SchemeList& schemes, const std::string& label)
{
    std::vector<int> lv(label.size());
    for (std::size_t a = 0; a < label.size(); ++a) {
        if (label[a] != '0' && label[a] != '1')
            throw std::invalid_argument("computational_index: label must be over {0,1}");
        lv[a] = label[a] - '0';
    }
    return basis_index(schemes, lv);
}

// Lift a 2^n computational operator into the full product space; identity
// outside the computational subspace.
inline Matrix lift_computational(const Matrix& u_comp, const SchemeList& schemes)
{
    const int n = static_cast<int>(schemes.size());
    const auto labels = computational_labels(n);
    if (u_comp.rows() != static_cast<Index>(labels.size()) || u_comp.rows() != u_comp.cols())
        throw std::invalid_argument("lift_computational: operator is not 2^n x 2^n");
    Matrix u = Matrix::Identity(space_dim(schemes), space_dim(schemes));
    std::vector<Index> full(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        full[i] = computational_index(schemes, labels[i]);
        u(full[i], full[i]) = 0.0;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            u(full[i], full[j]) = u_comp(static_cast<Index>(i), static_cast<Index>(j));
    return u;
}

// F = |<Psi(t)| U |psi0>|.
inline double fidelity_pure(const Vector& psi_t, const Vector& psi0, const Matrix& u_full)
{
    if (psi_t.size() != psi0.size() || u_full.rows() != psi_t.size() || u_full.cols() != psi_t.size())
        throw std::invalid_argument("fidelity_pure: dimension mismatch");
    return std::abs(psi_t.dot(u_full * psi0));
}

// sqrt(<psi_tgt| rho |psi_tgt>) with psi_tgt = U psi0; coincides with the
// pure-state overlap on rank-one densities.
inline double fidelity_mixed(const Matrix& rho_t, const Vector& psi0, const Matrix& u_full)
{
    if (rho_t.rows() != psi0.size() || u_full.rows() != psi0.size())
        throw std::invalid_argument("fidelity_mixed: dimension mismatch");
    const Vector tgt = u_full * psi0;
    const double p = std::real(tgt.dot(rho_t * tgt));
    return std::sqrt(std::max(0.0, p));
}

// Phase of a computational amplitude; empty when the amplitude is too small
// for the phase to be meaningful.
inline std::optional<double> phase_of(const Vector& state, const std::string& comp_label,
                                      const SchemeList& schemes)
{
    const Complex amp = state[computational_index(schemes, comp_label)];
    if (std::abs(amp) <= 1e-6) return std::nullopt;
    return std::arg(amp);
}

// ---------------------------------------------------------------------------
// Gate report

struct GateReport {
    std::vector<double> times_us;
    std::vector<double> fidelity;
    std::vector<std::string> comp_labels;
    std::vector<std::vector<double>> populations;  // [label][sample]
    std::vector<std::vector<double>> phases;       // [label][sample], NaN = undefined
    std::map<std::string, double> errors;          // E_in and per-factor errors as applicable
    double gate_time_us = 0.0;
    double fidelity_at_gate_time = 0.0;
    double norm_drift = 0.0;

    double min_fidelity_in_window(double t_lo_us, double t_hi_us) const
    {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < times_us.size(); ++k)
            if (times_us[k] >= t_lo_us && times_us[k] <= t_hi_us) m = std::min(m, fidelity[k]);
        return m;
    }

    std::optional<double> phase_at_gate_time(const std::string& label) const
    {
        std::size_t li = 0;
        while (li < comp_labels.size() && comp_labels[li] != label) ++li;
        if (li == comp_labels.size()) return std::nullopt;
        const std::size_t k = nearest_sample(gate_time_us);
        const double p = phases[li][k];
        if (std::isnan(p)) return std::nullopt;
        return p;
    }

    std::size_t nearest_sample(double t_us) const
    {
        std::size_t best = 0;
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < times_us.size(); ++k) {
            const double dk = std::abs(times_us[k] - t_us);
            if (dk < d) { d = dk; best = k; }
        }
        return best;
    }
};

inline GateReport build_gate_report(const Trajectory& traj, const Scenario& sc)
{
    const SchemeList schemes = sc.schemes();
    const Vector psi0 = initial_state_vector(sc).amplitudes();
    const Matrix u_full = lift_computational(target_unitary(sc.target), schemes);
    const auto labels = computational_labels(sc.n_atoms);

    GateReport rep;
    rep.comp_labels = labels;
    rep.gate_time_us = sc.gate_time();
    rep.norm_drift = traj.final_drift;
    rep.populations.assign(labels.size(), {});
    rep.phases.assign(labels.size(), {});

    std::vector<Index> idx(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) idx[i] = computational_index(schemes, labels[i]);
    const Index ref = idx[0];  // |0...0> anchors phases of open-system runs

    for (std::size_t k = 0; k < traj.size(); ++k) {
        rep.times_us.push_back(traj.times_s[k] / us_to_s);
        if (traj.density) {
            const Matrix& rho = traj.densities[k];
            rep.fidelity.push_back(fidelity_mixed(rho, psi0, u_full));
            for (std::size_t i = 0; i < labels.size(); ++i) {
                rep.populations[i].push_back(std::real(rho(idx[i], idx[i])));
                const Complex coh = rho(idx[i], ref);
                rep.phases[i].push_back(std::abs(coh) > 1e-6 ? std::arg(coh)
                                                             : std::numeric_limits<double>::quiet_NaN());
            }
        } else {
            const Vector& psi = traj.states[k];
            rep.fidelity.push_back(fidelity_pure(psi, psi0, u_full));
            for (std::size_t i = 0; i < labels.size(); ++i) {
                const Complex amp = psi[idx[i]];
                rep.populations[i].push_back(std::norm(amp));
                rep.phases[i].push_back(std::abs(amp) > 1e-6 ? std::arg(amp)
                                                             : std::numeric_limits<double>::quiet_NaN());
            }
        }
    }

    rep.fidelity_at_gate_time = rep.fidelity[rep.nearest_sample(rep.gate_time_us)];
    return rep;
}

// ---------------------------------------------------------------------------
// Error isolation

// Noiseless twin of a scenario: no decay (and hence no leak level), ideal
// interatomic distance, no Doppler shifts.
inline Scenario strip_noise(const Scenario& sc)
{
    Scenario nl = sc;
    nl.noise = NoiseSpec{};
    for (auto& d : nl.drives) d.doppler_shift_mhz = 0.0;
    if (nl.interactions.ddf) nl.interactions.ddf->d_actual_um = nl.interactions.ddf->d_ideal_um;
    return nl;
}

// One static-disorder draw applied to a scenario: Gaussian interatomic
// distance (resampled when nonpositive) and Gaussian Doppler detunings.
inline Scenario draw_disorder(const Scenario& sc, SplitMix64& rng)
{
    Scenario out = sc;
    if (sc.noise.ddf_sigma_um) {
        if (!out.interactions.ddf)
            throw std::invalid_argument("draw_disorder: ddf sigma set but no ddf pair configured");
        auto& f = *out.interactions.ddf;
        double d = 0.0;
        do {
            d = f.d_ideal_um + *sc.noise.ddf_sigma_um * rng.normal();
        } while (d <= 0.0);
        f.d_actual_um = d;
    }
    if (sc.noise.doppler) {
        const double sigma_mhz = doppler_sigma_rad(*sc.noise.doppler) / mhz_to_rad;
        for (auto& d : out.drives) d.doppler_shift_mhz = sigma_mhz * rng.normal();
    }
    return out;
}

struct ErrorReportOptions {
    SimOptions sim;
    bool isolate_each_factor = true;
    Trajectory* capture = nullptr;  // receives the as-configured run when set
};

// Runs the scenario as configured plus a noiseless reference, and reports
// E_in = 1 - F_ideal(T) together with per-factor errors
// E_x = max(0, F_ideal(T) - F_x(T)), each factor applied alone.
inline GateReport error_report(const Scenario& sc, const ErrorReportOptions& opt = {})
{
    SplitMix64 rng(sc.rng_seed);
    const Scenario drawn = draw_disorder(sc, rng);
    const Scenario ideal = strip_noise(sc);

    const Trajectory traj = simulate_scenario(drawn, opt.sim);
    GateReport rep = build_gate_report(traj, drawn);
    if (opt.capture) *opt.capture = traj;

    const Trajectory traj_nl = simulate_scenario(ideal, opt.sim);
    const GateReport rep_nl = build_gate_report(traj_nl, ideal);
    const double f_ideal = rep_nl.fidelity_at_gate_time;
    rep.errors["E_in"] = std::max(0.0, 1.0 - f_ideal);

    struct Factor {
        const char* key;
        bool active;
    };
    const Factor factors[] = {
        {"E_de", sc.noise.decay.has_value()},
        {"E_dd", sc.noise.ddf_sigma_um.has_value() ||
                     (sc.interactions.ddf &&
                      sc.interactions.ddf->d_actual_um != sc.interactions.ddf->d_ideal_um)},
        {"E_do", sc.noise.doppler.has_value() ||
                     std::any_of(sc.drives.begin(), sc.drives.end(),
                                 [](const DriveSpec& d) { return d.doppler_shift_mhz != 0.0; })},
    };
    int n_active = 0;
    for (const auto& f : factors) n_active += f.active ? 1 : 0;

    for (const auto& f : factors) {
        if (!f.active) continue;
        double f_noisy = 0.0;
        if (n_active == 1 || !opt.isolate_each_factor) {
            f_noisy = rep.fidelity_at_gate_time;
        } else {
            // Rerun with only this factor active.
            Scenario iso = ideal;
            iso.rng_seed = sc.rng_seed;
            if (std::string(f.key) == "E_de") {
                iso.noise.decay = sc.noise.decay;
            } else if (std::string(f.key) == "E_dd") {
                iso.interactions.ddf = drawn.interactions.ddf;  // keeps the drawn distance
            } else {
                for (int a = 0; a < sc.n_atoms; ++a)
                    iso.drives[a].doppler_shift_mhz = drawn.drives[a].doppler_shift_mhz;
            }
            const Trajectory t = simulate_scenario(iso, opt.sim);
            f_noisy = build_gate_report(t, iso).fidelity_at_gate_time;
        }
        rep.errors[f.key] = std::max(0.0, f_ideal - f_noisy);
    }
    return rep;
}

} // namespace rydsim
