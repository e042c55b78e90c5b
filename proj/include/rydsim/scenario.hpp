#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rydsim/operators.hpp"

namespace rydsim {

// ---------------------------------------------------------------------------
// Drives

struct ConstantDrive {
    double rabi_mhz = 0.0;
};

// Omega(t) = omega_max * cos(mod_freq * t); the modulation that offsets the
// Rydberg-Rydberg interaction on the control atom.
struct AmplitudeModulatedDrive {
    double omega_max_mhz = 0.0;
    double mod_freq_mhz  = 0.0;
};

// Constant coupling plus a periodically modulated detuning
// Delta(t) = delta0 + delta_bar * cos(omega_bar * t) on |r>.
struct FrequencyModulatedDrive {
    double rabi_mhz      = 0.0;
    double delta0_mhz    = 0.0;
    double delta_bar_mhz = 0.0;
    double omega_bar_mhz = 0.0;
};

struct DriveSpec {
    std::variant<ConstantDrive, AmplitudeModulatedDrive, FrequencyModulatedDrive> kind =
        ConstantDrive{};
    double doppler_shift_mhz = 0.0;  // static per-run laser detuning seen by the atom

    void validate() const
    {
        auto finite = [](double x) { return std::isfinite(x); };
        if (!finite(doppler_shift_mhz)) throw std::invalid_argument("DriveSpec: non-finite doppler shift");
        if (const auto* c = std::get_if<ConstantDrive>(&kind)) {
            if (!finite(c->rabi_mhz)) throw std::invalid_argument("DriveSpec: non-finite rabi");
        } else if (const auto* a = std::get_if<AmplitudeModulatedDrive>(&kind)) {
            if (!finite(a->omega_max_mhz) || !finite(a->mod_freq_mhz))
                throw std::invalid_argument("DriveSpec: non-finite amplitude modulation");
            if (!(a->mod_freq_mhz > 0.0))
                throw std::invalid_argument("DriveSpec: mod_freq must be positive");
        } else if (const auto* m = std::get_if<FrequencyModulatedDrive>(&kind)) {
            if (!finite(m->rabi_mhz) || !finite(m->delta0_mhz) || !finite(m->delta_bar_mhz) ||
                !finite(m->omega_bar_mhz))
                throw std::invalid_argument("DriveSpec: non-finite frequency modulation");
            if (!(m->omega_bar_mhz > 0.0))
                throw std::invalid_argument("DriveSpec: omega_bar must be positive");
        }
    }

    double peak_rabi_mhz() const
    {
        if (const auto* c = std::get_if<ConstantDrive>(&kind)) return std::abs(c->rabi_mhz);
        if (const auto* a = std::get_if<AmplitudeModulatedDrive>(&kind)) return std::abs(a->omega_max_mhz);
        return std::abs(std::get<FrequencyModulatedDrive>(kind).rabi_mhz);
    }

    bool frequency_modulated() const { return std::holds_alternative<FrequencyModulatedDrive>(kind); }
};

// ---------------------------------------------------------------------------
// Interactions

inline double vdw_strength_mhz(double c6_mhz_um6, double d_um)
{
    if (!(d_um > 0.0)) throw std::invalid_argument("vdw_strength: distance must be positive");
    return c6_mhz_um6 / std::pow(d_um, 6);
}

// dV/dd at d_ideal, the coefficient of the dipole-dipole-force disorder term.
inline double ddf_gradient_mhz_per_um(double c6_mhz_um6, double d_ideal_um)
{
    if (!(d_ideal_um > 0.0)) throw std::invalid_argument("ddf_gradient: distance must be positive");
    return -6.0 * c6_mhz_um6 / std::pow(d_ideal_um, 7);
}

struct PairStrength {
    int i = 1, j = 2;     // 1-based atom labels, i < j
    double v_mhz = 0.0;
};

struct C6Geometry {
    double c6_mhz_um6 = 0.0;
    std::vector<double> positions_um;  // one per atom, on a line
};

// Static distance disorder on one pair: the interaction keeps its ideal
// strength while the |rr><rr| energy is shifted by dV/dd * (d - d_ideal).
struct DdfSpec {
    int i = 1, j = 2;
    double c6_mhz_um6  = 0.0;
    double d_ideal_um  = 0.0;
    double d_actual_um = 0.0;
};

struct InteractionSpec {
    std::vector<PairStrength> pairs;
    std::optional<C6Geometry> geometry;  // alternative source for `pairs`
    std::optional<DdfSpec> ddf;

    // Explicit pairs plus the ones implied by geometry.
    std::vector<PairStrength> resolved_pairs() const
    {
        std::vector<PairStrength> out = pairs;
        if (geometry) {
            const auto& pos = geometry->positions_um;
            for (int a = 0; a < static_cast<int>(pos.size()); ++a)
                for (int b = a + 1; b < static_cast<int>(pos.size()); ++b) {
                    const double d = std::abs(pos[b] - pos[a]);
                    out.push_back({a + 1, b + 1, vdw_strength_mhz(geometry->c6_mhz_um6, d)});
                }
        }
        for (const auto& p : out) {
            if (p.i == p.j) throw std::invalid_argument("InteractionSpec: pair with i == j");
            if (!(p.v_mhz >= 0.0))
                throw std::invalid_argument("InteractionSpec: negative van der Waals strength");
        }
        return out;
    }
};

// One-dimensional superatom chain: control atoms at -R, 0, +R and the target
// at d_target. Pairwise strengths follow from the C6 power law.
inline InteractionSpec superatom_layout(double radius_um, double d_target_um, double c6_mhz_um6)
{
    if (!(radius_um > 0.0) || !(radius_um < d_target_um))
        throw std::invalid_argument("superatom_layout: require 0 < R < d_target");
    InteractionSpec spec;
    spec.geometry = C6Geometry{c6_mhz_um6, {-radius_um, 0.0, radius_um, d_target_um}};
    return spec;
}

// ---------------------------------------------------------------------------
// Noise

struct DecaySpec {
    double tau_us = 0.0;  // Rydberg-state lifetime; +inf allowed (rates -> 0)
};

struct DopplerSpec {
    double temperature_uk = 0.0;
    double k_eff_per_m    = 8.76e6;
    double atom_mass_kg   = rb87_mass;
};

struct NoiseSpec {
    std::optional<DecaySpec> decay;
    std::optional<double> ddf_sigma_um;
    std::optional<DopplerSpec> doppler;

    void validate() const
    {
        if (decay && !(decay->tau_us > 0.0))
            throw std::invalid_argument("NoiseSpec: lifetime must be positive");
        if (ddf_sigma_um && !(*ddf_sigma_um >= 0.0))
            throw std::invalid_argument("NoiseSpec: sigma_d must be nonnegative");
        if (doppler && !(doppler->temperature_uk > 0.0))
            throw std::invalid_argument("NoiseSpec: temperature must be positive");
    }
};

// Standard deviation of the Doppler detuning, k_eff * sqrt(k_B T / m), rad/s.
inline double doppler_sigma_rad(const DopplerSpec& d)
{
    const double dv = std::sqrt(k_boltzmann * d.temperature_uk * 1e-6 / d.atom_mass_kg);
    return d.k_eff_per_m * dv;
}

// ---------------------------------------------------------------------------
// Gate target / initial state

struct GateTargetSpec {
    enum class Kind { cz_two_qubit, phase_n_qubit };
    Kind kind   = Kind::cz_two_qubit;
    int n_qubits = 2;
};

struct InitialStateSpec {
    // cz_benchmark: sqrt(.4)|00> + sqrt(.3)|01> + sqrt(.2)|10> + sqrt(.1)|11>
    // uniform_plus: tensor product of (|0>+|1>)/sqrt(2)
    // basis:        a single computational product state, e.g. "11"
    // amplitudes:   explicit amplitudes over the 2^n computational basis
    enum class Kind { cz_benchmark, uniform_plus, basis, amplitudes };
    Kind kind = Kind::cz_benchmark;
    std::string basis_label;
    std::vector<Complex> amplitudes;
};

// ---------------------------------------------------------------------------
// Two-photon reduction (appendix-level inputs)

struct StarkTerm {
    int atom = 1;              // 1-based
    Level level = Level::g1;   // g1 or ryd
    double amp_mhz = 0.0;
    bool cos_sq_modulated = false;  // amplitude follows cos^2(w t) of the atom's AM drive
};

struct TwoPhotonInputs {
    double omega_1p_mhz = 0.0, omega_m_tilde_mhz = 0.0, delta_1_mhz = 0.0;
    double omega_2p_mhz = 0.0, omega_2r_mhz = 0.0, delta_2_mhz = 0.0;
    bool include_stark = false;
};

struct TwoPhotonReduction {
    double omega_m_mhz = 0.0;
    double omega_2_mhz = 0.0;
    std::vector<StarkTerm> stark_terms;
    bool detuning_ratio_ok = true;  // Delta >= 5x every Rabi input
};

inline TwoPhotonReduction reduce_two_photon(const TwoPhotonInputs& in)
{
    TwoPhotonReduction out;
    out.omega_m_mhz = in.omega_m_tilde_mhz * in.omega_1p_mhz / (2.0 * in.delta_1_mhz);
    out.omega_2_mhz = in.omega_2r_mhz * in.omega_2p_mhz / (2.0 * in.delta_2_mhz);
    const double r1 = std::max(std::abs(in.omega_1p_mhz), std::abs(in.omega_m_tilde_mhz));
    const double r2 = std::max(std::abs(in.omega_2r_mhz), std::abs(in.omega_2p_mhz));
    out.detuning_ratio_ok = (r1 == 0.0 || std::abs(in.delta_1_mhz) >= 5.0 * r1) &&
                            (r2 == 0.0 || std::abs(in.delta_2_mhz) >= 5.0 * r2);
    if (in.include_stark) {
        out.stark_terms = {
            {1, Level::g1, in.omega_1p_mhz * in.omega_1p_mhz / (4.0 * in.delta_1_mhz), false},
            {1, Level::ryd, in.omega_m_tilde_mhz * in.omega_m_tilde_mhz / (4.0 * in.delta_1_mhz), true},
            {2, Level::g1, in.omega_2p_mhz * in.omega_2p_mhz / (4.0 * in.delta_2_mhz), false},
            {2, Level::ryd, in.omega_2r_mhz * in.omega_2r_mhz / (4.0 * in.delta_2_mhz), false},
        };
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scenario

struct Scenario {
    int n_atoms = 2;
    std::vector<DriveSpec> drives;   // one per atom
    InteractionSpec interactions;
    NoiseSpec noise;
    InitialStateSpec initial_state;
    double t_final_us   = 0.0;
    double gate_time_us = 0.0;       // 0 -> t_final
    GateTargetSpec target;
    std::uint64_t rng_seed = 0;
    std::vector<StarkTerm> stark_terms;

    // Pairs at or above this interaction strength are treated as perfectly
    // blockaded: doubly excited states of such a pair are projected out of
    // the integration basis. Used by the superatom presets, where
    // control-control strengths exceed every other scale by many orders.
    std::optional<double> blockade_cutoff_mhz;

    double gate_time() const { return gate_time_us > 0.0 ? gate_time_us : t_final_us; }

    // Leak level is present exactly when decay is modeled.
    SchemeList schemes() const { return uniform_schemes(n_atoms, noise.decay.has_value()); }

    void validate() const
    {
        if (n_atoms < 1 || n_atoms > 5) throw std::invalid_argument("Scenario: unsupported atom count");
        if (static_cast<int>(drives.size()) != n_atoms)
            throw std::invalid_argument("Scenario: need one drive per atom");
        for (const auto& d : drives) d.validate();
        noise.validate();
        for (const auto& p : interactions.resolved_pairs())
            if (p.i < 1 || p.j < 1 || p.i > n_atoms || p.j > n_atoms)
                throw std::invalid_argument("Scenario: interaction pair references invalid atom");
        if (interactions.ddf) {
            const auto& f = *interactions.ddf;
            if (f.i < 1 || f.j < 1 || f.i > n_atoms || f.j > n_atoms || f.i == f.j)
                throw std::invalid_argument("Scenario: ddf pair references invalid atoms");
            if (!(f.d_ideal_um > 0.0))
                throw std::invalid_argument("Scenario: ddf ideal distance must be positive");
        }
        for (const auto& s : stark_terms) {
            if (s.atom < 1 || s.atom > n_atoms)
                throw std::invalid_argument("Scenario: stark term references invalid atom");
            if (s.level != Level::g1 && s.level != Level::ryd)
                throw std::invalid_argument("Scenario: stark term must act on |1> or |r>");
        }
        if (!(t_final_us > 0.0)) throw std::invalid_argument("Scenario: t_final must be positive");
        if (target.n_qubits != n_atoms)
            throw std::invalid_argument("Scenario: gate target size differs from atom count");
    }
};

// Scenario initial state as a normalized vector in the full product space.
inline StateVector initial_state_vector(const Scenario& sc)
{
    const SchemeList schemes = sc.schemes();
    const Index dim = space_dim(schemes);
    const int n = sc.n_atoms;
    Vector psi = Vector::Zero(dim);

    auto comp_index = [&](const std::string& bits) {
        if (static_cast<int>(bits.size()) != n)
            throw std::invalid_argument("initial state label length differs from atom count");
        std::vector<int> lv(n);
        for (int a = 0; a < n; ++a) {
            if (bits[a] != '0' && bits[a] != '1')
                throw std::invalid_argument("initial state label must be over {0,1}");
            lv[a] = bits[a] - '0';
        }
        return basis_index(schemes, lv);
    };

    switch (sc.initial_state.kind) {
        case InitialStateSpec::Kind::cz_benchmark: {
            if (n != 2) throw std::invalid_argument("cz_benchmark initial state needs 2 atoms");
            psi[comp_index("00")] = std::sqrt(0.4);
            psi[comp_index("01")] = std::sqrt(0.3);
            psi[comp_index("10")] = std::sqrt(0.2);
            psi[comp_index("11")] = std::sqrt(0.1);
            break;
        }
        case InitialStateSpec::Kind::uniform_plus: {
            const double amp = std::pow(2.0, -0.5 * n);
            for (Index c = 0; c < (Index{1} << n); ++c) {
                std::vector<int> lv(n);
                for (int a = 0; a < n; ++a) lv[a] = static_cast<int>((c >> (n - 1 - a)) & 1);
                psi[basis_index(schemes, lv)] = amp;
            }
            break;
        }
        case InitialStateSpec::Kind::basis:
            psi[comp_index(sc.initial_state.basis_label)] = 1.0;
            break;
        case InitialStateSpec::Kind::amplitudes: {
            const auto& amps = sc.initial_state.amplitudes;
            if (static_cast<Index>(amps.size()) != (Index{1} << n))
                throw std::invalid_argument("initial state amplitude count != 2^n");
            for (Index c = 0; c < static_cast<Index>(amps.size()); ++c) {
                std::vector<int> lv(n);
                for (int a = 0; a < n; ++a) lv[a] = static_cast<int>((c >> (n - 1 - a)) & 1);
                psi[basis_index(schemes, lv)] = amps[static_cast<std::size_t>(c)];
            }
            const double nrm = psi.norm();
            if (nrm <= 0.0) throw std::invalid_argument("initial state has zero norm");
            psi /= nrm;
            break;
        }
    }
    return StateVector(psi);
}

} // namespace rydsim
