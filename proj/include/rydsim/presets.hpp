#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rydsim/campaigns.hpp"

namespace rydsim {

// Frozen named benchmark scenarios and campaigns. Changing a preset means
// adding a new name.
struct Preset {
    std::string name;
    std::string summary;
    std::vector<std::pair<std::string, Scenario>> simulations;
    std::vector<std::pair<std::string, CampaignSpec>> campaigns;

    bool is_simulation() const { return !simulations.empty(); }
};

namespace preset_params {

// Dimensionless two-qubit working point: Omega_2/2pi = 1 MHz,
// V = w = 500 Omega_2, strong drive 100 Omega_2.
inline TwoQubitParams dimensionless()
{
    return TwoQubitParams{};
}

// 70S pair at d = 4.8 um with the modulation locked to an integer multiple
// of Omega_2 (V/2pi ~ 70 MHz), used for the intrinsic-error and decay scans.
inline TwoQubitParams n70_round()
{
    TwoQubitParams p;
    p.omega2_mhz = 0.1;
    p.v_mhz = 70.0;
    p.omega_m_strong_mhz = 10.0;
    return p;
}

// 70S pair with the interaction derived from C6 = 2pi x 858.4 GHz um^6 at
// d = 4.8 um (V/2pi = 70.18 MHz), carrying the geometry for distance disorder.
inline TwoQubitParams n70_geometry()
{
    TwoQubitParams p = n70_round();
    p.c6_mhz_um6 = 858.4e3;
    p.d_ideal_um = 4.8;
    return p;
}

// 100S pair, C6 = 2pi x 56.2 THz um^6 at d = 9.6 um (V/2pi = 71.79 MHz).
inline TwoQubitParams n100_geometry()
{
    TwoQubitParams p = n70_round();
    p.c6_mhz_um6 = 56.2e6;
    p.d_ideal_um = 9.6;
    return p;
}

// Doppler parameter sets (counterpropagating two-photon drive,
// k_eff = 8.76e6 1/m).
inline TwoQubitParams doppler_set_a()
{
    TwoQubitParams p;
    p.omega2_mhz = 0.1;
    p.v_mhz = 70.18;
    p.omega_m_strong_mhz = 10.0;
    return p;
}

inline TwoQubitParams doppler_set_b()
{
    TwoQubitParams p;
    p.omega2_mhz = 1.0;
    p.v_mhz = 467.0;
    p.omega_m_strong_mhz = 80.0;
    return p;
}

inline TwoQubitParams doppler_set_c()
{
    TwoQubitParams p = doppler_set_b();
    p.omega2_mhz = 5.0;
    return p;
}

} // namespace preset_params

inline std::vector<Preset> preset_library()
{
    namespace pp = preset_params;
    std::vector<Preset> lib;

    auto lzs_extended = [](Scheme s, const TwoQubitParams& p, double factor) {
        Scenario sc = make_two_qubit(s, p, factor);
        return sc;
    };

    {
        Preset p{"fig2",
                 "two-qubit CZ, cyclic Rabi + Raman scheme (Omega_m = 2 sqrt(3) Omega_2)",
                 {},
                 {}};
        p.simulations.emplace_back("fig2", make_two_qubit(Scheme::cyclic, pp::dimensionless()));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig3", "two-qubit CZ, strong control drive (Omega_m = 100 Omega_2)", {}, {}};
        p.simulations.emplace_back("fig3", make_two_qubit(Scheme::strong, pp::dimensionless()));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig4", "two-qubit CZ with the frequency-modulated target drive", {}, {}};
        p.simulations.emplace_back("fig4", lzs_extended(Scheme::lzs, pp::dimensionless(), 4.5 / 4.0));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig5", "relative-error robustness sweeps in T, Omega_2 and V", {}, {}};
        for (int s = 1; s <= 3; ++s)
            for (const char* par : {"T", "omega2", "V"}) {
                CampaignSpec cs;
                cs.kind = CampaignSpec::Kind::relative_error_sweep;
                cs.name = std::string("fig5_") + par + "_scheme" + std::to_string(s);
                cs.scheme = s;
                cs.parameter = par;
                for (int k = -10; k <= 10; ++k) cs.grid.push_back(0.01 * k);
                cs.trials_per_point = 1;
                cs.params = pp::dimensionless();
                p.campaigns.emplace_back(cs.name, cs);
            }
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig6", "intrinsic gate errors of the three schemes at V/2pi ~ 70 MHz", {}, {}};
        CampaignSpec cs;
        cs.kind = CampaignSpec::Kind::intrinsic_scan;
        cs.name = "fig6_intrinsic";
        cs.grid = {1.0, 2.0, 3.0};
        cs.trials_per_point = 1;
        cs.params = pp::n70_round();
        cs.tol_scale = 1.0;
        p.campaigns.emplace_back(cs.name, cs);
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig7", "decay error vs Rydberg lifetime (Lindblad runs)", {}, {}};
        for (int s = 1; s <= 3; ++s) {
            CampaignSpec cs;
            cs.kind = CampaignSpec::Kind::decay_scan;
            cs.name = "fig7_scheme" + std::to_string(s);
            cs.scheme = s;
            cs.grid = {0.1, 0.2, 0.4, 1.0, 2.0, 4.0, 10.0};  // lifetimes in ms
            cs.trials_per_point = 1;
            cs.params = pp::n70_round();
            p.campaigns.emplace_back(cs.name, cs);
        }
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig8", "distance-disorder (dipole-dipole force) Monte Carlo", {}, {}};
        for (bool n100 : {false, true})
            for (int s = 1; s <= 3; ++s) {
                CampaignSpec cs;
                cs.kind = CampaignSpec::Kind::ddf_monte_carlo;
                cs.name = std::string("fig8_") + (n100 ? "n100" : "n70") + "_scheme" + std::to_string(s);
                cs.scheme = s;
                cs.grid = {0.005, 0.01, 0.02, 0.05, 0.1, 0.14};  // sigma_d in um
                cs.trials_per_point = 201;
                cs.base_seed = 801;
                cs.params = n100 ? pp::n100_geometry() : pp::n70_geometry();
                p.campaigns.emplace_back(cs.name, cs);
            }
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig9a", "Doppler dephasing vs temperature, parameter sets A and B", {}, {}};
        for (bool set_b : {false, true})
            for (int s = 1; s <= 3; ++s) {
                CampaignSpec cs;
                cs.kind = CampaignSpec::Kind::doppler_monte_carlo;
                cs.name = std::string("fig9a_") + (set_b ? "setB" : "setA") + "_scheme" +
                          std::to_string(s);
                cs.scheme = s;
                cs.grid = {2.0, 10.0, 25.0, 46.0, 75.0, 100.0};  // T_a in uK
                cs.trials_per_point = 201;
                cs.base_seed = 901;
                cs.params = set_b ? pp::doppler_set_b() : pp::doppler_set_a();
                p.campaigns.emplace_back(cs.name, cs);
            }
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig9b",
                 "Doppler dephasing at Omega_2/2pi = 5 MHz vs the pi-2pi-pi blockade gate",
                 {},
                 {}};
        for (int s = 1; s <= 2; ++s) {
            CampaignSpec cs;
            cs.kind = CampaignSpec::Kind::doppler_monte_carlo;
            cs.name = "fig9b_scheme" + std::to_string(s);
            cs.scheme = s;
            cs.grid = {5.0, 10.0, 20.0, 30.0, 40.0, 50.0};
            cs.trials_per_point = 201;
            cs.base_seed = 902;
            cs.params = pp::doppler_set_c();
            p.campaigns.emplace_back(cs.name, cs);
        }
        CampaignSpec cs;
        cs.kind = CampaignSpec::Kind::blockade_baseline;
        cs.name = "fig9b_blockade_baseline";
        cs.grid = {5.0, 10.0, 20.0, 30.0, 40.0, 50.0};
        cs.trials_per_point = 201;
        cs.base_seed = 902;
        cs.params = pp::doppler_set_c();
        cs.baseline_rabi_mhz = 10.0;
        p.campaigns.emplace_back(cs.name, cs);
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig9c", "intrinsic error of the frequency-modulated scheme at Omega_2/2pi = 5 MHz",
                 {}, {}};
        p.simulations.emplace_back("fig9c", make_two_qubit(Scheme::lzs, pp::doppler_set_c()));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig10", "three-qubit phase gate, strong drive", {}, {}};
        p.simulations.emplace_back(
            "fig10", make_three_qubit(Scheme::strong, pp::dimensionless(), 500.0));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig10-lzs", "three-qubit phase gate with the frequency-modulated target", {}, {}};
        Scenario sc = make_three_qubit(Scheme::lzs, pp::dimensionless(), 500.0);
        sc.t_final_us *= 4.5 / 4.0;
        p.simulations.emplace_back("fig10-lzs", sc);
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig11", "four-qubit phase gate with blockaded controls", {}, {}};
        p.simulations.emplace_back(
            "fig11", make_four_qubit(Scheme::strong, pp::dimensionless(), 5e4, 1e5, 2.5e5));
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig11-lzs", "four-qubit phase gate, frequency-modulated target", {}, {}};
        Scenario sc = make_four_qubit(Scheme::lzs, pp::dimensionless(), 5e4, 1e5, 2.5e5);
        sc.t_final_us *= 4.5 / 4.0;
        p.simulations.emplace_back("fig11-lzs", sc);
        lib.push_back(std::move(p));
    }
    {
        Preset p{"fig12", "gate fidelity vs control-ensemble radius (superatom chain)", {}, {}};
        CampaignSpec cs;
        cs.kind = CampaignSpec::Kind::radius_scan;
        cs.name = "fig12_radius";
        cs.grid = {1, 2.5, 5, 7.5, 10, 12.5, 15, 20, 25, 30, 40};  // nm
        cs.trials_per_point = 1;
        cs.params = pp::n100_geometry();
        p.campaigns.emplace_back(cs.name, cs);
        lib.push_back(std::move(p));
    }
    {
        // Fast decay scenario used by the regression checker: dimensionless
        // scheme 1 with a lifetime short enough that E_de is O(1e-2).
        Preset p{"check-decay", "small open-system run for golden regression checks", {}, {}};
        Scenario sc = make_two_qubit(Scheme::cyclic, pp::dimensionless());
        sc.noise.decay = DecaySpec{50.0};  // us, dimensionless units
        p.simulations.emplace_back("check-decay", sc);
        lib.push_back(std::move(p));
    }
    return lib;
}

inline const Preset* find_preset(const std::string& name)
{
    static const std::vector<Preset> lib = preset_library();
    for (const auto& p : lib)
        if (p.name == name) return &p;
    return nullptr;
}

} // namespace rydsim
