#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "rydsim/campaigns.hpp"

namespace rydsim {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_keys(const json& j, const std::string& where,
                         const std::set<std::string>& required,
                         const std::set<std::string>& optional = {})
{
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : j.items())
        if (!required.count(key) && !optional.count(key))
            throw ConfigError(where + ": unknown key '" + key + "'");
    for (const auto& key : required)
        if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
}

inline double get_num(const json& j, const std::string& where, const std::string& key)
{
    if (!j.at(key).is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return j.at(key).get<double>();
}

} // namespace detail

// ---------------------------------------------------------------------------
// DriveSpec

inline json to_json(const DriveSpec& d)
{
    json j;
    if (const auto* c = std::get_if<ConstantDrive>(&d.kind)) {
        j["kind"] = "constant";
        j["rabi_mhz"] = c->rabi_mhz;
    } else if (const auto* a = std::get_if<AmplitudeModulatedDrive>(&d.kind)) {
        j["kind"] = "amplitude_modulated";
        j["omega_max_mhz"] = a->omega_max_mhz;
        j["mod_freq_mhz"] = a->mod_freq_mhz;
    } else {
        const auto& m = std::get<FrequencyModulatedDrive>(d.kind);
        j["kind"] = "frequency_modulated";
        j["rabi_mhz"] = m.rabi_mhz;
        j["delta0_mhz"] = m.delta0_mhz;
        j["delta_bar_mhz"] = m.delta_bar_mhz;
        j["omega_bar_mhz"] = m.omega_bar_mhz;
    }
    if (d.doppler_shift_mhz != 0.0) j["doppler_shift_mhz"] = d.doppler_shift_mhz;
    return j;
}

inline DriveSpec drive_from_json(const json& j, const std::string& where)
{
    DriveSpec d;
    if (!j.is_object() || !j.contains("kind")) throw ConfigError(where + ": drive needs a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        detail::require_keys(j, where, {"kind", "rabi_mhz"}, {"doppler_shift_mhz"});
        d.kind = ConstantDrive{detail::get_num(j, where, "rabi_mhz")};
    } else if (kind == "amplitude_modulated") {
        detail::require_keys(j, where, {"kind", "omega_max_mhz", "mod_freq_mhz"},
                             {"doppler_shift_mhz"});
        d.kind = AmplitudeModulatedDrive{detail::get_num(j, where, "omega_max_mhz"),
                                         detail::get_num(j, where, "mod_freq_mhz")};
    } else if (kind == "frequency_modulated") {
        detail::require_keys(
            j, where, {"kind", "rabi_mhz", "delta0_mhz", "delta_bar_mhz", "omega_bar_mhz"},
            {"doppler_shift_mhz"});
        d.kind = FrequencyModulatedDrive{
            detail::get_num(j, where, "rabi_mhz"), detail::get_num(j, where, "delta0_mhz"),
            detail::get_num(j, where, "delta_bar_mhz"), detail::get_num(j, where, "omega_bar_mhz")};
    } else {
        throw ConfigError(where + ": unknown drive kind '" + kind + "'");
    }
    if (j.contains("doppler_shift_mhz"))
        d.doppler_shift_mhz = detail::get_num(j, where, "doppler_shift_mhz");
    return d;
}

// ---------------------------------------------------------------------------
// Scenario

inline json to_json(const Scenario& sc)
{
    json j;
    j["atoms"] = sc.n_atoms;
    j["drives"] = json::array();
    for (const auto& d : sc.drives) j["drives"].push_back(to_json(d));

    json inter = json::object();
    if (!sc.interactions.pairs.empty()) {
        json arr = json::array();
        for (const auto& p : sc.interactions.pairs)
            arr.push_back({{"i", p.i}, {"j", p.j}, {"v_mhz", p.v_mhz}});
        inter["explicit"] = arr;
    }
    if (sc.interactions.geometry)
        inter["c6_geometry"] = {{"c6_mhz_um6", sc.interactions.geometry->c6_mhz_um6},
                                {"positions_um", sc.interactions.geometry->positions_um}};
    if (sc.interactions.ddf)
        inter["ddf"] = {{"i", sc.interactions.ddf->i},
                        {"j", sc.interactions.ddf->j},
                        {"c6_mhz_um6", sc.interactions.ddf->c6_mhz_um6},
                        {"d_ideal_um", sc.interactions.ddf->d_ideal_um},
                        {"d_actual_um", sc.interactions.ddf->d_actual_um}};
    j["interactions"] = inter;

    json noise = json::object();
    if (sc.noise.decay) noise["decay"] = {{"tau_us", sc.noise.decay->tau_us}};
    if (sc.noise.ddf_sigma_um) noise["ddf_sigma_um"] = *sc.noise.ddf_sigma_um;
    if (sc.noise.doppler)
        noise["doppler"] = {{"temperature_uk", sc.noise.doppler->temperature_uk},
                            {"k_eff_per_m", sc.noise.doppler->k_eff_per_m},
                            {"atom_mass_kg", sc.noise.doppler->atom_mass_kg}};
    j["noise"] = noise;

    json init;
    switch (sc.initial_state.kind) {
        case InitialStateSpec::Kind::cz_benchmark: init["kind"] = "cz_benchmark"; break;
        case InitialStateSpec::Kind::uniform_plus: init["kind"] = "uniform_plus"; break;
        case InitialStateSpec::Kind::basis:
            init["kind"] = "basis";
            init["label"] = sc.initial_state.basis_label;
            break;
        case InitialStateSpec::Kind::amplitudes: {
            init["kind"] = "amplitudes";
            json re = json::array(), im = json::array();
            for (const auto& a : sc.initial_state.amplitudes) {
                re.push_back(a.real());
                im.push_back(a.imag());
            }
            init["re"] = re;
            init["im"] = im;
            break;
        }
    }
    j["initial_state"] = init;

    j["t_final_us"] = sc.t_final_us;
    if (sc.gate_time_us > 0.0) j["gate_time_us"] = sc.gate_time_us;
    j["target"] = {{"kind", sc.target.kind == GateTargetSpec::Kind::cz_two_qubit ? "cz" : "phase"},
                   {"qubits", sc.target.n_qubits}};
    j["seed"] = sc.rng_seed;
    if (sc.blockade_cutoff_mhz) j["blockade_cutoff_mhz"] = *sc.blockade_cutoff_mhz;
    if (!sc.stark_terms.empty()) {
        json arr = json::array();
        for (const auto& s : sc.stark_terms)
            arr.push_back({{"atom", s.atom},
                           {"level", s.level == Level::g1 ? "1" : "r"},
                           {"amp_mhz", s.amp_mhz},
                           {"cos_sq_modulated", s.cos_sq_modulated}});
        j["stark_terms"] = arr;
    }
    return j;
}

inline Scenario scenario_from_json(const json& j)
{
    detail::require_keys(j, "scenario",
                         {"atoms", "drives", "interactions", "noise", "initial_state", "t_final_us",
                          "target", "seed"},
                         {"gate_time_us", "blockade_cutoff_mhz", "stark_terms"});
    Scenario sc;
    sc.n_atoms = j.at("atoms").get<int>();

    if (!j.at("drives").is_array()) throw ConfigError("scenario.drives: expected an array");
    int di = 0;
    for (const auto& dj : j.at("drives"))
        sc.drives.push_back(drive_from_json(dj, "scenario.drives[" + std::to_string(di++) + "]"));

    const json& inter = j.at("interactions");
    detail::require_keys(inter, "scenario.interactions", {}, {"explicit", "c6_geometry", "ddf"});
    if (inter.contains("explicit"))
        for (const auto& pj : inter.at("explicit")) {
            detail::require_keys(pj, "scenario.interactions.explicit", {"i", "j", "v_mhz"});
            sc.interactions.pairs.push_back({pj.at("i").get<int>(), pj.at("j").get<int>(),
                                             detail::get_num(pj, "pair", "v_mhz")});
        }
    if (inter.contains("c6_geometry")) {
        const json& g = inter.at("c6_geometry");
        detail::require_keys(g, "scenario.interactions.c6_geometry", {"c6_mhz_um6", "positions_um"});
        C6Geometry geo;
        geo.c6_mhz_um6 = detail::get_num(g, "c6_geometry", "c6_mhz_um6");
        for (const auto& x : g.at("positions_um")) geo.positions_um.push_back(x.get<double>());
        sc.interactions.geometry = geo;
    }
    if (inter.contains("ddf")) {
        const json& f = inter.at("ddf");
        detail::require_keys(f, "scenario.interactions.ddf",
                             {"i", "j", "c6_mhz_um6", "d_ideal_um", "d_actual_um"});
        sc.interactions.ddf =
            DdfSpec{f.at("i").get<int>(), f.at("j").get<int>(),
                    detail::get_num(f, "ddf", "c6_mhz_um6"), detail::get_num(f, "ddf", "d_ideal_um"),
                    detail::get_num(f, "ddf", "d_actual_um")};
    }

    const json& noise = j.at("noise");
    detail::require_keys(noise, "scenario.noise", {}, {"decay", "ddf_sigma_um", "doppler"});
    if (noise.contains("decay")) {
        detail::require_keys(noise.at("decay"), "scenario.noise.decay", {"tau_us"});
        sc.noise.decay = DecaySpec{detail::get_num(noise.at("decay"), "decay", "tau_us")};
    }
    if (noise.contains("ddf_sigma_um")) sc.noise.ddf_sigma_um = noise.at("ddf_sigma_um").get<double>();
    if (noise.contains("doppler")) {
        const json& dp = noise.at("doppler");
        detail::require_keys(dp, "scenario.noise.doppler", {"temperature_uk"},
                             {"k_eff_per_m", "atom_mass_kg"});
        DopplerSpec spec;
        spec.temperature_uk = detail::get_num(dp, "doppler", "temperature_uk");
        if (dp.contains("k_eff_per_m")) spec.k_eff_per_m = detail::get_num(dp, "doppler", "k_eff_per_m");
        if (dp.contains("atom_mass_kg"))
            spec.atom_mass_kg = detail::get_num(dp, "doppler", "atom_mass_kg");
        sc.noise.doppler = spec;
    }

    const json& init = j.at("initial_state");
    detail::require_keys(init, "scenario.initial_state", {"kind"}, {"label", "re", "im"});
    const std::string kind = init.at("kind").get<std::string>();
    if (kind == "cz_benchmark") {
        sc.initial_state.kind = InitialStateSpec::Kind::cz_benchmark;
    } else if (kind == "uniform_plus") {
        sc.initial_state.kind = InitialStateSpec::Kind::uniform_plus;
    } else if (kind == "basis") {
        sc.initial_state.kind = InitialStateSpec::Kind::basis;
        sc.initial_state.basis_label = init.at("label").get<std::string>();
    } else if (kind == "amplitudes") {
        sc.initial_state.kind = InitialStateSpec::Kind::amplitudes;
        const auto& re = init.at("re");
        const auto& im = init.at("im");
        if (re.size() != im.size()) throw ConfigError("initial_state: re/im size mismatch");
        for (std::size_t k = 0; k < re.size(); ++k)
            sc.initial_state.amplitudes.emplace_back(re[k].get<double>(), im[k].get<double>());
    } else {
        throw ConfigError("scenario.initial_state: unknown kind '" + kind + "'");
    }

    sc.t_final_us = detail::get_num(j, "scenario", "t_final_us");
    if (j.contains("gate_time_us")) sc.gate_time_us = detail::get_num(j, "scenario", "gate_time_us");

    const json& tgt = j.at("target");
    detail::require_keys(tgt, "scenario.target", {"kind", "qubits"});
    const std::string tk = tgt.at("kind").get<std::string>();
    if (tk == "cz")
        sc.target.kind = GateTargetSpec::Kind::cz_two_qubit;
    else if (tk == "phase")
        sc.target.kind = GateTargetSpec::Kind::phase_n_qubit;
    else
        throw ConfigError("scenario.target: unknown kind '" + tk + "'");
    sc.target.n_qubits = tgt.at("qubits").get<int>();

    sc.rng_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("blockade_cutoff_mhz"))
        sc.blockade_cutoff_mhz = detail::get_num(j, "scenario", "blockade_cutoff_mhz");
    if (j.contains("stark_terms"))
        for (const auto& sj : j.at("stark_terms")) {
            detail::require_keys(sj, "scenario.stark_terms", {"atom", "level", "amp_mhz"},
                                 {"cos_sq_modulated"});
            StarkTerm st;
            st.atom = sj.at("atom").get<int>();
            const std::string lv = sj.at("level").get<std::string>();
            if (lv == "1")
                st.level = Level::g1;
            else if (lv == "r")
                st.level = Level::ryd;
            else
                throw ConfigError("stark term level must be '1' or 'r'");
            st.amp_mhz = detail::get_num(sj, "stark", "amp_mhz");
            if (sj.contains("cos_sq_modulated")) st.cos_sq_modulated = sj.at("cos_sq_modulated").get<bool>();
            sc.stark_terms.push_back(st);
        }

    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    return sc;
}

inline std::uint64_t scenario_hash(const Scenario& sc) { return fnv1a(to_json(sc).dump()); }

// ---------------------------------------------------------------------------
// CampaignSpec

inline json to_json(const TwoQubitParams& p)
{
    json j;
    j["omega2_mhz"] = p.omega2_mhz;
    j["v_mhz"] = p.v_mhz;
    j["omega_m_strong_mhz"] = p.omega_m_strong_mhz;
    j["lzs_delta0_factor"] = p.lzs_delta0_factor;
    j["lzs_delta_bar_factor"] = p.lzs_delta_bar_factor;
    j["lzs_omega_bar_factor"] = p.lzs_omega_bar_factor;
    if (p.c6_mhz_um6) {
        j["c6_mhz_um6"] = *p.c6_mhz_um6;
        j["d_ideal_um"] = p.d_ideal_um;
    }
    j["k_eff_per_m"] = p.k_eff_per_m;
    return j;
}

inline TwoQubitParams params_from_json(const json& j)
{
    detail::require_keys(j, "params", {"omega2_mhz"},
                         {"v_mhz", "omega_m_strong_mhz", "lzs_delta0_factor", "lzs_delta_bar_factor",
                          "lzs_omega_bar_factor", "c6_mhz_um6", "d_ideal_um", "k_eff_per_m"});
    TwoQubitParams p;
    p.omega2_mhz = detail::get_num(j, "params", "omega2_mhz");
    if (j.contains("v_mhz")) p.v_mhz = detail::get_num(j, "params", "v_mhz");
    if (j.contains("omega_m_strong_mhz"))
        p.omega_m_strong_mhz = detail::get_num(j, "params", "omega_m_strong_mhz");
    if (j.contains("lzs_delta0_factor"))
        p.lzs_delta0_factor = detail::get_num(j, "params", "lzs_delta0_factor");
    if (j.contains("lzs_delta_bar_factor"))
        p.lzs_delta_bar_factor = detail::get_num(j, "params", "lzs_delta_bar_factor");
    if (j.contains("lzs_omega_bar_factor"))
        p.lzs_omega_bar_factor = detail::get_num(j, "params", "lzs_omega_bar_factor");
    if (j.contains("c6_mhz_um6")) {
        p.c6_mhz_um6 = detail::get_num(j, "params", "c6_mhz_um6");
        p.d_ideal_um = detail::get_num(j, "params", "d_ideal_um");
    }
    if (j.contains("k_eff_per_m")) p.k_eff_per_m = detail::get_num(j, "params", "k_eff_per_m");
    return p;
}

inline json to_json(const CampaignSpec& cs)
{
    static const char* kinds[] = {"relative_error_sweep", "intrinsic_scan", "decay_scan",
                                  "ddf_monte_carlo", "doppler_monte_carlo", "blockade_baseline",
                                  "radius_scan"};
    json j;
    j["campaign"] = kinds[static_cast<int>(cs.kind)];
    j["name"] = cs.name;
    j["scheme"] = cs.scheme;
    if (!cs.parameter.empty()) j["parameter"] = cs.parameter;
    j["grid"] = cs.grid;
    j["trials_per_point"] = cs.trials_per_point;
    j["seed"] = cs.base_seed;
    j["params"] = to_json(cs.params);
    if (cs.kind == CampaignSpec::Kind::blockade_baseline)
        j["baseline_rabi_mhz"] = cs.baseline_rabi_mhz;
    j["tol_scale"] = cs.tol_scale;
    return j;
}

inline CampaignSpec campaign_from_json(const json& j)
{
    detail::require_keys(j, "campaign",
                         {"campaign", "grid", "params"},
                         {"name", "scheme", "parameter", "trials_per_point", "seed",
                          "baseline_rabi_mhz", "tol_scale"});
    CampaignSpec cs;
    const std::string kind = j.at("campaign").get<std::string>();
    if (kind == "relative_error_sweep")
        cs.kind = CampaignSpec::Kind::relative_error_sweep;
    else if (kind == "intrinsic_scan")
        cs.kind = CampaignSpec::Kind::intrinsic_scan;
    else if (kind == "decay_scan")
        cs.kind = CampaignSpec::Kind::decay_scan;
    else if (kind == "ddf_monte_carlo")
        cs.kind = CampaignSpec::Kind::ddf_monte_carlo;
    else if (kind == "doppler_monte_carlo")
        cs.kind = CampaignSpec::Kind::doppler_monte_carlo;
    else if (kind == "blockade_baseline")
        cs.kind = CampaignSpec::Kind::blockade_baseline;
    else if (kind == "radius_scan")
        cs.kind = CampaignSpec::Kind::radius_scan;
    else
        throw ConfigError("campaign: unknown kind '" + kind + "'");

    if (j.contains("name")) cs.name = j.at("name").get<std::string>();
    if (j.contains("scheme")) cs.scheme = j.at("scheme").get<int>();
    if (j.contains("parameter")) cs.parameter = j.at("parameter").get<std::string>();
    for (const auto& g : j.at("grid")) cs.grid.push_back(g.get<double>());
    if (j.contains("trials_per_point")) cs.trials_per_point = j.at("trials_per_point").get<int>();
    if (j.contains("seed")) cs.base_seed = j.at("seed").get<std::uint64_t>();
    cs.params = params_from_json(j.at("params"));
    if (j.contains("baseline_rabi_mhz"))
        cs.baseline_rabi_mhz = detail::get_num(j, "campaign", "baseline_rabi_mhz");
    if (j.contains("tol_scale")) cs.tol_scale = detail::get_num(j, "campaign", "tol_scale");
    if (cs.grid.empty()) throw ConfigError("campaign: grid must not be empty");
    if (cs.trials_per_point < 1) throw ConfigError("campaign: trials_per_point must be >= 1");
    return cs;
}

} // namespace rydsim
