#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "rydsim/gates.hpp"
#include "rydsim/campaigns.hpp"

namespace rydsim {

namespace detail {

inline std::string fmt_g17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void open_or_throw(std::ofstream& os, const std::string& path)
{
    os.open(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
}

} // namespace detail

// Trajectory CSV: time plus the tracked observables. Header:
//   t,norm,pop_<label>...,pop_rydberg[,pop_leak]
// with t in us; `norm` is the state norm (pure) or the density trace (open).
inline void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                                 const Scenario& sc)
{
    const SchemeList schemes = sc.schemes();
    const auto labels = computational_labels(sc.n_atoms);
    const bool has_leak = schemes[0].with_leak;

    std::vector<Index> comp_idx;
    for (const auto& l : labels) comp_idx.push_back(computational_index(schemes, l));

    const Index dim = space_dim(schemes);
    std::vector<bool> touches_ryd(dim, false), touches_leak(dim, false);
    for (Index i = 0; i < dim; ++i)
        for (int lv : basis_levels(schemes, i)) {
            if (lv == static_cast<int>(Level::ryd)) touches_ryd[i] = true;
            if (lv == static_cast<int>(Level::leak)) touches_leak[i] = true;
        }

    std::ofstream os;
    detail::open_or_throw(os, path);
    os << "t,norm";
    for (const auto& l : labels) os << ",pop_" << l;
    os << ",pop_rydberg";
    if (has_leak) os << ",pop_leak";
    os << "\n";

    for (std::size_t k = 0; k < traj.size(); ++k) {
        std::vector<double> diag(dim);
        double norm = 0.0;
        if (traj.density) {
            for (Index i = 0; i < dim; ++i) diag[i] = std::real(traj.densities[k](i, i));
            norm = std::real(traj.densities[k].trace());
        } else {
            for (Index i = 0; i < dim; ++i) diag[i] = std::norm(traj.states[k][i]);
            norm = traj.states[k].squaredNorm();
        }
        double ryd = 0.0, leak = 0.0;
        for (Index i = 0; i < dim; ++i) {
            if (touches_ryd[i]) ryd += diag[i];
            if (touches_leak[i]) leak += diag[i];
        }
        os << detail::fmt_g17(traj.times_s[k] / us_to_s) << ',' << detail::fmt_g17(norm);
        for (Index ci : comp_idx) os << ',' << detail::fmt_g17(diag[ci]);
        os << ',' << detail::fmt_g17(ryd);
        if (has_leak) os << ',' << detail::fmt_g17(leak);
        os << "\n";
    }
}

// Gate report CSV. Header: t,F,pop_<label>...,phase_<label>... (t in us).
inline void write_gate_report_csv(const std::string& path, const GateReport& rep)
{
    std::ofstream os;
    detail::open_or_throw(os, path);
    os << "t,F";
    for (const auto& l : rep.comp_labels) os << ",pop_" << l;
    for (const auto& l : rep.comp_labels) os << ",phase_" << l;
    os << "\n";
    for (std::size_t k = 0; k < rep.times_us.size(); ++k) {
        os << detail::fmt_g17(rep.times_us[k]) << ',' << detail::fmt_g17(rep.fidelity[k]);
        for (std::size_t i = 0; i < rep.comp_labels.size(); ++i)
            os << ',' << detail::fmt_g17(rep.populations[i][k]);
        for (std::size_t i = 0; i < rep.comp_labels.size(); ++i)
            os << ',' << detail::fmt_g17(rep.phases[i][k]);
        os << "\n";
    }
}

// Campaign CSV. Header: grid_value,mean_error,std_error,n_trials.
inline void write_campaign_csv(const std::string& path, const CampaignResult& res)
{
    std::ofstream os;
    detail::open_or_throw(os, path);
    os << "grid_value,mean_error,std_error,n_trials\n";
    for (const auto& p : res.points)
        os << detail::fmt_g17(p.grid_value) << ',' << detail::fmt_g17(p.mean) << ','
           << detail::fmt_g17(p.std_error) << ',' << p.n_trials << "\n";
}

// Generic plotting script referencing the emitted CSVs.
inline void write_plot_script(const std::string& path)
{
    std::ofstream os;
    detail::open_or_throw(os, path);
    os << R"PY(#!/usr/bin/env python3
"""Plot rydsim outputs found next to this script."""
import csv, glob, os, sys

try:
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib is required")

here = os.path.dirname(os.path.abspath(__file__))

def read(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    head, data = rows[0], rows[1:]
    cols = {h: [float(r[i]) for r in data] for i, h in enumerate(head)}
    return cols

for path in sorted(glob.glob(os.path.join(here, "*.csv"))):
    cols = read(path)
    name = os.path.splitext(os.path.basename(path))[0]
    fig, ax = plt.subplots()
    if "grid_value" in cols:
        ax.errorbar(cols["grid_value"], cols["mean_error"], yerr=cols["std_error"], marker="o")
        ax.set_xlabel("grid value"); ax.set_ylabel("mean error"); ax.set_yscale("log")
    else:
        x = cols.get("t")
        for key, ys in cols.items():
            if key != "t":
                ax.plot(x, ys, label=key)
        ax.set_xlabel("t (us)"); ax.legend(fontsize=6)
    ax.set_title(name)
    fig.savefig(os.path.join(here, name + ".png"), dpi=150)
    print("wrote", name + ".png")
)PY";
}

} // namespace rydsim
