#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "rydsim/hamiltonian.hpp"
#include "rydsim/integrator.hpp"

namespace rydsim {

struct Trajectory {
    std::vector<double> times_s;
    std::vector<Vector> states;      // pure runs (full-space amplitudes)
    std::vector<Matrix> densities;   // open-system runs
    bool density = false;
    OdeStats stats;
    double final_drift = 0.0;        // |norm - 1| (pure) or |trace - 1| (open) at the last sample
    std::uint64_t scenario_hash = 0;

    std::size_t size() const { return times_s.size(); }
};

inline std::vector<double> make_sample_times(double t_final_s, int n_samples,
                                             std::vector<double> extra = {})
{
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(n_samples) + extra.size() + 1);
    for (int i = 0; i <= n_samples; ++i)
        ts.push_back(t_final_s * static_cast<double>(i) / static_cast<double>(n_samples));
    for (double e : extra)
        if (e >= 0.0 && e <= t_final_s) ts.push_back(e);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

// i d|psi>/dt = H(t) |psi>. Accepts and returns full-space amplitudes even
// when the Hamiltonian basis is blockade-reduced.
inline Trajectory evolve_schrodinger(const TimeHamiltonian& h, const StateVector& psi0,
                                     const IntegratorConfig& cfg)
{
    Vector y0 = psi0.amplitudes();
    if (y0.size() != h.full_dim())
        throw std::invalid_argument("evolve_schrodinger: state dimension mismatch");
    if (h.reduced()) {
        Vector red = h.project(y0);
        if (std::abs(red.norm() - 1.0) > 1e-9)
            throw std::invalid_argument(
                "evolve_schrodinger: initial state has support on blockade-projected states");
        y0 = std::move(red);
    }

    Trajectory traj;
    traj.times_s = cfg.sample_times;
    traj.states.resize(cfg.sample_times.size());

    Rhs rhs = [&h](double t, const Vector& y, Vector& dy) {
        h.apply(t, y, dy);
        dy *= -imag_unit;
    };
    const double t_end = cfg.sample_times.empty() ? 0.0 : cfg.sample_times.back();
    traj.stats = integrate(rhs, 0.0, t_end, y0, cfg,
                           [&](std::size_t i, double, const Vector& y) {
                               traj.states[i] = h.reduced() ? h.lift(y) : y;
                           });
    if (!traj.states.empty()) traj.final_drift = std::abs(traj.states.back().norm() - 1.0);
    return traj;
}

namespace detail {

struct SparseOp {
    std::vector<SparseEntry> entries;
};

inline SparseOp scan_sparse(const Matrix& m)
{
    SparseOp op;
    for (Index c = 0; c < m.cols(); ++c)
        for (Index r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0.0) op.entries.push_back({r, c, m(r, c)});
    return op;
}

} // namespace detail

// Lindblad master equation
//   drho/dt = -i[H, rho] + sum_k ( L_k rho L_k^+ - 1/2 {L_k^+ L_k, rho} ).
inline Trajectory evolve_lindblad(const TimeHamiltonian& h, const std::vector<Matrix>& collapse,
                                  const DensityMatrix& rho0, const IntegratorConfig& cfg)
{
    if (h.reduced())
        throw std::invalid_argument("evolve_lindblad: blockade projection not supported with decay");
    const Index d = h.dim();
    if (rho0.dim() != d) throw std::invalid_argument("evolve_lindblad: density dimension mismatch");

    std::vector<detail::SparseOp> ls;
    Matrix d_sum = Matrix::Zero(d, d);  // sum_k L_k^+ L_k (time independent)
    for (const auto& l : collapse) {
        if (l.rows() != d || l.cols() != d)
            throw std::invalid_argument("evolve_lindblad: collapse operator dimension mismatch");
        ls.push_back(detail::scan_sparse(l));
        d_sum += l.adjoint() * l;
    }

    struct Work {
        Matrix ht, a, b;
    };
    auto work = std::make_shared<Work>();
    work->ht.resize(d, d);
    work->a.resize(d, d);
    work->b.resize(d, d);

    Rhs rhs = [&h, &ls, &d_sum, d, work](double t, const Vector& y, Vector& dy) {
        Eigen::Map<const Matrix> rho(y.data(), d, d);
        Eigen::Map<Matrix> out(dy.data(), d, d);
        h.dense_into(t, work->ht);
        work->a.noalias() = work->ht * rho;
        work->a.noalias() -= rho * work->ht;
        out = -imag_unit * work->a;
        work->a.noalias() = d_sum * rho;
        work->a.noalias() += rho * d_sum;
        out -= 0.5 * work->a;
        for (const auto& l : ls) {
            // a = L rho; out += a L^+
            work->a.setZero();
            for (const auto& e : l.entries) work->a.row(e.row) += e.val * rho.row(e.col);
            for (const auto& e : l.entries) out.col(e.row) += std::conj(e.val) * work->a.col(e.col);
        }
    };

    Trajectory traj;
    traj.density = true;
    traj.times_s = cfg.sample_times;
    traj.densities.resize(cfg.sample_times.size());

    Vector y0(d * d);
    Eigen::Map<Matrix>(y0.data(), d, d) = rho0.entries();
    const double t_end = cfg.sample_times.empty() ? 0.0 : cfg.sample_times.back();
    traj.stats = integrate(rhs, 0.0, t_end, y0, cfg,
                           [&](std::size_t i, double, const Vector& y) {
                               traj.densities[i] = Eigen::Map<const Matrix>(y.data(), d, d);
                           });
    if (!traj.densities.empty())
        traj.final_drift = std::abs(traj.densities.back().trace().real() - 1.0) +
                           std::abs(traj.densities.back().trace().imag());
    return traj;
}

// ---------------------------------------------------------------------------
// Scenario-level driver

struct SimOptions {
    double tol_scale = 1.0;   // multiplies the default tolerances
    int n_samples = 400;
    IntegratorConfig::Method method = IntegratorConfig::Method::adaptive_rk;
    std::vector<double> extra_sample_times_s;
    double max_step_scale = 1.0;  // multiplies the oscillation-period cap
};

inline IntegratorConfig make_integrator_config(const TimeHamiltonian& h, double t_final_s,
                                               const SimOptions& opt = {})
{
    IntegratorConfig cfg;
    cfg.method = opt.method;
    cfg.rel_tol = 1e-10 * opt.tol_scale;
    cfg.abs_tol = 1e-12 * opt.tol_scale;
    cfg.max_step =
        opt.max_step_scale * std::min(max_step_cap(h.max_angular_freq()), t_final_s / 50.0);
    cfg.sample_times = make_sample_times(t_final_s, opt.n_samples, opt.extra_sample_times_s);
    return cfg;
}

inline Trajectory simulate_scenario(const Scenario& sc, const SimOptions& opt = {})
{
    const TimeHamiltonian h = assemble_hamiltonian(sc);
    const StateVector psi0 = initial_state_vector(sc);
    SimOptions o = opt;
    o.extra_sample_times_s.push_back(sc.gate_time() * us_to_s);
    const IntegratorConfig cfg = make_integrator_config(h, sc.t_final_us * us_to_s, o);

    if (sc.noise.decay) {
        const auto collapse = assemble_collapse_ops(sc);
        return evolve_lindblad(h, collapse, DensityMatrix::pure(psi0.amplitudes()), cfg);
    }
    return evolve_schrodinger(h, psi0, cfg);
}

} // namespace rydsim
