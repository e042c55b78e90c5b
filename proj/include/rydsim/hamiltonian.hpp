#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "rydsim/scenario.hpp"

namespace rydsim {

struct SparseEntry {
    Index row = 0, col = 0;
    Complex val{};
};

// One additive term c(t) * M (+ H.c. when add_hc). Coefficients are in rad/s,
// time in seconds.
struct HamTerm {
    std::function<Complex(double)> coeff;
    std::vector<SparseEntry> entries;
    bool add_hc = false;
};

// Time-dependent Hamiltonian over a (possibly reduced) product basis. States
// removed by blockade projection simply do not appear in the basis; `kept`
// maps reduced indices back to full-space ones.
class TimeHamiltonian {
  public:
    TimeHamiltonian() = default;
    TimeHamiltonian(Index full_dim, std::vector<Index> kept, std::vector<HamTerm> terms,
                    double max_angular_freq)
        : full_dim_(full_dim), kept_(std::move(kept)), terms_(std::move(terms)),
          max_freq_(max_angular_freq)
    {
    }

    Index dim() const { return static_cast<Index>(kept_.size()); }
    Index full_dim() const { return full_dim_; }
    bool reduced() const { return dim() != full_dim_; }
    const std::vector<Index>& kept_indices() const { return kept_; }
    const std::vector<HamTerm>& terms() const { return terms_; }
    double max_angular_freq() const { return max_freq_; }

    // out = H(t) x, sparse accumulation (propagation hot path).
    void apply(double t_s, const Vector& x, Vector& out) const
    {
        out.setZero();
        for (const auto& term : terms_) {
            const Complex c = term.coeff(t_s);
            if (c == 0.0) continue;
            for (const auto& e : term.entries) {
                out[e.row] += c * e.val * x[e.col];
                if (term.add_hc) out[e.col] += std::conj(c * e.val) * x[e.row];
            }
        }
    }

    // Dense snapshot H(t) on the (reduced) basis.
    void dense_into(double t_s, Matrix& h) const
    {
        h.setZero(dim(), dim());
        for (const auto& term : terms_) {
            const Complex c = term.coeff(t_s);
            if (c == 0.0) continue;
            for (const auto& e : term.entries) {
                h(e.row, e.col) += c * e.val;
                if (term.add_hc) h(e.col, e.row) += std::conj(c * e.val);
            }
        }
    }

    Matrix operator()(double t_s) const
    {
        Matrix h;
        dense_into(t_s, h);
        return h;
    }

    Vector project(const Vector& full) const
    {
        Vector out(dim());
        for (Index i = 0; i < dim(); ++i) out[i] = full[kept_[i]];
        return out;
    }

    Vector lift(const Vector& red) const
    {
        Vector out = Vector::Zero(full_dim_);
        for (Index i = 0; i < dim(); ++i) out[kept_[i]] = red[i];
        return out;
    }

  private:
    Index full_dim_ = 0;
    std::vector<Index> kept_;
    std::vector<HamTerm> terms_;
    double max_freq_ = 0.0;
};

// Disorder term of the interatomic force: dV/dd|_{d_ideal} (d - d_ideal) on
// the doubly excited pair state. All inputs in MHz/um; output in rad/s.
inline Matrix ddf_term(double c6_mhz_um6, double d_ideal_um, double d_actual_um, int atom_i,
                       int atom_j, const SchemeList& schemes)
{
    const double coeff_mhz =
        ddf_gradient_mhz_per_um(c6_mhz_um6, d_ideal_um) * (d_actual_um - d_ideal_um);
    return (coeff_mhz * mhz_to_rad) *
           pair_projector(Level::ryd, Level::ryd, atom_i - 1, atom_j - 1, schemes);
}

namespace detail {

inline std::vector<SparseEntry> sparse_from_dense(const Matrix& m,
                                                  const std::vector<Index>& reduced_of_full)
{
    std::vector<SparseEntry> out;
    for (Index c = 0; c < m.cols(); ++c)
        for (Index r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0.0) {
                const Index rr = reduced_of_full[r], rc = reduced_of_full[c];
                if (rr >= 0 && rc >= 0) out.push_back({rr, rc, m(r, c)});
            }
    return out;
}

} // namespace detail

// Assemble the full time-dependent Hamiltonian of a scenario:
//   sum_j Omega_j(t)/2 e^{i delta_j t} |1>_j<r| + H.c.
//   + sum_j Delta_j(t) |r>_j<r|          (frequency-modulated drives)
//   + sum_{i<j} V_ij |rr>_{ij}<rr|
//   + optional distance-disorder shift on one pair
//   + optional Stark shift terms.
inline TimeHamiltonian assemble_hamiltonian(const Scenario& sc)
{
    sc.validate();
    const SchemeList schemes = sc.schemes();
    const Index full_dim = space_dim(schemes);
    const auto pairs = sc.interactions.resolved_pairs();

    // Blockade projection: drop basis states where both atoms of a
    // super-strong pair sit in |r>.
    std::vector<Index> kept;
    std::vector<Index> reduced_of_full(full_dim, -1);
    {
        std::vector<std::pair<int, int>> blocked;
        if (sc.blockade_cutoff_mhz)
            for (const auto& p : pairs)
                if (p.v_mhz >= *sc.blockade_cutoff_mhz) blocked.emplace_back(p.i - 1, p.j - 1);
        if (sc.interactions.ddf)
            for (const auto& b : blocked)
                if (b.first == sc.interactions.ddf->i - 1 && b.second == sc.interactions.ddf->j - 1)
                    throw std::invalid_argument("assemble_hamiltonian: ddf pair cannot be blockade-projected");
        const int r = static_cast<int>(Level::ryd);
        for (Index idx = 0; idx < full_dim; ++idx) {
            const auto lv = basis_levels(schemes, idx);
            bool drop = false;
            for (const auto& b : blocked)
                if (lv[b.first] == r && lv[b.second] == r) { drop = true; break; }
            if (!drop) {
                reduced_of_full[idx] = static_cast<Index>(kept.size());
                kept.push_back(idx);
            }
        }
    }

    std::vector<HamTerm> terms;
    double max_freq = 0.0;
    auto track = [&max_freq](double f_rad) { max_freq = std::max(max_freq, std::abs(f_rad)); };

    // Drive couplings and frequency-modulated detunings.
    for (int a = 0; a < sc.n_atoms; ++a) {
        const DriveSpec& drive = sc.drives[a];
        const double delta = drive.doppler_shift_mhz * mhz_to_rad;
        track(delta);

        auto coupling = embed(level_op(schemes[a], Level::g1, Level::ryd), a, schemes);
        auto entries = detail::sparse_from_dense(coupling, reduced_of_full);

        std::function<Complex(double)> coeff;
        if (const auto* c = std::get_if<ConstantDrive>(&drive.kind)) {
            const double half_rabi = 0.5 * c->rabi_mhz * mhz_to_rad;
            track(c->rabi_mhz * mhz_to_rad);
            if (delta == 0.0)
                coeff = [half_rabi](double) { return Complex{half_rabi, 0.0}; };
            else
                coeff = [half_rabi, delta](double t) {
                    return half_rabi * std::exp(imag_unit * (delta * t));
                };
        } else if (const auto* am = std::get_if<AmplitudeModulatedDrive>(&drive.kind)) {
            const double half_max = 0.5 * am->omega_max_mhz * mhz_to_rad;
            const double w = am->mod_freq_mhz * mhz_to_rad;
            track(am->omega_max_mhz * mhz_to_rad);
            track(w);
            if (delta == 0.0)
                coeff = [half_max, w](double t) { return Complex{half_max * std::cos(w * t), 0.0}; };
            else
                coeff = [half_max, w, delta](double t) {
                    return half_max * std::cos(w * t) * std::exp(imag_unit * (delta * t));
                };
        } else {
            const auto& fm = std::get<FrequencyModulatedDrive>(drive.kind);
            const double half_rabi = 0.5 * fm.rabi_mhz * mhz_to_rad;
            track(fm.rabi_mhz * mhz_to_rad);
            if (delta == 0.0)
                coeff = [half_rabi](double) { return Complex{half_rabi, 0.0}; };
            else
                coeff = [half_rabi, delta](double t) {
                    return half_rabi * std::exp(imag_unit * (delta * t));
                };

            // Detuning Delta(t) |r>_a <r| enters as an explicit energy term.
            const double d0 = fm.delta0_mhz * mhz_to_rad;
            const double db = fm.delta_bar_mhz * mhz_to_rad;
            const double wb = fm.omega_bar_mhz * mhz_to_rad;
            track(std::abs(d0) + std::abs(db));
            track(wb);
            auto det_entries = detail::sparse_from_dense(
                embed(level_op(schemes[a], Level::ryd, Level::ryd), a, schemes), reduced_of_full);
            terms.push_back({[d0, db, wb](double t) {
                                 return Complex{d0 + db * std::cos(wb * t), 0.0};
                             },
                             std::move(det_entries), false});
        }
        if (!entries.empty()) terms.push_back({std::move(coeff), std::move(entries), true});
    }

    // Interactions (blockade-projected pairs have no surviving |rr> states).
    for (const auto& p : pairs) {
        if (sc.blockade_cutoff_mhz && p.v_mhz >= *sc.blockade_cutoff_mhz) continue;
        const double v = p.v_mhz * mhz_to_rad;
        track(v);
        auto entries = detail::sparse_from_dense(
            pair_projector(Level::ryd, Level::ryd, p.i - 1, p.j - 1, schemes), reduced_of_full);
        if (!entries.empty())
            terms.push_back({[v](double) { return Complex{v, 0.0}; }, std::move(entries), false});
    }

    // Static distance disorder.
    if (sc.interactions.ddf) {
        const auto& f = *sc.interactions.ddf;
        const double shift = ddf_gradient_mhz_per_um(f.c6_mhz_um6, f.d_ideal_um) *
                             (f.d_actual_um - f.d_ideal_um) * mhz_to_rad;
        if (shift != 0.0) {
            track(shift);
            auto entries = detail::sparse_from_dense(
                pair_projector(Level::ryd, Level::ryd, f.i - 1, f.j - 1, schemes), reduced_of_full);
            terms.push_back({[shift](double) { return Complex{shift, 0.0}; }, std::move(entries), false});
        }
    }

    // Stark shifts from the two-photon reduction.
    for (const auto& s : sc.stark_terms) {
        const double amp = s.amp_mhz * mhz_to_rad;
        if (amp == 0.0) continue;
        track(amp);
        auto entries = detail::sparse_from_dense(
            embed(level_op(schemes[s.atom - 1], s.level, s.level), s.atom - 1, schemes),
            reduced_of_full);
        if (s.cos_sq_modulated) {
            const auto* am = std::get_if<AmplitudeModulatedDrive>(&sc.drives[s.atom - 1].kind);
            if (!am)
                throw std::invalid_argument(
                    "assemble_hamiltonian: modulated stark term needs an amplitude-modulated drive");
            const double w = am->mod_freq_mhz * mhz_to_rad;
            terms.push_back({[amp, w](double t) {
                                 const double c = std::cos(w * t);
                                 return Complex{amp * c * c, 0.0};
                             },
                             std::move(entries), false});
        } else {
            terms.push_back({[amp](double) { return Complex{amp, 0.0}; }, std::move(entries), false});
        }
    }

    return TimeHamiltonian(full_dim, std::move(kept), std::move(terms), max_freq);
}

// Collapse operators sqrt(gamma_k) |k>_j <r| for every atom, with
// gamma_0 = gamma_1 = 1/(8 tau) and gamma_g = 3/(4 tau).
inline std::vector<Matrix> collapse_ops(double tau_us, const SchemeList& schemes)
{
    if (!(tau_us > 0.0)) throw std::invalid_argument("collapse_ops: lifetime must be positive");
    const double tau_s = tau_us * us_to_s;
    std::vector<Matrix> ops;
    for (std::size_t a = 0; a < schemes.size(); ++a) {
        if (!schemes[a].with_leak)
            throw std::invalid_argument("collapse_ops: decay requires the leak level in the scheme");
        const struct { Level target; double rate; } channels[] = {
            {Level::g0, 1.0 / (8.0 * tau_s)},
            {Level::g1, 1.0 / (8.0 * tau_s)},
            {Level::leak, 3.0 / (4.0 * tau_s)},
        };
        for (const auto& ch : channels)
            ops.push_back(std::sqrt(ch.rate) *
                          embed(level_op(schemes[a], ch.target, Level::ryd), static_cast<int>(a), schemes));
    }
    return ops;
}

inline std::vector<Matrix> assemble_collapse_ops(const Scenario& sc)
{
    if (!sc.noise.decay)
        throw std::invalid_argument("assemble_collapse_ops: scenario has no decay configured");
    return collapse_ops(sc.noise.decay->tau_us, sc.schemes());
}

} // namespace rydsim
