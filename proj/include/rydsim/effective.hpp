#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rydsim/bessel.hpp"
#include "rydsim/operators.hpp"

namespace rydsim {

// Nearest-neighbor coupled chain of basis states with on-site detunings; the
// reduced pictures the full dynamics collapses onto under the antiblockade
// condition. Frequencies in rad/s.
struct EffectiveChain {
    std::vector<std::string> labels;
    std::vector<double> couplings;   // size = labels.size() - 1
    std::vector<double> detunings;   // size = labels.size()

    Matrix hamiltonian() const
    {
        const Index n = static_cast<Index>(labels.size());
        Matrix h = Matrix::Zero(n, n);
        for (Index i = 0; i < n; ++i) h(i, i) = detunings[static_cast<std::size_t>(i)];
        for (Index i = 0; i + 1 < n; ++i) {
            h(i, i + 1) = couplings[static_cast<std::size_t>(i)];
            h(i + 1, i) = couplings[static_cast<std::size_t>(i)];
        }
        return h;
    }
};

// Move H into the frame rotating with exp(i h0 t): returns U H U^+ - h0.
inline std::function<Matrix(double)> rotate_frame(std::function<Matrix(double)> h,
                                                  const Matrix& h0)
{
    if (!is_hermitian(h0, 1e-12))
        throw std::invalid_argument("rotate_frame: frame generator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h0);
    const Matrix basis = es.eigenvectors();
    const RealVector evals = es.eigenvalues();
    return [h = std::move(h), h0, basis, evals](double t) {
        Vector phases(evals.size());
        for (Index i = 0; i < evals.size(); ++i) phases[i] = std::exp(imag_unit * (evals[i] * t));
        const Matrix u = basis * phases.asDiagonal() * basis.adjoint();
        return Matrix(u * h(t) * u.adjoint() - h0);
    };
}

// Three-state ladder |11> -- |1r> -- |rr| with couplings (Omega_2/2, Omega_m/4);
// valid on resonance of the modulation with the interaction (V = omega).
inline EffectiveChain effective_h11(double omega_m, double omega_2)
{
    return {{"11", "1r", "rr"}, {0.5 * omega_2, 0.25 * omega_m}, {0.0, 0.0, 0.0}};
}

// Closed-form |11> amplitude under the effective ladder.
inline double c11_analytic(double t, double omega_m, double omega_2)
{
    const double s = omega_m * omega_m + 4.0 * omega_2 * omega_2;
    return (omega_m * omega_m + 4.0 * omega_2 * omega_2 * std::cos(0.25 * t * std::sqrt(s))) / s;
}

// Closed-form |01> amplitude (a plain Rabi cycle of the target atom).
inline double c01_analytic(double t, double omega_2) { return std::cos(0.5 * omega_2 * t); }

// Pulse-area angle of the modulated control drive; the |10> sector evolves as
// cos(theta)|10> - i sin(theta)|r0> exactly.
inline double theta_10(double t, double omega_m, double omega)
{
    if (!(omega > 0.0)) throw std::invalid_argument("theta_10: modulation frequency must be positive");
    return omega_m * std::sin(omega * t) / (2.0 * omega);
}

// One Fourier component of the frequency-modulated drive seen as a
// polychromatic field.
struct BesselField {
    int order = 0;
    double rabi = 0.0;      // Omega_2 * J_n(delta_bar / omega_bar)
    double detuning = 0.0;  // delta_0 + n * omega_bar
};

struct BesselDecomposition {
    std::vector<BesselField> fields;
    std::optional<int> resonance_order;  // n with delta_0 + n omega_bar = 0, when integral
    double resonant_rabi = 0.0;          // 0 when no integral resonance order exists
};

inline BesselDecomposition bessel_decompose(double omega_2, double delta_0, double delta_bar,
                                            double omega_bar, int n_min, int n_max,
                                            double j_threshold = 1e-6)
{
    if (!(omega_bar > 0.0))
        throw std::invalid_argument("bessel_decompose: omega_bar must be positive");
    BesselDecomposition out;
    const double arg = delta_bar / omega_bar;
    for (int n = n_min; n <= n_max; ++n) {
        const double jn = bessel_j(n, arg);
        if (std::abs(jn) < j_threshold) continue;
        out.fields.push_back({n, omega_2 * jn, delta_0 + n * omega_bar});
    }
    const double n_star = -delta_0 / omega_bar;
    if (std::abs(n_star - std::round(n_star)) < 1e-9) {
        const int n = static_cast<int>(std::llround(n_star));
        out.resonance_order = n;
        out.resonant_rabi = omega_2 * bessel_j(n, arg);
    }
    return out;
}

// Two-level Hamiltonian of the polychromatic picture, for validation against
// the directly modulated drive: sum_n (rabi_n/2) e^{i detuning_n t}|0r><01| + H.c.
inline std::function<Matrix(double)> polychromatic_hamiltonian(const std::vector<BesselField>& fields)
{
    return [fields](double t) {
        Complex c = 0.0;
        for (const auto& f : fields) c += 0.5 * f.rabi * std::exp(imag_unit * (f.detuning * t));
        Matrix h = Matrix::Zero(2, 2);
        h(1, 0) = c;             // |0r><01|
        h(0, 1) = std::conj(c);
        return h;
    };
}

// Three-atom |110> sector on the basis {|110>, |phi>, |rr0>} with
// |phi> = (|r10> + |1r0>)/sqrt(2); the bridge carries phases
// e^{-i(omega+V')t} + e^{i(omega-V')t}.
inline std::function<Matrix(double)> effective_h110(double omega_m, double omega, double v_prime)
{
    return [omega_m, omega, v_prime](double t) {
        const double g = std::sqrt(2.0) * omega_m / 4.0;
        const Complex top = g * (std::exp(-imag_unit * (omega * t)) + std::exp(imag_unit * (omega * t)));
        const Complex bridge = g * (std::exp(-imag_unit * ((omega + v_prime) * t)) +
                                    std::exp(imag_unit * ((omega - v_prime) * t)));
        Matrix h = Matrix::Zero(3, 3);
        h(0, 1) = top;
        h(1, 0) = std::conj(top);
        h(1, 2) = bridge;
        h(2, 1) = std::conj(bridge);
        return h;
    };
}

// Net phase exponents of the two-photon pathways |110> -> |phi> -> |rr0>.
// One of them vanishes exactly when V' = +-2 omega (or V' = 0), opening a
// resonant channel; otherwise |110> stays frozen.
inline std::array<double, 3> two_photon_exponents(double omega, double v_prime)
{
    return {2.0 * omega + v_prime, v_prime, v_prime - 2.0 * omega};
}

// Three-atom |111> sector: |111> -- |11r> -- |Phi| with
// |Phi> = (|r1r> + |1rr>)/sqrt(2).
inline EffectiveChain effective_h111(double omega_m, double omega_2)
{
    return {{"111", "11r", "Phi"}, {0.5 * omega_2, std::sqrt(2.0) * omega_m / 4.0}, {0.0, 0.0, 0.0}};
}

} // namespace rydsim
