#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rydsim/core.hpp"

namespace rydsim {

// Per-atom levels, in the fixed basis order used everywhere (including CSV
// output): |0>, |1>, |r>, and the spectator ground state |g> that collects
// decay out of the computational manifold.
enum class Level : int { g0 = 0, g1 = 1, ryd = 2, leak = 3 };

inline const char* level_name(Level l)
{
    switch (l) {
        case Level::g0:   return "0";
        case Level::g1:   return "1";
        case Level::ryd:  return "r";
        case Level::leak: return "g";
    }
    return "?";
}

struct LevelScheme {
    // The level set is (g0, g1, ryd) or (g0, g1, ryd, leak); only the
    // presence of the leak level varies in scope.
    bool with_leak = false;

    static LevelScheme three_level() { return {false}; }
    static LevelScheme four_level() { return {true}; }

    int dim() const { return with_leak ? 4 : 3; }

    bool contains(Level l) const { return l != Level::leak || with_leak; }

    int index(Level l) const
    {
        if (!contains(l))
            throw std::invalid_argument("LevelScheme: level not present in scheme");
        return static_cast<int>(l);
    }
};

using SchemeList = std::vector<LevelScheme>;

inline SchemeList uniform_schemes(int n_atoms, bool with_leak = false)
{
    return SchemeList(static_cast<std::size_t>(n_atoms), LevelScheme{with_leak});
}

inline Index space_dim(const SchemeList& schemes)
{
    Index d = 1;
    for (const auto& s : schemes) d *= s.dim();
    return d;
}

// Basis order is lexicographic over (atom 1, atom 2, ...): atom 1 varies
// slowest, with per-atom order (g0, g1, ryd, leak).
inline Index basis_index(const SchemeList& schemes, const std::vector<int>& levels)
{
    if (levels.size() != schemes.size())
        throw std::invalid_argument("basis_index: level count != atom count");
    Index idx = 0;
    for (std::size_t a = 0; a < schemes.size(); ++a) {
        if (levels[a] < 0 || levels[a] >= schemes[a].dim())
            throw std::invalid_argument("basis_index: level out of range for atom");
        idx = idx * schemes[a].dim() + levels[a];
    }
    return idx;
}

inline std::vector<int> basis_levels(const SchemeList& schemes, Index index)
{
    std::vector<int> levels(schemes.size());
    for (std::size_t a = schemes.size(); a-- > 0;) {
        const int d = schemes[a].dim();
        levels[a]   = static_cast<int>(index % d);
        index /= d;
    }
    return levels;
}

inline std::string basis_label(const SchemeList& schemes, Index index)
{
    std::string s;
    for (int lv : basis_levels(schemes, index)) s += level_name(static_cast<Level>(lv));
    return s;
}

inline Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Single-atom |a><b| in the scheme's basis.
inline Matrix level_op(const LevelScheme& scheme, Level a, Level b)
{
    Matrix m = Matrix::Zero(scheme.dim(), scheme.dim());
    m(scheme.index(a), scheme.index(b)) = 1.0;
    return m;
}

// identity (x) ... (x) op (x) ... (x) identity, with op at atom_index (0-based).
inline Matrix embed(const Matrix& single_atom_op, int atom_index, const SchemeList& schemes)
{
    if (atom_index < 0 || atom_index >= static_cast<int>(schemes.size()))
        throw std::invalid_argument("embed: atom_index out of range");
    if (single_atom_op.rows() != single_atom_op.cols() ||
        single_atom_op.rows() != schemes[atom_index].dim())
        throw std::invalid_argument("embed: operator dimension does not match atom scheme");

    Index left = 1, right = 1;
    for (int a = 0; a < atom_index; ++a) left *= schemes[a].dim();
    for (int a = atom_index + 1; a < static_cast<int>(schemes.size()); ++a) right *= schemes[a].dim();

    Matrix out = kron(Matrix::Identity(left, left), single_atom_op);
    return kron(out, Matrix::Identity(right, right));
}

// Projector onto |a>_i |b>_j, identity on all other atoms.
inline Matrix pair_projector(Level a, Level b, int i, int j, const SchemeList& schemes)
{
    if (i == j) throw std::invalid_argument("pair_projector: atoms must be distinct");
    return embed(level_op(schemes[i], a, a), i, schemes) *
           embed(level_op(schemes[j], b, b), j, schemes);
}

inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

inline Matrix hermitian_close(const Matrix& a) { return a + a.adjoint(); }

inline bool is_hermitian(const Matrix& a, double tol = 1e-12)
{
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

// Eigenvalues of a Hermitian matrix, ascending.
inline RealVector hermitian_eigenvalues(const Matrix& a)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
    return solver.eigenvalues();
}

struct StateVector {
    explicit StateVector(Vector amplitudes) : amps_(std::move(amplitudes))
    {
        if (amps_.size() == 0) throw std::invalid_argument("StateVector: empty");
        if (std::abs(amps_.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("StateVector: norm differs from 1 beyond 1e-9");
    }

    Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }

  private:
    Vector amps_;
};

struct DensityMatrix {
    explicit DensityMatrix(Matrix entries) : m_(std::move(entries))
    {
        if (m_.rows() != m_.cols() || m_.rows() == 0)
            throw std::invalid_argument("DensityMatrix: not square");
        if (!is_hermitian(m_, 1e-9))
            throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-9");
        if (std::abs(m_.trace().real() - 1.0) > 1e-9 || std::abs(m_.trace().imag()) > 1e-9)
            throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-9");
        if (hermitian_eigenvalues(m_).minCoeff() < -1e-8)
            throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond -1e-8");
    }

    Index dim() const { return m_.rows(); }
    const Matrix& entries() const { return m_; }

    static DensityMatrix pure(const Vector& psi) { return DensityMatrix(psi * psi.adjoint()); }

  private:
    Matrix m_;
};

} // namespace rydsim
