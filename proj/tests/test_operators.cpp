#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rydsim/operators.hpp>
#include <rydsim/rng.hpp>

#include <algorithm>
#include <vector>

using namespace rydsim;

namespace {

Matrix random_hermitian(Index dim, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    Matrix a(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) a(i, j) = Complex{rng.normal(), rng.normal()};
    return Matrix(0.5 * (a + a.adjoint()));
}

} // namespace

TEST_CASE("basis indexing is lexicographic with atom 1 slowest")
{
    const auto schemes = uniform_schemes(2);
    CHECK(space_dim(schemes) == 9);
    CHECK(basis_index(schemes, {0, 0}) == 0);
    CHECK(basis_index(schemes, {0, 2}) == 2);   // |0r>
    CHECK(basis_index(schemes, {1, 1}) == 4);   // |11>
    CHECK(basis_index(schemes, {2, 2}) == 8);   // |rr>
    CHECK(basis_label(schemes, 5) == "1r");
    CHECK(basis_levels(schemes, 7) == std::vector<int>{2, 1});

    const auto four = uniform_schemes(2, true);
    CHECK(space_dim(four) == 16);
    CHECK(basis_label(four, 11) == "rg");
}

TEST_CASE("embed: identity case")
{
    const auto schemes = uniform_schemes(2);
    const Matrix id3 = Matrix::Identity(3, 3);
    CHECK(embed(id3, 0, schemes).isApprox(Matrix::Identity(9, 9)));
    CHECK(embed(id3, 1, schemes).isApprox(Matrix::Identity(9, 9)));
}

TEST_CASE("embed: |1><r| on atom 1 of 2 has exactly the hand-enumerated entries")
{
    const auto schemes = uniform_schemes(2);
    const Matrix op = embed(level_op(schemes[0], Level::g1, Level::ryd), 0, schemes);

    // Oracle: enumerate the tensor basis directly. |1 k><r k| for k = 0,1,2.
    int nonzero = 0;
    for (Index r = 0; r < 9; ++r)
        for (Index c = 0; c < 9; ++c) {
            const auto lr = basis_levels(schemes, r);
            const auto lc = basis_levels(schemes, c);
            const bool expected = lr[0] == 1 && lc[0] == 2 && lr[1] == lc[1];
            if (expected) {
                CHECK(op(r, c) == Complex{1.0, 0.0});
                ++nonzero;
            } else {
                CHECK(op(r, c) == Complex{0.0, 0.0});
            }
        }
    CHECK(nonzero == 3);
}

TEST_CASE("embed on disjoint atoms commutes and equals the simultaneous construction")
{
    const auto schemes = uniform_schemes(2);
    const Matrix a = level_op(schemes[0], Level::g1, Level::ryd);
    const Matrix b = level_op(schemes[1], Level::g0, Level::g1);
    const Matrix ab = embed(a, 0, schemes) * embed(b, 1, schemes);
    const Matrix ba = embed(b, 1, schemes) * embed(a, 0, schemes);
    CHECK(ab.isApprox(ba));
    CHECK(ab.isApprox(kron(a, b)));
}

TEST_CASE("embed rejects bad arguments")
{
    const auto schemes = uniform_schemes(2);
    CHECK_THROWS_AS(embed(Matrix::Identity(4, 4), 0, schemes), std::invalid_argument);
    CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), 2, schemes), std::invalid_argument);
    CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), -1, schemes), std::invalid_argument);
}

TEST_CASE("embed preserves spectra with complementary multiplicity")
{
    const auto schemes = uniform_schemes(3);
    const Matrix op = random_hermitian(3, 42);
    const Matrix big = embed(op, 1, schemes);

    const RealVector small_ev = hermitian_eigenvalues(op);
    const RealVector big_ev = hermitian_eigenvalues(big);

    std::vector<double> expected;
    for (Index i = 0; i < small_ev.size(); ++i)
        for (int copy = 0; copy < 9; ++copy) expected.push_back(small_ev[i]);
    std::sort(expected.begin(), expected.end());

    REQUIRE(big_ev.size() == static_cast<Index>(expected.size()));
    for (Index i = 0; i < big_ev.size(); ++i)
        CHECK(big_ev[i] == doctest::Approx(expected[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("pair projector: rank, trace, idempotence, orthogonality")
{
    const auto two = uniform_schemes(2);
    const Matrix prr = pair_projector(Level::ryd, Level::ryd, 0, 1, two);
    CHECK(prr.trace().real() == doctest::Approx(1.0));
    CHECK((prr * prr - prr).norm() == doctest::Approx(0.0));

    const auto three = uniform_schemes(3);
    const Matrix p13 = pair_projector(Level::ryd, Level::ryd, 0, 2, three);
    CHECK(p13.trace().real() == doctest::Approx(3.0));  // identity factor on atom 2
    CHECK((p13 * p13 - p13).norm() == doctest::Approx(0.0));

    const Matrix p00 = pair_projector(Level::g0, Level::g0, 0, 1, two);
    const Matrix p11 = pair_projector(Level::g1, Level::g1, 0, 1, two);
    CHECK((p00 * p11).norm() == doctest::Approx(0.0));

    CHECK_THROWS_AS(pair_projector(Level::ryd, Level::ryd, 1, 1, two), std::invalid_argument);
}

TEST_CASE("hermitian_close")
{
    const auto schemes = uniform_schemes(1);
    const Matrix zero = Matrix::Zero(3, 3);
    CHECK(hermitian_close(zero).norm() == 0.0);

    const Matrix a = imag_unit * level_op(schemes[0], Level::g1, Level::ryd);
    const Matrix closed = hermitian_close(a);
    Matrix expected = Matrix::Zero(3, 3);
    expected(1, 2) = imag_unit;
    expected(2, 1) = -imag_unit;  // direct conjugate transpose
    CHECK(closed.isApprox(expected));
    CHECK(is_hermitian(closed));

    const Matrix h = random_hermitian(3, 7);
    CHECK(hermitian_close(h).isApprox(2.0 * h));
}

TEST_CASE("state vector and density matrix invariants are enforced")
{
    Vector good(2);
    good << 1.0, 0.0;
    CHECK_NOTHROW(StateVector{good});
    CHECK_THROWS_AS(StateVector{Vector(2.0 * good)}, std::invalid_argument);

    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.5;
    CHECK_NOTHROW(DensityMatrix{rho});

    Matrix bad_trace = 2.0 * rho;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

    Matrix not_herm = rho;
    not_herm(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix{not_herm}, std::invalid_argument);

    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{negative}, std::invalid_argument);

    CHECK_NOTHROW(DensityMatrix::pure(good));
}

TEST_CASE("level scheme shape")
{
    CHECK(LevelScheme::three_level().dim() == 3);
    CHECK(LevelScheme::four_level().dim() == 4);
    CHECK_THROWS_AS(LevelScheme::three_level().index(Level::leak), std::invalid_argument);
    CHECK(LevelScheme::four_level().index(Level::leak) == 3);
}
