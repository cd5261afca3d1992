#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdiag/errors.hpp"
#include "blockdiag/matrix_series.hpp"
#include "test_support.hpp"

using namespace blockdiag;
using testsupport::random_hermitian;
using testsupport::random_z_like_series;

namespace {

MatrixSeries linear_series(const ComplexMatrix& A, int order) {
    MatrixSeries s = MatrixSeries::identity(static_cast<int>(A.rows()), order);
    s.coeff(1) = A;
    return s;
}

} // namespace

TEST_CASE("series_mul") {
    ComplexMatrix A = random_hermitian(5, 1);
    MatrixSeries plus = linear_series(A, 2);
    MatrixSeries minus = linear_series(-A, 2);
    MatrixSeries prod = series_mul(plus, minus);
    CHECK((prod.coeff(0) - ComplexMatrix::Identity(5, 5)).norm() == 0.0);
    CHECK(prod.coeff(1).norm() == 0.0);
    CHECK((prod.coeff(2) + A * A).norm() == 0.0);

    MatrixSeries I = MatrixSeries::identity(5, 2);
    CHECK(series_mul(plus, I).max_coeff_distance(plus) == 0.0);

    // (I + lambda z)^3 has binomial coefficients
    ComplexMatrix z = random_hermitian(4, 2);
    MatrixSeries lin = linear_series(z, 3);
    MatrixSeries cube = series_mul(series_mul(lin, lin), lin);
    CHECK((cube.coeff(1) - 3.0 * z).norm() < 1e-14 * z.norm());
    CHECK((cube.coeff(2) - 3.0 * z * z).norm() < 1e-13);
    CHECK((cube.coeff(3) - z * z * z).norm() < 1e-13);

    CHECK_THROWS_AS(series_mul(plus, MatrixSeries::identity(5, 3)), DimensionError);
    CHECK_THROWS_AS(series_mul(plus, MatrixSeries::identity(4, 2)), DimensionError);
}

TEST_CASE("series_mul associativity") {
    for (int trial = 0; trial < 25; ++trial) {
        MatrixSeries A = random_z_like_series(6, 4, 10 + static_cast<std::uint64_t>(trial));
        MatrixSeries B = random_z_like_series(6, 4, 60 + static_cast<std::uint64_t>(trial));
        MatrixSeries C = random_z_like_series(6, 4, 110 + static_cast<std::uint64_t>(trial));
        A.coeff(0) = random_hermitian(6, 500 + static_cast<std::uint64_t>(trial));
        B.coeff(0) = random_hermitian(6, 600 + static_cast<std::uint64_t>(trial));
        C.coeff(0) = random_hermitian(6, 700 + static_cast<std::uint64_t>(trial));
        MatrixSeries left = series_mul(series_mul(A, B), C);
        MatrixSeries right = series_mul(A, series_mul(B, C));
        CHECK(left.max_coeff_distance(right) < 1e-13);
    }
}

TEST_CASE("adjoint is an anti-homomorphism, coefficientwise") {
    MatrixSeries A = random_z_like_series(5, 3, 3);
    MatrixSeries B = random_z_like_series(5, 3, 4);
    A.coeff(0) = random_hermitian(5, 30);
    B.coeff(0) = random_hermitian(5, 40);
    MatrixSeries lhs = series_mul(A, B).adjoint();
    MatrixSeries rhs = series_mul(B.adjoint(), A.adjoint());
    CHECK(lhs.max_coeff_distance(rhs) < 1e-14);
}

TEST_CASE("series_inv_sqrt") {
    MatrixSeries I = MatrixSeries::identity(4, 3);
    CHECK(series_inv_sqrt(I).max_coeff_distance(I) == 0.0);

    // A = I + lambda^2 C: binomial coefficients of (1+x)^{-1/2}
    ComplexMatrix C = random_hermitian(4, 8);
    MatrixSeries A = MatrixSeries::identity(4, 4);
    A.coeff(2) = C;
    MatrixSeries R = series_inv_sqrt(A);
    CHECK(R.coeff(1).norm() == 0.0);
    CHECK((R.coeff(2) + 0.5 * C).norm() < 1e-14);
    CHECK(R.coeff(3).norm() == 0.0);
    CHECK((R.coeff(4) - 0.375 * C * C).norm() < 1e-14);

    // defining property
    MatrixSeries generic = random_z_like_series(5, 4, 17);
    generic.coeff(0) = ComplexMatrix::Identity(5, 5);
    MatrixSeries Rg = series_inv_sqrt(generic);
    MatrixSeries check = series_mul(Rg, series_mul(Rg, generic));
    CHECK(check.max_coeff_distance(MatrixSeries::identity(5, 4)) < 1e-13);

    MatrixSeries bad = MatrixSeries::identity(4, 3);
    bad.coeff(0)(0, 0) = 2.0;
    CHECK_THROWS_AS(series_inv_sqrt(bad), NormalizationError);
}

TEST_CASE("series_inv_sqrt matches the third-order bracket forms") {
    // Structure check on B(X) B(X^+) built from generator coefficients
    // z1..z3: the lambda^2 coefficient of the product is
    // -B(z1^2) + B(z1)^2 and the inverse square root negates half of the
    // lambda^2 / lambda^3 brackets.
    BlockPartition P = testsupport::partition222();
    MatrixSeries Z = random_z_like_series(6, 3, 99);
    const ComplexMatrix z1 = Z.coeff(1), z2 = Z.coeff(2);
    MatrixSeries X = series_exp(Z);
    MatrixSeries M = series_mul(X.block_project(P), X.adjoint().block_project(P));

    const ComplexMatrix Bz1 = block_project(z1, P);
    const ComplexMatrix Bz2 = block_project(z2, P);
    const ComplexMatrix Bz1sq = block_project(z1 * z1, P);
    const Complex i(0, 1);
    ComplexMatrix m2 = -Bz1sq + Bz1 * Bz1;
    ComplexMatrix m3 = -(block_project(z1 * z2, P) + block_project(z2 * z1, P)) +
                       (Bz1 * Bz2 + Bz2 * Bz1) +
                       (i / 2.0) * (Bz1 * Bz1sq - Bz1sq * Bz1);
    CHECK((M.coeff(0) - ComplexMatrix::Identity(6, 6)).norm() == 0.0);
    CHECK(M.coeff(1).norm() < 1e-15);
    CHECK((M.coeff(2) - m2).norm() < 1e-14);
    CHECK((M.coeff(3) - m3).norm() < 1e-14);

    MatrixSeries R = series_inv_sqrt(M);
    CHECK((R.coeff(2) + 0.5 * m2).norm() < 1e-14);
    CHECK((R.coeff(3) + 0.5 * m3).norm() < 1e-14);
}

TEST_CASE("series_exp") {
    ComplexMatrix s1 = random_hermitian(5, 12);
    MatrixSeries G(5, 2);
    G.coeff(1) = s1;
    MatrixSeries E = series_exp(G);
    CHECK((E.coeff(0) - ComplexMatrix::Identity(5, 5)).norm() == 0.0);
    CHECK((E.coeff(1) - Complex(0, -1) * s1).norm() == 0.0);
    CHECK((E.coeff(2) + 0.5 * s1 * s1).norm() < 1e-14);

    CHECK(series_exp(MatrixSeries(4, 3)).max_coeff_distance(MatrixSeries::identity(4, 3)) == 0.0);

    // order-3 composition coefficient
    MatrixSeries Z = random_z_like_series(6, 3, 13);
    const ComplexMatrix z1 = Z.coeff(1), z2 = Z.coeff(2), z3 = Z.coeff(3);
    MatrixSeries X = series_exp(Z);
    const Complex i(0, 1);
    ComplexMatrix x3 = -i * z3 - 0.5 * (z1 * z2 + z2 * z1) + (i / 6.0) * z1 * z1 * z1;
    CHECK((X.coeff(3) - x3).norm() < 1e-14);

    MatrixSeries bad(5, 2);
    bad.coeff(0) = ComplexMatrix::Identity(5, 5);
    CHECK_THROWS_AS(series_exp(bad), NormalizationError);
}

TEST_CASE("series_log") {
    MatrixSeries I = MatrixSeries::identity(4, 3);
    CHECK(series_log(I).max_coeff_distance(MatrixSeries(4, 3)) == 0.0);

    // recovers the generator relations: s1 = i T1, s2 = i (T2 + s1^2 / 2),
    // s3 = i (T3 + (s1 s2 + s2 s1)/2 - i s1^3 / 6)
    MatrixSeries U = MatrixSeries::identity(6, 3);
    U.coeff(1) = random_hermitian(6, 91);
    U.coeff(2) = random_hermitian(6, 92);
    U.coeff(3) = random_hermitian(6, 93);
    const ComplexMatrix T1 = U.coeff(1), T2 = U.coeff(2), T3 = U.coeff(3);
    MatrixSeries G = series_log(U);
    const Complex i(0, 1);
    const ComplexMatrix s1 = i * T1;
    const ComplexMatrix s2 = i * (T2 + 0.5 * s1 * s1);
    const ComplexMatrix s3 =
        i * (T3 + 0.5 * (s1 * s2 + s2 * s1) - (i / 6.0) * s1 * s1 * s1);
    CHECK((G.coeff(1) - s1).norm() < 1e-14);
    CHECK((G.coeff(2) - s2).norm() < 1e-14);
    CHECK((G.coeff(3) - s3).norm() < 1e-13);

    MatrixSeries bad(4, 2);
    CHECK_THROWS_AS(series_log(bad), NormalizationError);
}

TEST_CASE("exp/log round trips") {
    for (int trial = 0; trial < 40; ++trial) {
        const int order = 1 + trial % 8;
        MatrixSeries G = random_z_like_series(5, order, 200 + static_cast<std::uint64_t>(trial));
        MatrixSeries back = series_log(series_exp(G));
        CHECK(back.max_coeff_distance(G) < 1e-12);

        MatrixSeries U = MatrixSeries::identity(5, order);
        for (int k = 1; k <= order; ++k)
            U.coeff(k) = random_hermitian(5, 300 + static_cast<std::uint64_t>(10 * trial + k), 0.8);
        MatrixSeries roundtrip = series_exp(series_log(U));
        CHECK(roundtrip.max_coeff_distance(U) < 1e-12);
    }
}

TEST_CASE("series order cap and eval") {
    CHECK_THROWS_AS(MatrixSeries(4, kMaxSeriesOrder + 1), DimensionError);
    CHECK_THROWS_AS(MatrixSeries(4, -1), DimensionError);

    ComplexMatrix A = random_hermitian(3, 7);
    MatrixSeries s(3, 3);
    s.coeff(0) = ComplexMatrix::Identity(3, 3);
    s.coeff(2) = A;
    const double lam = 0.25;
    ComplexMatrix full = s.eval(lam);
    CHECK((full - (ComplexMatrix::Identity(3, 3) + lam * lam * A)).norm() < 1e-15);
    ComplexMatrix partial = s.eval(lam, 1);
    CHECK((partial - ComplexMatrix::Identity(3, 3)).norm() == 0.0);
}
