#pragma once

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"
#include "blockdiag/matrix_series.hpp"

namespace blockdiag {

/// H(lambda) = H0 + lambda * H1 with H0 block diagonal w.r.t. the partition.
/// Validated on construction: both terms hermitian to 1e-12 relative, H0
/// block diagonal to 1e-12 relative.
struct PerturbedHamiltonian {
    ComplexMatrix H0;
    ComplexMatrix H1;
    BlockPartition partition;

    PerturbedHamiltonian(ComplexMatrix h0, ComplexMatrix h1, BlockPartition p);
};

enum class GeneratorKind {
    full_diagonalizer, // Z: conjugation diagonalizes H order by order
    least_action,      // S of the minimal-||T-I|| transform
    block_offdiagonal, // S with B(S) = 0 (Schrieffer-Wolff style)
};

/// A generator power series: zero constant term, hermitian coefficients.
/// For block_offdiagonal kind the in-block entries of every coefficient are
/// exactly zero by construction; for full_diagonalizer built from a diagonal
/// H0 the diagonal of every coefficient is exactly zero (gauge convention).
struct GeneratorSeries {
    GeneratorKind kind;
    MatrixSeries series;

    /// Validates zero constant term and hermiticity of every coefficient
    /// (1e-12 relative).
    GeneratorSeries(GeneratorKind k, MatrixSeries s);
};

struct PerturbOptions {
    /// Minimal tolerated energy denominator, as a fraction of ||H0||_2.
    double gap_tol_factor = 1e-8;
};

/// Generator Z of the exact diagonalizer X = exp(-i Z), as a power series:
/// the unique coefficients with zero diagonal making
/// exp(i Z) (H0 + lambda H1) exp(-i Z) diagonal at every order <= K.
/// Requires all eigenvalue gaps of H0 to exceed the tolerance
/// (DegeneracyError otherwise). H0 may be any block-diagonal hermitian
/// matrix; a non-diagonal H0 is reduced internally (see docs on the
/// reduction below).
GeneratorSeries z_series(const PerturbedHamiltonian& PH, int order,
                         const PerturbOptions& opts = {});

/// Series of the least-action transform T = X B(X^+) (B(X) B(X^+))^{-1/2}
/// assembled from the Z series by series composition.
MatrixSeries t_series_least_action(const GeneratorSeries& Z,
                                   const BlockPartition& P);

/// Generator of the least-action transform: series_log of
/// t_series_least_action, truncated at `order`.
GeneratorSeries s_series_least_action(const GeneratorSeries& Z,
                                      const BlockPartition& P, int order);

/// Generator with B(S) = 0 exactly at every order, chosen so that
/// exp(i S) H exp(-i S) is block diagonal order by order. Only cross-block
/// eigenvalue gaps of H0 must exceed the tolerance; within-block
/// degeneracies are fine.
GeneratorSeries s_series_block_offdiag(const PerturbedHamiltonian& PH, int order,
                                       const PerturbOptions& opts = {});

/// Series of exp(i S) (H0 + lambda H1) exp(-i S) truncated at `order`.
MatrixSeries h_block_from_generators(const PerturbedHamiltonian& PH,
                                     const GeneratorSeries& S, int order);

} // namespace blockdiag
