#pragma once

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"

namespace blockdiag {

/// Spectral decomposition of a Hermitian matrix: A = X diag(E) X^+ with
/// orthonormal eigenvector columns. Eigenvalues are sorted ascending.
struct Eigendecomposition {
    RealVector eigenvalues;
    ComplexMatrix vectors;
    double min_gap = 0.0; // smallest |E_m - E_n| over m != n (0 for n = 1)
};

/// Cyclic Jacobi with complex Givens rotations. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-14 * ||A||_F (at most 60
/// sweeps). Deterministic for fixed input. Throws NotHermitianError if
/// ||A - A^+||_F > 1e-12 * max(1, ||A||_F).
Eigendecomposition hermitian_eig(const ComplexMatrix& A);

/// Reorders and re-phases eigenvector columns so that column j belongs to
/// the block containing index j (assignment by descending block projection
/// weight) and X[j][j] is real and nonnegative. With this gauge X -> I as
/// the perturbation vanishes.
///
/// Throws GaugeAmbiguityError when two columns contend for the last seat of
/// a block with projection weights closer than 1e-10, and BlockMismatchError
/// when the resulting occupancy disagrees with the columns' dominant blocks.
Eigendecomposition align_eigenvectors(const Eigendecomposition& D,
                                      const BlockPartition& P);

} // namespace blockdiag
