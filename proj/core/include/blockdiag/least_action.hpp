#pragma once

#include <cstdint>
#include <optional>

#include "blockdiag/block_partition.hpp"
#include "blockdiag/eigensolve.hpp"
#include "blockdiag/matrix.hpp"

namespace blockdiag {

struct BlockDiagDiagnostics {
    double off_block_residual = 0.0;   // ||H_block - B(H_block)||_F
    double unitarity_residual = 0.0;   // ||T^+T - I||_F
    double distance_to_identity = 0.0; // ||T - I||_F
};

struct BlockDiagResult {
    ComplexMatrix T;
    ComplexMatrix H_block;
    std::optional<ComplexMatrix> generator; // S with T = exp(-iS), on request
    BlockDiagDiagnostics diagnostics;
};

struct LeastActionOptions {
    double eps_pd = 1e-10;        // positive-definite floor for B(X)B(X^+)
    double minus_one_tol = 1e-8;  // branch cutoff for generator extraction
};

/// The closed-form minimal-||T - I|| block-diagonalizing transform
///   T = X B(X^+) (B(X) B(X^+))^{-1/2}
/// with X the gauge-fixed eigenvector matrix of H, and H_block = T^+ H T.
/// The result does not depend on the eigenvector gauge (any block-diagonal
/// right factor on X cancels). Throws BranchError when B(X)B(X^+) is not
/// safely positive definite (the large-perturbation pathology), plus the
/// alignment errors from align_eigenvectors.
BlockDiagResult cederbaum_transform(const ComplexMatrix& H,
                                    const BlockPartition& P,
                                    const LeastActionOptions& opts = {});

/// Same, but from an already-computed eigendecomposition of H taken as-is
/// (no re-alignment). Useful for gauge experiments and cross-checks.
BlockDiagResult cederbaum_from_eigendecomposition(const ComplexMatrix& H,
                                                  const Eigendecomposition& D,
                                                  const BlockPartition& P,
                                                  const LeastActionOptions& opts = {});

/// Hermitian S with exp(-iS) = R.T, spectrum inside the principal branch.
ComplexMatrix extract_generator(const BlockDiagResult& R,
                                double minus_one_tol = 1e-8);

/// Samples `trials` Haar-distributed block-diagonal unitaries V (one
/// independent draw per block, own seeded generator) and returns
///   min over samples of ||T V - I||_F - ||T - I||_F,
/// which the minimality property predicts to be >= 0 up to rounding.
double minimality_gap(const BlockDiagResult& R, const BlockPartition& P,
                      int trials, std::uint64_t seed);

} // namespace blockdiag
