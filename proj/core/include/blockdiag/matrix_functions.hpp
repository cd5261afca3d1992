#pragma once

#include "blockdiag/matrix.hpp"

namespace blockdiag {

/// Inverse square root of a Hermitian positive-definite matrix, principal
/// branch (the returned R is Hermitian with positive spectrum and satisfies
/// R*R*A = I). Eigenvalues at or below eps_pd signal the pathological
/// large-perturbation regime and raise BranchError.
ComplexMatrix hpd_inv_sqrt(const ComplexMatrix& A, double eps_pd = 1e-10);

/// exp(-i S) for Hermitian S, via the spectral decomposition of S.
ComplexMatrix matrix_exp_i(const ComplexMatrix& S);

/// Hermitian S with spectrum in (-pi, pi) such that exp(-i S) = T, for
/// unitary T. Computed through the spectral decomposition of T, reduced to
/// the Hermitian case by the Cayley transform W = i(I-T)(I+T)^{-1} (which
/// shares eigenvectors with T). An eigenvalue of T within minus_one_tol of
/// -1 sits on the branch cut and raises BranchError.
ComplexMatrix unitary_log_principal(const ComplexMatrix& T,
                                    double minus_one_tol = 1e-8);

} // namespace blockdiag
