#pragma once

#include <complex>

#include <Eigen/Dense>

namespace blockdiag {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Frobenius norm (the norm used by every residual in this library).
inline double frobenius(const ComplexMatrix& A) { return A.norm(); }

inline ComplexMatrix hermitize(const ComplexMatrix& A) {
    return 0.5 * (A + A.adjoint());
}

/// ||A - A^+||_F <= tol * max(1, ||A||_F)
inline bool is_hermitian(const ComplexMatrix& A, double tol = 1e-12) {
    if (A.rows() != A.cols()) return false;
    return (A - A.adjoint()).norm() <= tol * std::max(1.0, A.norm());
}

/// ||U^+ U - I||_F <= tol * sqrt(n)
inline bool is_unitary(const ComplexMatrix& U, double tol = 1e-12) {
    if (U.rows() != U.cols()) return false;
    const auto n = U.rows();
    ComplexMatrix G = U.adjoint() * U;
    G -= ComplexMatrix::Identity(n, n);
    return G.norm() <= tol * std::sqrt(static_cast<double>(n));
}

inline ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B) {
    return A * B - B * A;
}

} // namespace blockdiag
