#include "blockdiag/matrix_functions.hpp"

#include <cmath>

#include "blockdiag/eigensolve.hpp"
#include "blockdiag/errors.hpp"

namespace blockdiag {

namespace {

ComplexMatrix rebuild(const Eigendecomposition& D, const RealVector& f) {
    return D.vectors * f.asDiagonal() * D.vectors.adjoint();
}

ComplexMatrix rebuild_complex(const Eigendecomposition& D,
                              const Eigen::VectorXcd& f) {
    return D.vectors * f.asDiagonal() * D.vectors.adjoint();
}

} // namespace

ComplexMatrix hpd_inv_sqrt(const ComplexMatrix& A, double eps_pd) {
    if (!is_hermitian(A, 1e-12))
        throw NotHermitianError("hpd_inv_sqrt: argument not hermitian");
    Eigendecomposition D = hermitian_eig(A);
    RealVector f(D.eigenvalues.size());
    for (int i = 0; i < D.eigenvalues.size(); ++i) {
        const double e = D.eigenvalues[i];
        if (e <= eps_pd)
            throw BranchError("hpd_inv_sqrt: eigenvalue " + std::to_string(e) +
                              " at or below the positive-definite floor " +
                              std::to_string(eps_pd));
        f[i] = 1.0 / std::sqrt(e);
    }
    return hermitize(rebuild(D, f));
}

ComplexMatrix matrix_exp_i(const ComplexMatrix& S) {
    if (!is_hermitian(S, 1e-12))
        throw NotHermitianError("matrix_exp_i: argument not hermitian");
    Eigendecomposition D = hermitian_eig(S);
    Eigen::VectorXcd f(D.eigenvalues.size());
    for (int i = 0; i < D.eigenvalues.size(); ++i)
        f[i] = std::exp(Complex(0.0, -D.eigenvalues[i]));
    return rebuild_complex(D, f);
}

ComplexMatrix unitary_log_principal(const ComplexMatrix& T,
                                    double minus_one_tol) {
    const int n = static_cast<int>(T.rows());
    if (T.cols() != n) throw DimensionError("unitary_log_principal: not square");
    if (!is_unitary(T, 1e-10))
        throw NotUnitaryError("unitary_log_principal: ||T^+T - I||_F = " +
                              std::to_string((T.adjoint() * T -
                                              ComplexMatrix::Identity(n, n)).norm()));

    // eigenvalues of 2I + T + T^+ are |1 + mu|^2 over eigenvalues mu of T
    ComplexMatrix M = hermitize(2.0 * ComplexMatrix::Identity(n, n) + T + T.adjoint());
    Eigendecomposition DM = hermitian_eig(M);
    const double floor = minus_one_tol * minus_one_tol;
    for (int i = 0; i < n; ++i)
        if (DM.eigenvalues[i] < floor)
            throw BranchError(
                "unitary_log_principal: eigenvalue of T within " +
                std::to_string(minus_one_tol) + " of -1 (|1+mu|^2 = " +
                std::to_string(std::max(DM.eigenvalues[i], 0.0)) + ")");

    RealVector minv(n);
    for (int i = 0; i < n; ++i) minv[i] = 1.0 / DM.eigenvalues[i];
    ComplexMatrix Minv = rebuild(DM, minv);

    // Cayley transform: W = i(I-T)(I+T)^{-1} = i(T^+ - T) M^{-1} for unitary
    // T; Hermitian with eigenvalues -tan(theta/2) on T's eigenvectors.
    ComplexMatrix W = hermitize(Complex(0.0, 1.0) * (T.adjoint() - T) * Minv);
    Eigendecomposition DW = hermitian_eig(W);
    RealVector theta(n);
    for (int i = 0; i < n; ++i) theta[i] = -2.0 * std::atan(DW.eigenvalues[i]);
    return hermitize(rebuild(DW, theta));
}

} // namespace blockdiag
