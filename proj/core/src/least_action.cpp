#include "blockdiag/least_action.hpp"

#include "blockdiag/errors.hpp"
#include "blockdiag/matrix_functions.hpp"
#include "blockdiag/random_matrix.hpp"

namespace blockdiag {

BlockDiagResult cederbaum_from_eigendecomposition(const ComplexMatrix& H,
                                                  const Eigendecomposition& D,
                                                  const BlockPartition& P,
                                                  const LeastActionOptions& opts) {
    const int n = P.dim();
    const ComplexMatrix BX = block_project(D.vectors, P);
    const ComplexMatrix BXadj = BX.adjoint();
    const ComplexMatrix R = hpd_inv_sqrt(hermitize(BX * BXadj), opts.eps_pd);

    BlockDiagResult out;
    out.T = D.vectors * BXadj * R;
    out.H_block = hermitize(out.T.adjoint() * H * out.T);
    out.diagnostics.off_block_residual = off_block_norm(out.H_block, P);
    out.diagnostics.unitarity_residual =
        (out.T.adjoint() * out.T - ComplexMatrix::Identity(n, n)).norm();
    out.diagnostics.distance_to_identity =
        (out.T - ComplexMatrix::Identity(n, n)).norm();
    return out;
}

BlockDiagResult cederbaum_transform(const ComplexMatrix& H,
                                    const BlockPartition& P,
                                    const LeastActionOptions& opts) {
    if (H.rows() != H.cols() || H.rows() != P.dim())
        throw DimensionError("cederbaum_transform: matrix is " +
                             std::to_string(H.rows()) + "x" +
                             std::to_string(H.cols()) + ", partition dim " +
                             std::to_string(P.dim()));
    const Eigendecomposition D = align_eigenvectors(hermitian_eig(H), P);
    return cederbaum_from_eigendecomposition(H, D, P, opts);
}

ComplexMatrix extract_generator(const BlockDiagResult& R, double minus_one_tol) {
    return unitary_log_principal(R.T, minus_one_tol);
}

double minimality_gap(const BlockDiagResult& R, const BlockPartition& P,
                      int trials, std::uint64_t seed) {
    const int n = P.dim();
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    const double base = (R.T - I).norm();
    std::mt19937_64 rng(seed);
    double gap = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix V = random_block_unitary(P, rng);
        gap = std::min(gap, (R.T * V - I).norm() - base);
    }
    return gap;
}

} // namespace blockdiag
