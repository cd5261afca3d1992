#include "blockdiag/perturbation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "blockdiag/eigensolve.hpp"
#include "blockdiag/errors.hpp"

namespace blockdiag {

namespace {

double spectral_norm_hermitian(const ComplexMatrix& A) {
    Eigendecomposition D = hermitian_eig(A);
    double m = 0.0;
    for (int i = 0; i < D.eigenvalues.size(); ++i)
        m = std::max(m, std::abs(D.eigenvalues[i]));
    return m;
}

// Working basis for the recursions: H0 diagonal. A block-diagonal H0 is
// diagonalized block by block, which is a gauge change commuting with B, so
// rotating the resulting generators back preserves both prescriptions.
struct ReducedBasis {
    bool rotated = false;
    ComplexMatrix W;      // block-diagonal unitary, H0 = W diag(E) W^+
    RealVector energies;  // diagonal of the reduced H0
    ComplexMatrix H1;     // W^+ H1 W
};

ReducedBasis reduce_to_diagonal(const PerturbedHamiltonian& PH) {
    const int n = PH.partition.dim();
    ReducedBasis rb;
    double offdiag = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) offdiag += std::norm(PH.H0(i, j));
    if (std::sqrt(offdiag) <= 1e-14 * std::max(1.0, PH.H0.norm())) {
        rb.energies.resize(n);
        for (int i = 0; i < n; ++i) rb.energies[i] = PH.H0(i, i).real();
        rb.H1 = PH.H1;
        return rb;
    }
    rb.rotated = true;
    rb.W = ComplexMatrix::Zero(n, n);
    rb.energies.resize(n);
    for (const auto& blk : PH.partition.blocks()) {
        const int m = static_cast<int>(blk.size());
        ComplexMatrix sub(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                sub(a, b) = PH.H0(blk[static_cast<size_t>(a)], blk[static_cast<size_t>(b)]);
        Eigendecomposition D = hermitian_eig(sub);
        for (int a = 0; a < m; ++a) {
            rb.energies[blk[static_cast<size_t>(a)]] = D.eigenvalues[a];
            for (int b = 0; b < m; ++b)
                rb.W(blk[static_cast<size_t>(b)], blk[static_cast<size_t>(a)]) = D.vectors(b, a);
        }
    }
    rb.H1 = rb.W.adjoint() * PH.H1 * rb.W;
    return rb;
}

// exp(i G) (H0 + lambda H1) exp(-i G), all as series of the given order
MatrixSeries conjugate_series(const MatrixSeries& G, const ComplexMatrix& H0,
                              const ComplexMatrix& H1) {
    const int K = G.order();
    MatrixSeries H = MatrixSeries::from_coeffs({H0, H1}, K);
    MatrixSeries left = series_exp(Complex(-1.0, 0.0) * G);  // exp(+iG)
    MatrixSeries right = series_exp(G);                      // exp(-iG)
    return series_mul(series_mul(left, H), right);
}

enum class ZeroTarget { all_offdiagonal, cross_block };

// Order-by-order construction of the generator that removes the target
// entries of exp(iG) H exp(-iG). At order k the still-free coefficient g_k
// enters the residual only through i[g_k, H0], so with H0 = diag(E) each
// target entry fixes g_k[m][n] = i R[m][n] / (E_n - E_m).
MatrixSeries solve_generator(const RealVector& E, const ComplexMatrix& H1,
                             const BlockPartition& P, int K, ZeroTarget target,
                             double gap_tol) {
    const int n = static_cast<int>(E.size());
    // check the denominators we will actually divide by
    double min_gap = std::numeric_limits<double>::infinity();
    for (int m = 0; m < n; ++m)
        for (int j = m + 1; j < n; ++j) {
            const bool needed = target == ZeroTarget::all_offdiagonal ||
                                !P.same_block(m, j);
            if (needed) min_gap = std::min(min_gap, std::abs(E[m] - E[j]));
        }
    if (min_gap <= gap_tol)
        throw DegeneracyError(
            std::string(target == ZeroTarget::all_offdiagonal
                            ? "eigenvalue"
                            : "cross-block eigenvalue") +
            " gap " + std::to_string(min_gap) + " below tolerance " +
            std::to_string(gap_tol));

    ComplexMatrix H0 = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) H0(i, i) = E[i];

    MatrixSeries G(n, K);
    for (int k = 1; k <= K; ++k) {
        const MatrixSeries C = conjugate_series(G, H0, H1); // g_k still zero
        const ComplexMatrix& R = C.coeff(k);
        ComplexMatrix& g = G.coeff(k);
        for (int m = 0; m < n; ++m) {
            for (int j = m + 1; j < n; ++j) {
                const bool wanted = target == ZeroTarget::all_offdiagonal ||
                                    !P.same_block(m, j);
                if (!wanted) continue;
                const Complex v = Complex(0.0, 1.0) * R(m, j) / (E[j] - E[m]);
                g(m, j) = v;
                g(j, m) = std::conj(v); // hermitian by construction
            }
        }
    }
    return G;
}

MatrixSeries rotate_series(const MatrixSeries& S, const ComplexMatrix& W) {
    MatrixSeries out = S;
    for (int k = 0; k <= S.order(); ++k)
        out.coeff(k) = W * S.coeff(k) * W.adjoint();
    return out;
}

} // namespace

PerturbedHamiltonian::PerturbedHamiltonian(ComplexMatrix h0, ComplexMatrix h1,
                                           BlockPartition p)
    : H0(std::move(h0)), H1(std::move(h1)), partition(std::move(p)) {
    const int n = partition.dim();
    if (H0.rows() != n || H0.cols() != n || H1.rows() != n || H1.cols() != n)
        throw DimensionError("PerturbedHamiltonian: H0/H1 must be " +
                             std::to_string(n) + "x" + std::to_string(n));
    if (!is_hermitian(H0, 1e-12))
        throw NotHermitianError("PerturbedHamiltonian: H0 not hermitian");
    if (!is_hermitian(H1, 1e-12))
        throw NotHermitianError("PerturbedHamiltonian: H1 not hermitian");
    if (off_block_norm(H0, partition) > 1e-12 * H0.norm())
        throw DimensionError(
            "PerturbedHamiltonian: H0 is not block diagonal (off-block norm " +
            std::to_string(off_block_norm(H0, partition)) + ")");
}

GeneratorSeries::GeneratorSeries(GeneratorKind k, MatrixSeries s)
    : kind(k), series(std::move(s)) {
    if (series.coeff(0).norm() != 0.0)
        throw NormalizationError("GeneratorSeries: constant term must be zero");
    for (int j = 1; j <= series.order(); ++j)
        if (!is_hermitian(series.coeff(j), 1e-12))
            throw NotHermitianError("GeneratorSeries: coefficient " +
                                    std::to_string(j) + " not hermitian");
}

GeneratorSeries z_series(const PerturbedHamiltonian& PH, int order,
                         const PerturbOptions& opts) {
    if (order < 1 || order > kMaxSeriesOrder)
        throw DimensionError("z_series: order " + std::to_string(order) +
                             " outside 1.." + std::to_string(kMaxSeriesOrder));
    const ReducedBasis rb = reduce_to_diagonal(PH);
    const double gap_tol =
        opts.gap_tol_factor * spectral_norm_hermitian(PH.H0);
    MatrixSeries Z =
        solve_generator(rb.energies, rb.H1, PH.partition, order,
                        ZeroTarget::all_offdiagonal, gap_tol);
    if (rb.rotated) Z = rotate_series(Z, rb.W);
    return GeneratorSeries(GeneratorKind::full_diagonalizer, std::move(Z));
}

MatrixSeries t_series_least_action(const GeneratorSeries& Z,
                                   const BlockPartition& P) {
    if (Z.kind != GeneratorKind::full_diagonalizer)
        throw DimensionError(
            "t_series_least_action: generator must be a full diagonalizer");
    const MatrixSeries X = series_exp(Z.series);
    const MatrixSeries BXadj = X.adjoint().block_project(P);
    const MatrixSeries BX = X.block_project(P);
    const MatrixSeries R = series_inv_sqrt(series_mul(BX, BXadj));
    return series_mul(series_mul(X, BXadj), R);
}

GeneratorSeries s_series_least_action(const GeneratorSeries& Z,
                                      const BlockPartition& P, int order) {
    if (order < 1 || order > Z.series.order())
        throw DimensionError("s_series_least_action: order " +
                             std::to_string(order) + " outside 1.." +
                             std::to_string(Z.series.order()));
    MatrixSeries T = t_series_least_action(Z, P).truncated(order);
    return GeneratorSeries(GeneratorKind::least_action, series_log(T));
}

GeneratorSeries s_series_block_offdiag(const PerturbedHamiltonian& PH, int order,
                                       const PerturbOptions& opts) {
    if (order < 1 || order > kMaxSeriesOrder)
        throw DimensionError("s_series_block_offdiag: order " +
                             std::to_string(order) + " outside 1.." +
                             std::to_string(kMaxSeriesOrder));
    const ReducedBasis rb = reduce_to_diagonal(PH);
    const double gap_tol =
        opts.gap_tol_factor * spectral_norm_hermitian(PH.H0);
    MatrixSeries S = solve_generator(rb.energies, rb.H1, PH.partition, order,
                                     ZeroTarget::cross_block, gap_tol);
    if (rb.rotated) S = rotate_series(S, rb.W);
    return GeneratorSeries(GeneratorKind::block_offdiagonal, std::move(S));
}

MatrixSeries h_block_from_generators(const PerturbedHamiltonian& PH,
                                     const GeneratorSeries& S, int order) {
    if (order < 0 || order > S.series.order())
        throw DimensionError("h_block_from_generators: order " +
                             std::to_string(order) + " outside 0.." +
                             std::to_string(S.series.order()));
    MatrixSeries G = S.series.truncated(order);
    return conjugate_series(G, PH.H0, PH.H1);
}

} // namespace blockdiag
