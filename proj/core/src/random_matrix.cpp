#include "blockdiag/random_matrix.hpp"

#include <string>

#include "blockdiag/errors.hpp"

namespace blockdiag {

ComplexMatrix generate_random_hermitian(int n, std::uint64_t seed, double scale) {
    if (n < 1)
        throw DimensionError("generate_random_hermitian: n = " + std::to_string(n));
    std::mt19937_64 rng(seed);
    ComplexMatrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto [re, im] = normal_pair(rng);
            A(i, j) = Complex(re, im);
        }
    ComplexMatrix H = 0.5 * (A + A.adjoint());
    const double norm = H.norm();
    if (norm > 0.0) H *= scale / norm;
    return H;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    ComplexMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto [re, im] = normal_pair(rng);
            G(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<ComplexMatrix> qr(G);
    ComplexMatrix Q = qr.householderQ();
    ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = R(j, j);
        const double ad = std::abs(d);
        if (ad > 0.0) Q.col(j) *= d / ad;
    }
    return Q;
}

ComplexMatrix random_block_unitary(const BlockPartition& P, std::mt19937_64& rng) {
    const int n = P.dim();
    ComplexMatrix V = ComplexMatrix::Zero(n, n);
    for (const auto& blk : P.blocks()) {
        const int m = static_cast<int>(blk.size());
        const ComplexMatrix Q = random_unitary(m, rng);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                V(blk[static_cast<size_t>(a)], blk[static_cast<size_t>(b)]) = Q(a, b);
    }
    return V;
}

} // namespace blockdiag
