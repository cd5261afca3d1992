#include "blockdiag/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "blockdiag/errors.hpp"

namespace blockdiag {

namespace {

constexpr double kOffDiagStop = 1e-14; // relative to ||A||_F
constexpr int kMaxSweeps = 60;
constexpr double kSeatTieTol = 1e-10;

double off_diag_norm(const ComplexMatrix& A) {
    double sum = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) sum += std::norm(A(i, j));
    return std::sqrt(sum);
}

double min_pairwise_gap(const RealVector& sorted) {
    if (sorted.size() < 2) return 0.0;
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < sorted.size(); ++i)
        gap = std::min(gap, sorted[i + 1] - sorted[i]);
    return gap;
}

} // namespace

Eigendecomposition hermitian_eig(const ComplexMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionError("hermitian_eig: matrix is " +
                             std::to_string(A.rows()) + "x" +
                             std::to_string(A.cols()));
    if (!is_hermitian(A, 1e-12))
        throw NotHermitianError("hermitian_eig: ||A - A^+||_F = " +
                                std::to_string((A - A.adjoint()).norm()));
    const int n = static_cast<int>(A.rows());
    ComplexMatrix M = hermitize(A);
    ComplexMatrix X = ComplexMatrix::Identity(n, n);
    const double fro = M.norm();

    for (int sweep = 0; sweep < kMaxSweeps && fro > 0.0; ++sweep) {
        if (off_diag_norm(M) <= kOffDiagStop * fro) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = M(p, q);
                const double absb = std::abs(apq);
                if (absb <= 1e-300) continue;
                const double app = M(p, p).real();
                const double aqq = M(q, q).real();
                const Complex phase = apq / absb;
                // smaller-angle root of t^2 + 2 tau t - 1 = 0
                const double tau = (aqq - app) / (2.0 * absb);
                const double t =
                    (tau >= 0.0) ? 1.0 / (tau + std::hypot(1.0, tau))
                                 : -1.0 / (-tau + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                // 2x2 unitary acting on columns (p,q):
                //   [ c        s*phase ]
                //   [-s*conj(phase)  c ]
                const Complex jpq = s * phase;
                const Complex jqp = -s * std::conj(phase);
                // M <- J^+ M J, X <- X J
                for (int r = 0; r < n; ++r) {
                    const Complex mp = M(r, p), mq = M(r, q);
                    M(r, p) = mp * c + mq * jqp;
                    M(r, q) = mp * jpq + mq * c;
                }
                for (int cidx = 0; cidx < n; ++cidx) {
                    const Complex mp = M(p, cidx), mq = M(q, cidx);
                    M(p, cidx) = std::conj(Complex(c, 0)) * mp + std::conj(jqp) * mq;
                    M(q, cidx) = std::conj(jpq) * mp + std::conj(Complex(c, 0)) * mq;
                }
                M(p, q) = 0.0;
                M(q, p) = 0.0;
                M(p, p) = M(p, p).real();
                M(q, q) = M(q, q).real();
                for (int r = 0; r < n; ++r) {
                    const Complex xp = X(r, p), xq = X(r, q);
                    X(r, p) = xp * c + xq * jqp;
                    X(r, q) = xp * jpq + xq * c;
                }
            }
        }
    }

    RealVector E(n);
    for (int i = 0; i < n; ++i) E[i] = M(i, i).real();

    // ascending sort, stable w.r.t. the Jacobi output order
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return E[a] < E[b]; });
    Eigendecomposition out;
    out.eigenvalues.resize(n);
    out.vectors.resize(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = E[perm[static_cast<size_t>(j)]];
        out.vectors.col(j) = X.col(perm[static_cast<size_t>(j)]);
    }
    out.min_gap = min_pairwise_gap(out.eigenvalues);
    return out;
}

Eigendecomposition align_eigenvectors(const Eigendecomposition& D,
                                      const BlockPartition& P) {
    const int n = static_cast<int>(D.vectors.rows());
    if (n != P.dim() || D.vectors.cols() != n)
        throw DimensionError("align_eigenvectors: decomposition dim " +
                             std::to_string(n) + " vs partition dim " +
                             std::to_string(P.dim()));
    const int nb = P.block_count();

    // projection weight of column j onto block b
    std::vector<std::vector<double>> W(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(nb), 0.0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            W[static_cast<size_t>(j)][static_cast<size_t>(P.block_of(i))] +=
                std::norm(D.vectors(i, j));

    // greedy column -> block matching by descending weight
    struct Claim {
        double w;
        int col, blk;
    };
    std::vector<Claim> claims;
    claims.reserve(static_cast<size_t>(n * nb));
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < nb; ++b)
            claims.push_back({W[static_cast<size_t>(j)][static_cast<size_t>(b)], j, b});
    std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) {
        return std::tie(b.w, a.col, a.blk) < std::tie(a.w, b.col, b.blk);
    });

    std::vector<int> capacity(static_cast<size_t>(nb));
    for (int b = 0; b < nb; ++b)
        capacity[static_cast<size_t>(b)] = static_cast<int>(P.block(b).size());
    std::vector<int> col_block(static_cast<size_t>(n), -1);
    int assigned = 0;
    for (const Claim& cl : claims) {
        if (col_block[static_cast<size_t>(cl.col)] >= 0) continue;
        if (capacity[static_cast<size_t>(cl.blk)] == 0) continue;
        if (capacity[static_cast<size_t>(cl.blk)] == 1) {
            // last seat of this block: refuse a near-tie with any other
            // still-unassigned column
            for (int j = 0; j < n; ++j) {
                if (j == cl.col || col_block[static_cast<size_t>(j)] >= 0) continue;
                const double wj = W[static_cast<size_t>(j)][static_cast<size_t>(cl.blk)];
                if (cl.w - wj < kSeatTieTol)
                    throw GaugeAmbiguityError(
                        "columns " + std::to_string(cl.col) + " and " +
                        std::to_string(j) + " claim the last seat of block " +
                        std::to_string(cl.blk) + " with weights " +
                        std::to_string(cl.w) + " / " + std::to_string(wj));
            }
        }
        col_block[static_cast<size_t>(cl.col)] = cl.blk;
        --capacity[static_cast<size_t>(cl.blk)];
        ++assigned;
    }
    if (assigned != n)
        throw InternalError("align_eigenvectors: greedy assignment incomplete");

    // occupancy must agree with each column's dominant block
    for (int j = 0; j < n; ++j) {
        const auto& wj = W[static_cast<size_t>(j)];
        const int dom = static_cast<int>(
            std::max_element(wj.begin(), wj.end()) - wj.begin());
        if (dom != col_block[static_cast<size_t>(j)])
            throw BlockMismatchError(
                "column " + std::to_string(j) + " is dominated by block " +
                std::to_string(dom) + " (weight " + std::to_string(wj[static_cast<size_t>(dom)]) +
                ") but block occupancy forces block " +
                std::to_string(col_block[static_cast<size_t>(j)]));
    }

    // slots within each block, greedy by |X[i][j]|^2
    std::vector<int> col_of_slot(static_cast<size_t>(n), -1);
    for (int b = 0; b < nb; ++b) {
        const auto& slots = P.block(b);
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
            if (col_block[static_cast<size_t>(j)] == b) cols.push_back(j);
        struct Entry {
            double w;
            int slot, col;
        };
        std::vector<Entry> entries;
        for (int i : slots)
            for (int j : cols) entries.push_back({std::norm(D.vectors(i, j)), i, j});
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return std::tie(b.w, a.slot, a.col) < std::tie(a.w, b.slot, b.col);
        });
        std::vector<bool> slot_used(static_cast<size_t>(n), false);
        std::vector<bool> col_used(static_cast<size_t>(n), false);
        for (const Entry& e : entries) {
            if (slot_used[static_cast<size_t>(e.slot)] || col_used[static_cast<size_t>(e.col)]) continue;
            col_of_slot[static_cast<size_t>(e.slot)] = e.col;
            slot_used[static_cast<size_t>(e.slot)] = true;
            col_used[static_cast<size_t>(e.col)] = true;
        }
    }

    Eigendecomposition out;
    out.eigenvalues.resize(n);
    out.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = col_of_slot[static_cast<size_t>(i)];
        out.eigenvalues[i] = D.eigenvalues[j];
        out.vectors.col(i) = D.vectors.col(j);
        const Complex d = out.vectors(i, i);
        const double ad = std::abs(d);
        if (ad > 0.0) out.vectors.col(i) *= std::conj(d) / ad;
    }
    out.min_gap = D.min_gap;
    return out;
}

} // namespace blockdiag
