#pragma once

#include <vector>

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"

namespace blockdiag {

/// Highest series order any routine accepts.
inline constexpr int kMaxSeriesOrder = 8;

/// A power series in the perturbation parameter, truncated at a fixed order,
/// with square complex matrices as coefficients. All arithmetic is closed at
/// the truncation order: terms beyond it are dropped.
class MatrixSeries {
public:
    /// Zero series of the given dimension and order.
    MatrixSeries(int dim, int order);

    explicit MatrixSeries(std::vector<ComplexMatrix> coeffs);

    static MatrixSeries identity(int dim, int order);

    /// [C0, C1, ...] padded with zeros up to `order`.
    static MatrixSeries from_coeffs(std::vector<ComplexMatrix> coeffs, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int dim() const { return static_cast<int>(coeffs_[0].rows()); }

    const ComplexMatrix& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    ComplexMatrix& coeff(int k) { return coeffs_[static_cast<size_t>(k)]; }

    /// Partial sum sum_{k<=upto} lambda^k C_k  (upto < 0 means full order).
    ComplexMatrix eval(double lambda, int upto = -1) const;

    MatrixSeries truncated(int new_order) const;
    MatrixSeries adjoint() const;                              // termwise
    MatrixSeries block_project(const BlockPartition& P) const; // termwise

    MatrixSeries& operator+=(const MatrixSeries& other);
    MatrixSeries& operator-=(const MatrixSeries& other);
    MatrixSeries& operator*=(Complex scalar);

    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
    friend MatrixSeries operator*(Complex s, MatrixSeries a) { return a *= s; }

    /// Largest coefficientwise Frobenius distance to another series.
    double max_coeff_distance(const MatrixSeries& other) const;

private:
    std::vector<ComplexMatrix> coeffs_; // order() + 1 entries
    void check_compatible(const MatrixSeries& other) const;
};

/// Cauchy product truncated at the common order.
MatrixSeries series_mul(const MatrixSeries& A, const MatrixSeries& B);

/// Series of exp(-i G(lambda)) for G with zero constant term
/// (NormalizationError otherwise).
MatrixSeries series_exp(const MatrixSeries& G);

/// Inverse of series_exp: the G with series_exp(G) = U, for U with identity
/// constant term (NormalizationError otherwise).
MatrixSeries series_log(const MatrixSeries& U);

/// Principal inverse square root of a series with identity constant term:
/// the binomial series of (I + W)^{-1/2} with W = A - I.
MatrixSeries series_inv_sqrt(const MatrixSeries& A);

} // namespace blockdiag
