#include "blockdiag/matrix_series.hpp"

#include <string>

#include "blockdiag/errors.hpp"

namespace blockdiag {

namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxSeriesOrder)
        throw DimensionError("series order " + std::to_string(order) +
                             " outside 0.." + std::to_string(kMaxSeriesOrder));
}

} // namespace

MatrixSeries::MatrixSeries(int dim, int order) {
    check_order(order);
    if (dim <= 0)
        throw DimensionError("series dimension must be positive, got " +
                             std::to_string(dim));
    coeffs_.assign(static_cast<size_t>(order) + 1, ComplexMatrix::Zero(dim, dim));
}

MatrixSeries::MatrixSeries(std::vector<ComplexMatrix> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionError("series needs at least one coefficient");
    check_order(static_cast<int>(coeffs_.size()) - 1);
    const auto d = coeffs_[0].rows();
    for (const auto& c : coeffs_)
        if (c.rows() != d || c.cols() != d)
            throw DimensionError("series coefficients must be square and equal-sized");
}

MatrixSeries MatrixSeries::identity(int dim, int order) {
    MatrixSeries s(dim, order);
    s.coeffs_[0] = ComplexMatrix::Identity(dim, dim);
    return s;
}

MatrixSeries MatrixSeries::from_coeffs(std::vector<ComplexMatrix> coeffs, int order) {
    check_order(order);
    if (coeffs.empty()) throw DimensionError("series needs at least one coefficient");
    const auto d = coeffs[0].rows();
    coeffs.resize(static_cast<size_t>(order) + 1, ComplexMatrix::Zero(d, d));
    return MatrixSeries(std::move(coeffs));
}

void MatrixSeries::check_compatible(const MatrixSeries& other) const {
    if (dim() != other.dim() || order() != other.order())
        throw DimensionError("series mismatch: dim " + std::to_string(dim()) +
                             "/" + std::to_string(other.dim()) + ", order " +
                             std::to_string(order()) + "/" +
                             std::to_string(other.order()));
}

ComplexMatrix MatrixSeries::eval(double lambda, int upto) const {
    if (upto < 0 || upto > order()) upto = order();
    ComplexMatrix acc = coeffs_[static_cast<size_t>(upto)];
    for (int k = upto - 1; k >= 0; --k)
        acc = lambda * acc + coeffs_[static_cast<size_t>(k)];
    return acc;
}

MatrixSeries MatrixSeries::truncated(int new_order) const {
    check_order(new_order);
    std::vector<ComplexMatrix> c(coeffs_.begin(),
                                 coeffs_.begin() + std::min(new_order, order()) + 1);
    return from_coeffs(std::move(c), new_order);
}

MatrixSeries MatrixSeries::adjoint() const {
    MatrixSeries out = *this;
    for (auto& c : out.coeffs_) c = c.adjoint().eval();
    return out;
}

MatrixSeries MatrixSeries::block_project(const BlockPartition& P) const {
    MatrixSeries out = *this;
    for (auto& c : out.coeffs_) c = blockdiag::block_project(c, P);
    return out;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& other) {
    check_compatible(other);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& other) {
    check_compatible(other);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

MatrixSeries& MatrixSeries::operator*=(Complex scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

double MatrixSeries::max_coeff_distance(const MatrixSeries& other) const {
    check_compatible(other);
    double worst = 0.0;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        worst = std::max(worst, (coeffs_[k] - other.coeffs_[k]).norm());
    return worst;
}

MatrixSeries series_mul(const MatrixSeries& A, const MatrixSeries& B) {
    if (A.dim() != B.dim() || A.order() != B.order())
        throw DimensionError("series_mul: dim " + std::to_string(A.dim()) + "/" +
                             std::to_string(B.dim()) + ", order " +
                             std::to_string(A.order()) + "/" +
                             std::to_string(B.order()));
    MatrixSeries out(A.dim(), A.order());
    for (int k = 0; k <= A.order(); ++k)
        for (int i = 0; i <= k; ++i) out.coeff(k) += A.coeff(i) * B.coeff(k - i);
    return out;
}

MatrixSeries series_exp(const MatrixSeries& G) {
    if (G.coeff(0).norm() != 0.0)
        throw NormalizationError("series_exp: constant term must be zero");
    const int K = G.order();
    const int n = G.dim();
    MatrixSeries minus_i_g = Complex(0.0, -1.0) * G;
    MatrixSeries result = MatrixSeries::identity(n, K);
    MatrixSeries term = MatrixSeries::identity(n, K);
    // G has no constant term, so (-iG)^m contributes nothing past m = K
    for (int m = 1; m <= K; ++m) {
        term = series_mul(term, minus_i_g);
        term *= Complex(1.0 / m, 0.0);
        result += term;
    }
    return result;
}

MatrixSeries series_log(const MatrixSeries& U) {
    const int n = U.dim();
    if ((U.coeff(0) - ComplexMatrix::Identity(n, n)).norm() != 0.0)
        throw NormalizationError("series_log: constant term must be the identity");
    const int K = U.order();
    MatrixSeries W = U;
    W.coeff(0) -= ComplexMatrix::Identity(n, n);
    MatrixSeries acc(n, K);
    MatrixSeries power = MatrixSeries::identity(n, K);
    for (int m = 1; m <= K; ++m) {
        power = series_mul(power, W);
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        MatrixSeries term = power;
        term *= Complex(sign / m, 0.0);
        acc += term;
    }
    // exp(-iG) = U  =>  G = i log(U)
    return Complex(0.0, 1.0) * acc;
}

MatrixSeries series_inv_sqrt(const MatrixSeries& A) {
    const int n = A.dim();
    if ((A.coeff(0) - ComplexMatrix::Identity(n, n)).norm() != 0.0)
        throw NormalizationError("series_inv_sqrt: constant term must be the identity");
    const int K = A.order();
    MatrixSeries W = A;
    W.coeff(0) -= ComplexMatrix::Identity(n, n);
    MatrixSeries result = MatrixSeries::identity(n, K);
    MatrixSeries power = MatrixSeries::identity(n, K);
    double binom = 1.0; // binom(-1/2, m), built recursively
    for (int m = 1; m <= K; ++m) {
        power = series_mul(power, W);
        binom *= (-0.5 - (m - 1)) / m;
        MatrixSeries term = power;
        term *= Complex(binom, 0.0);
        result += term;
    }
    return result;
}

} // namespace blockdiag
