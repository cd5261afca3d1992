#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"
#include "blockdiag/perturbation.hpp"

namespace blockdiag {

/// Geometric grid of perturbation strengths.
struct LambdaGrid {
    double min = 1e-3;
    double max = 1e-1;
    int points = 12;

    std::vector<double> values() const;
};

struct Tolerances {
    double gap_tol_factor = 1e-8; // energy-denominator floor / ||H0||_2
    double eps_pd = 1e-10;        // positive-definite floor
    double minus_one_tol = 1e-8;  // unitary-log branch cutoff
};

struct ExperimentConfig {
    int n;
    BlockPartition partition;
    std::uint64_t seed = 42;
    LambdaGrid lambda_grid{};
    int order = 3;
    double norm_scale = 1.0; // target ||H1||_F
    Tolerances tolerances{};

    ExperimentConfig(int n_, BlockPartition partition_, std::uint64_t seed_ = 42);

    /// n = 8, blocks 0,1,2;3,4,5;6,7, seed 42, order 3, 12-point grid.
    static ExperimentConfig default_instance();

    /// Grid strictly positive/increasing with >= 4 points, order in 1..cap,
    /// n matches the partition. Throws DimensionError otherwise.
    void validate() const;
};

/// Residual names recorded by sweep_divergence. The order-k transform
/// residuals are named T_order1, T_order2, ...
inline std::string t_residual_name(int k) { return "T_order" + std::to_string(k); }
inline std::string h_block_residual_name(int k) { return "H_block_order" + std::to_string(k); }
inline constexpr const char* kSplitResidual = "prescription_split";
inline constexpr const char* kGeneratorBlockPartResidual = "generator_block_part";

struct SweepRow {
    double lambda;
    std::string residual;
    double value;
};

struct NamedSlope {
    std::string residual;
    double exponent;
    double r_squared;
};

struct SweepReport {
    std::vector<SweepRow> rows;      // ordered by lambda, then residual name
    std::vector<NamedSlope> slopes;  // one per residual family with enough data
    ExperimentConfig config;
    std::string version;
};

struct SlopeFit {
    double exponent;
    double r_squared;
};

/// Least-squares line through (log lambda, log value). Points with
/// nonpositive coordinates are unusable; fewer than 4 usable points raise
/// InsufficientDataError.
SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

/// Block-clustered diagonal H0 for a partition: the documented default
/// spectrum for the standard 8-dimensional 3+3+2 instance, a fixed
/// cluster-plus-offset rule otherwise.
ComplexMatrix default_h0(const BlockPartition& P);

/// H0 from default_h0, H1 a seeded GUE draw with ||H1||_F = norm_scale.
PerturbedHamiltonian make_instance(const ExperimentConfig& cfg);

/// The order-verification experiment: for every lambda on the grid, compares
/// the exact transform against the truncated series along every axis the
/// comparison supports:
///   T_order{1..K}        ||T_exact - T_series(k)||_F
///   H_block_order{K}     ||H_block_exact - H_block_series(K)||_F
///   prescription_split   ||exp-series of S_LA - exp-series of S_SW||_F at order K
///   generator_block_part ||B(S_exact)||_F
/// and fits a log-log slope per residual family over the rows that clear the
/// rounding floor 1e3 * eps * ||H(lambda)||_F.
SweepReport sweep_divergence(const ExperimentConfig& cfg);

/// Same, with the instance supplied explicitly instead of generated.
SweepReport sweep_divergence(const ExperimentConfig& cfg,
                             const PerturbedHamiltonian& PH);

} // namespace blockdiag
