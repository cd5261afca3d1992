#include "blockdiag/sweep.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>

#include "blockdiag/errors.hpp"
#include "blockdiag/least_action.hpp"
#include "blockdiag/random_matrix.hpp"
#include "blockdiag/version.hpp"

namespace blockdiag {

std::vector<double> LambdaGrid::values() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(std::max(points, 0)));
    if (points == 1) {
        out.push_back(min);
        return out;
    }
    const double ratio = std::log(max / min) / (points - 1);
    for (int i = 0; i < points; ++i) out.push_back(min * std::exp(ratio * i));
    return out;
}

ExperimentConfig::ExperimentConfig(int n_, BlockPartition partition_,
                                   std::uint64_t seed_)
    : n(n_), partition(std::move(partition_)), seed(seed_) {}

ExperimentConfig ExperimentConfig::default_instance() {
    return ExperimentConfig(8, BlockPartition::parse("0,1,2;3,4,5;6,7"), 42);
}

void ExperimentConfig::validate() const {
    if (n != partition.dim())
        throw DimensionError("config: n = " + std::to_string(n) +
                             " but partition covers " +
                             std::to_string(partition.dim()) + " indices");
    if (!(lambda_grid.min > 0.0) || !(lambda_grid.max > lambda_grid.min))
        throw DimensionError("config: lambda grid must be strictly positive and increasing");
    if (lambda_grid.points < 4)
        throw DimensionError("config: lambda grid needs at least 4 points, got " +
                             std::to_string(lambda_grid.points));
    if (order < 1 || order > kMaxSeriesOrder)
        throw DimensionError("config: order " + std::to_string(order) +
                             " outside 1.." + std::to_string(kMaxSeriesOrder));
    if (!(norm_scale > 0.0))
        throw DimensionError("config: norm_scale must be positive");
}

SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [lam, val] : points)
        if (lam > 0.0 && val > 0.0) logs.emplace_back(std::log(lam), std::log(val));
    if (logs.size() < 4)
        throw InsufficientDataError("fit_loglog_slope: " +
                                    std::to_string(logs.size()) +
                                    " usable points, need at least 4");
    double sx = 0, sy = 0;
    for (const auto& [x, y] : logs) { sx += x; sy += y; }
    const double mx = sx / static_cast<double>(logs.size());
    const double my = sy / static_cast<double>(logs.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0)
        throw InsufficientDataError("fit_loglog_slope: all lambdas identical");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (const auto& [x, y] : logs) {
        const double r = y - (slope * x + intercept);
        ss_res += r * r;
        ss_tot += (y - my) * (y - my);
    }
    const double r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot
                                     : (ss_res == 0.0 ? 1.0 : 0.0);
    return {slope, r2};
}

ComplexMatrix default_h0(const BlockPartition& P) {
    const int n = P.dim();
    ComplexMatrix H0 = ComplexMatrix::Zero(n, n);
    const bool standard = P == BlockPartition::parse("0,1,2;3,4,5;6,7");
    if (standard) {
        const double spectrum[8] = {0.0, 0.3, 0.7, 2.0, 2.4, 2.9, 5.0, 5.6};
        for (int i = 0; i < 8; ++i) H0(i, i) = spectrum[i];
        return H0;
    }
    // block-clustered, nondegenerate: cluster center 2.5 per block, slightly
    // accelerating offsets inside each block
    for (int b = 0; b < P.block_count(); ++b) {
        const auto& blk = P.block(b);
        for (size_t pos = 0; pos < blk.size(); ++pos) {
            const double p = static_cast<double>(pos);
            H0(blk[pos], blk[pos]) = 2.5 * b + 0.35 * p + 0.02 * p * p;
        }
    }
    return H0;
}

PerturbedHamiltonian make_instance(const ExperimentConfig& cfg) {
    cfg.validate();
    return PerturbedHamiltonian(
        default_h0(cfg.partition),
        generate_random_hermitian(cfg.n, cfg.seed, cfg.norm_scale),
        cfg.partition);
}

SweepReport sweep_divergence(const ExperimentConfig& cfg) {
    return sweep_divergence(cfg, make_instance(cfg));
}

SweepReport sweep_divergence(const ExperimentConfig& cfg,
                             const PerturbedHamiltonian& PH) {
    cfg.validate();
    const BlockPartition& P = cfg.partition;
    const int K = cfg.order;
    const PerturbOptions popts{cfg.tolerances.gap_tol_factor};
    const LeastActionOptions laopts{cfg.tolerances.eps_pd,
                                    cfg.tolerances.minus_one_tol};

    // lambda-independent series work
    const GeneratorSeries Z = z_series(PH, K, popts);
    const MatrixSeries T_la = t_series_least_action(Z, P);
    const GeneratorSeries S_la = s_series_least_action(Z, P, K);
    const GeneratorSeries S_sw = s_series_block_offdiag(PH, K, popts);
    const MatrixSeries HB = h_block_from_generators(PH, S_la, K);
    // prescriptions compared at the unitary level: both generators
    // exponentiated to the same order before differencing
    const MatrixSeries T_la_exp = series_exp(S_la.series);
    const MatrixSeries T_sw_exp = series_exp(S_sw.series);

    SweepReport report{{}, {}, cfg, kVersion};
    std::map<std::string, std::vector<std::pair<double, double>>> usable;
    std::vector<std::string> family_order;
    auto record = [&](double lam, const std::string& name, double value,
                      double floor) {
        report.rows.push_back({lam, name, value});
        if (std::find(family_order.begin(), family_order.end(), name) ==
            family_order.end())
            family_order.push_back(name);
        if (value > floor) usable[name].emplace_back(lam, value);
    };

    for (const double lam : cfg.lambda_grid.values()) {
        const ComplexMatrix H = PH.H0 + lam * PH.H1;
        const double floor = 1e3 * DBL_EPSILON * H.norm();
        try {
            const BlockDiagResult exact = cederbaum_transform(H, P, laopts);
            const ComplexMatrix S_exact =
                extract_generator(exact, cfg.tolerances.minus_one_tol);
            for (int k = 1; k <= K; ++k)
                record(lam, t_residual_name(k),
                       (exact.T - T_la.eval(lam, k)).norm(), floor);
            record(lam, h_block_residual_name(K),
                   (exact.H_block - HB.eval(lam)).norm(), floor);
            record(lam, kSplitResidual,
                   (T_la_exp.eval(lam) - T_sw_exp.eval(lam)).norm(), floor);
            record(lam, kGeneratorBlockPartResidual,
                   block_project(S_exact, P).norm(), floor);
        } catch (const BranchError& e) {
            throw BranchError(std::string(e.what()) + " (at lambda = " +
                              std::to_string(lam) + ")");
        } catch (const GaugeAmbiguityError& e) {
            throw GaugeAmbiguityError(std::string(e.what()) + " (at lambda = " +
                                      std::to_string(lam) + ")");
        } catch (const BlockMismatchError& e) {
            throw BlockMismatchError(std::string(e.what()) + " (at lambda = " +
                                     std::to_string(lam) + ")");
        }
    }

    for (const auto& name : family_order) {
        const auto it = usable.find(name);
        if (it == usable.end() || it->second.size() < 4) continue;
        const SlopeFit fit = fit_loglog_slope(it->second);
        report.slopes.push_back({name, fit.exponent, fit.r_squared});
    }
    return report;
}

} // namespace blockdiag
