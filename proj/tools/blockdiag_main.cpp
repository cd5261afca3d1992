// Command-line front end: exact least-action block diagonalization, the
// generator power series, and lambda sweeps comparing the two.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blockdiag/errors.hpp"
#include "blockdiag/least_action.hpp"
#include "blockdiag/perturbation.hpp"
#include "blockdiag/report_io.hpp"
#include "blockdiag/sweep.hpp"
#include "blockdiag/version.hpp"

namespace {

using namespace blockdiag;

struct CommonArgs {
    int n = 8;
    std::string blocks = "0,1,2;3,4,5;6,7";
    std::uint64_t seed = 42;
    int order = 3;
    double lambda_min = 1e-3;
    double lambda_max = 1e-1;
    int lambda_points = 12;
    std::string input;
    std::string out = ".";
    double gap_tol = 1e-8;
    std::string format = "csv";
    double norm_scale = 1.0;
};

void add_common_flags(CLI::App* cmd, CommonArgs& a, bool with_grid) {
    cmd->add_option("--n", a.n, "matrix dimension of the generated instance");
    cmd->add_option("--blocks", a.blocks,
                    "partition as semicolon-separated comma-lists, e.g. 0,1;2,3");
    cmd->add_option("--seed", a.seed, "seed of the generated perturbation");
    cmd->add_option("--order", a.order, "series truncation order (1..8)");
    cmd->add_option("--input", a.input, "input JSON file instead of a generated instance");
    cmd->add_option("--out", a.out, "output directory");
    cmd->add_option("--gap-tol", a.gap_tol,
                    "energy-denominator floor as a fraction of ||H0||_2");
    cmd->add_option("--norm-scale", a.norm_scale, "target ||H1||_F of the generated instance");
    if (with_grid) {
        cmd->add_option("--lambda-min", a.lambda_min, "smallest lambda");
        cmd->add_option("--lambda-max", a.lambda_max, "largest lambda");
        cmd->add_option("--lambda-points", a.lambda_points, "geometric grid size");
        cmd->add_option("--format", a.format, "csv (default) or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
}

std::filesystem::path ensure_out_dir(const CommonArgs& a) {
    std::filesystem::path dir(a.out);
    std::filesystem::create_directories(dir);
    return dir;
}

ExperimentConfig build_config(const CommonArgs& a, const BlockPartition& P) {
    ExperimentConfig cfg(P.dim(), P, a.seed);
    cfg.order = a.order;
    cfg.lambda_grid = LambdaGrid{a.lambda_min, a.lambda_max, a.lambda_points};
    cfg.norm_scale = a.norm_scale;
    cfg.tolerances.gap_tol_factor = a.gap_tol;
    return cfg;
}

PerturbedHamiltonian load_or_generate(const CommonArgs& a, const ExperimentConfig& cfg) {
    if (!a.input.empty()) {
        auto [H0, H1] = read_instance_json(a.input);
        return PerturbedHamiltonian(std::move(H0), std::move(H1), cfg.partition);
    }
    return make_instance(cfg);
}

int cmd_transform(const CommonArgs& a) {
    if (a.input.empty())
        throw ParseError("transform needs --input <matrix.json>");
    const ComplexMatrix H = read_matrix_json(a.input);
    const BlockPartition P = BlockPartition::parse(a.blocks);
    const auto dir = ensure_out_dir(a);

    BlockDiagResult result = cederbaum_transform(H, P);
    write_matrix_json(dir / "T.json", result.T);
    write_matrix_json(dir / "H_block.json", result.H_block);
    write_transform_json(dir / "transform.json", result, P.to_string());
    std::cout << "wrote " << (dir / "T.json").string() << ", "
              << (dir / "H_block.json").string() << ", "
              << (dir / "transform.json").string() << "\n"
              << "||T - I||_F = " << result.diagnostics.distance_to_identity
              << ", off-block residual = " << result.diagnostics.off_block_residual
              << "\n";
    return 0;
}

int cmd_series(const CommonArgs& a) {
    const BlockPartition P = BlockPartition::parse(a.blocks);
    ExperimentConfig cfg = build_config(a, P);
    const PerturbedHamiltonian PH = load_or_generate(a, cfg);
    const auto dir = ensure_out_dir(a);

    PerturbOptions popts{cfg.tolerances.gap_tol_factor};
    const GeneratorSeries Z = z_series(PH, cfg.order, popts);
    const MatrixSeries T = t_series_least_action(Z, P);
    const GeneratorSeries S_la = s_series_least_action(Z, P, cfg.order);
    const GeneratorSeries S_sw = s_series_block_offdiag(PH, cfg.order, popts);
    const MatrixSeries HB = h_block_from_generators(PH, S_la, cfg.order);

    write_series_json(dir / "series.json",
                      {{"z", Z.series},
                       {"t_least_action", T},
                       {"s_least_action", S_la.series},
                       {"s_block_offdiag", S_sw.series},
                       {"h_block", HB}},
                      P.to_string());
    std::cout << "wrote " << (dir / "series.json").string() << " (order "
              << cfg.order << ")\n";
    return 0;
}

int cmd_sweep(const CommonArgs& a) {
    const BlockPartition P = BlockPartition::parse(a.blocks);
    ExperimentConfig cfg = build_config(a, P);
    const PerturbedHamiltonian PH = load_or_generate(a, cfg);
    const auto dir = ensure_out_dir(a);

    const SweepReport report = sweep_divergence(cfg, PH);
    if (a.format == "json") {
        write_sweep_json(dir / "sweep.json", report, /*include_rows=*/true);
        std::cout << "wrote " << (dir / "sweep.json").string() << "\n";
    } else {
        write_sweep_csv(dir / "sweep.csv", report);
        write_sweep_json(dir / "sweep.json", report, /*include_rows=*/false);
        std::cout << "wrote " << (dir / "sweep.csv").string() << " and "
                  << (dir / "sweep.json").string() << "\n";
    }
    for (const auto& s : report.slopes)
        std::cout << s.residual << ": slope " << s.exponent << " (r^2 "
                  << s.r_squared << ")\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Block diagonalization of Hermitian matrices: exact least-action "
                 "transform, generator power series, and order-verification sweeps"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    CommonArgs targs, sargs, wargs;
    CLI::App* transform = app.add_subcommand(
        "transform", "block-diagonalize one Hermitian matrix from a JSON file");
    add_common_flags(transform, targs, /*with_grid=*/false);
    CLI::App* series = app.add_subcommand(
        "series", "compute generator and transform series for an instance");
    add_common_flags(series, sargs, /*with_grid=*/false);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "lambda sweep comparing exact and series transforms");
    add_common_flags(sweep, wargs, /*with_grid=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help, --version
            return app.exit(e);
        }
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    }

    if (transform->parsed()) return cmd_transform(targs);
    if (series->parsed()) return cmd_series(sargs);
    return cmd_sweep(wargs);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const BranchError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const GaugeAmbiguityError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const BlockMismatchError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const NotHermitianError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const NotUnitaryError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const InsufficientDataError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) { // internal invariants and remaining cases
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 4;
    }
}
