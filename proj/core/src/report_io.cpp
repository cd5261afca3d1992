#include "blockdiag/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blockdiag/errors.hpp"

namespace blockdiag {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ParseError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.good())
            throw ParseError("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

ordered_json load_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw ParseError(path.string() + ": " + e.what());
    }
}

ComplexMatrix matrix_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
        throw ParseError(where + ": expected object with keys n, re, im");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError(where + ": n must be positive");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() ||
        re.size() != static_cast<size_t>(n) || im.size() != static_cast<size_t>(n))
        throw ParseError(where + ": re/im must be " + std::to_string(n) +
                         " rows each");
    ComplexMatrix A(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& rrow = re.at(static_cast<size_t>(i));
        const auto& irow = im.at(static_cast<size_t>(i));
        if (rrow.size() != static_cast<size_t>(n) || irow.size() != static_cast<size_t>(n))
            throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            A(i, k) = Complex(rrow.at(static_cast<size_t>(k)).get<double>(),
                              irow.at(static_cast<size_t>(k)).get<double>());
    }
    return A;
}

void append_matrix_json(std::ostringstream& out, const ComplexMatrix& A,
                        const std::string& indent) {
    const int n = static_cast<int>(A.rows());
    out << "{\n" << indent << "  \"n\": " << n << ",\n";
    for (const bool imag : {false, true}) {
        out << indent << "  \"" << (imag ? "im" : "re") << "\": [\n";
        for (int i = 0; i < n; ++i) {
            out << indent << "    [";
            for (int j = 0; j < n; ++j) {
                if (j) out << ", ";
                out << fmt17(imag ? A(i, j).imag() : A(i, j).real());
            }
            out << "]" << (i + 1 < n ? "," : "") << "\n";
        }
        out << indent << "  ]" << (imag ? "" : ",") << "\n";
    }
    out << indent << "}";
}

ordered_json config_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["blocks"] = cfg.partition.to_string();
    j["seed"] = cfg.seed;
    j["order"] = cfg.order;
    j["lambda_min"] = cfg.lambda_grid.min;
    j["lambda_max"] = cfg.lambda_grid.max;
    j["lambda_points"] = cfg.lambda_grid.points;
    j["norm_scale"] = cfg.norm_scale;
    j["gap_tol_factor"] = cfg.tolerances.gap_tol_factor;
    j["eps_pd"] = cfg.tolerances.eps_pd;
    j["minus_one_tol"] = cfg.tolerances.minus_one_tol;
    return j;
}

} // namespace

ComplexMatrix read_matrix_json(const std::filesystem::path& path) {
    return matrix_from_json(load_json(path), path.string());
}

void write_matrix_json(const std::filesystem::path& path, const ComplexMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionError("write_matrix_json: matrix must be square");
    std::ostringstream out;
    append_matrix_json(out, A, "");
    out << "\n";
    atomic_write(path, out.str());
}

std::pair<ComplexMatrix, ComplexMatrix> read_instance_json(
    const std::filesystem::path& path) {
    const ordered_json j = load_json(path);
    if (!j.is_object() || !j.contains("H0") || !j.contains("H1"))
        throw ParseError(path.string() + ": expected object with keys H0, H1");
    ComplexMatrix H0 = matrix_from_json(j.at("H0"), path.string() + ":H0");
    ComplexMatrix H1 = matrix_from_json(j.at("H1"), path.string() + ":H1");
    if (j.contains("n") && j.at("n").get<int>() != H0.rows())
        throw ParseError(path.string() + ": top-level n disagrees with H0");
    if (H0.rows() != H1.rows())
        throw ParseError(path.string() + ": H0 and H1 have different dimensions");
    return {std::move(H0), std::move(H1)};
}

void write_sweep_csv(const std::filesystem::path& path, const SweepReport& report) {
    std::ostringstream out;
    out << "lambda,residual,value\n";
    for (const auto& row : report.rows)
        out << fmt17(row.lambda) << ',' << row.residual << ',' << fmt17(row.value)
            << '\n';
    atomic_write(path, out.str());
}

void write_sweep_json(const std::filesystem::path& path, const SweepReport& report,
                      bool include_rows) {
    ordered_json j;
    j["version"] = report.version;
    j["config"] = config_json(report.config);
    j["slopes"] = ordered_json::array();
    for (const auto& s : report.slopes)
        j["slopes"].push_back({{"residual", s.residual},
                               {"exponent", s.exponent},
                               {"r_squared", s.r_squared}});
    if (include_rows) {
        j["rows"] = ordered_json::array();
        for (const auto& row : report.rows)
            j["rows"].push_back({{"lambda", row.lambda},
                                 {"residual", row.residual},
                                 {"value", row.value}});
    }
    atomic_write(path, j.dump(2) + "\n");
}

void write_transform_json(const std::filesystem::path& path,
                          const BlockDiagResult& result,
                          const std::string& partition_text) {
    ordered_json j;
    j["blocks"] = partition_text;
    j["off_block_residual"] = result.diagnostics.off_block_residual;
    j["unitarity_residual"] = result.diagnostics.unitarity_residual;
    j["distance_to_identity"] = result.diagnostics.distance_to_identity;
    j["has_generator"] = result.generator.has_value();
    atomic_write(path, j.dump(2) + "\n");
}

void write_series_json(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, MatrixSeries>>& entries,
                       const std::string& partition_text) {
    std::ostringstream out;
    out << "{\n  \"blocks\": \"" << partition_text << "\",\n";
    for (size_t e = 0; e < entries.size(); ++e) {
        const auto& [name, series] = entries[e];
        out << "  \"" << name << "\": [\n";
        for (int k = 0; k <= series.order(); ++k) {
            out << "    ";
            append_matrix_json(out, series.coeff(k), "    ");
            out << (k < series.order() ? "," : "") << "\n";
        }
        out << "  ]" << (e + 1 < entries.size() ? "," : "") << "\n";
    }
    out << "}\n";
    atomic_write(path, out.str());
}

} // namespace blockdiag
