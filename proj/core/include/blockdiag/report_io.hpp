#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "blockdiag/least_action.hpp"
#include "blockdiag/matrix.hpp"
#include "blockdiag/sweep.hpp"

namespace blockdiag {

// File formats:
//   matrix        {"n": int, "re": [[...]], "im": [[...]]}, row-major,
//                 written with 17 significant digits
//   instance      {"n": int, "H0": <matrix>, "H1": <matrix>}
//   sweep CSV     header "lambda,residual,value", one row per residual
//   sweep JSON    slopes, r^2, config echo, version (optionally the rows)
// All writers go through a temp file followed by an atomic rename, and are
// byte-for-byte deterministic for identical inputs.

ComplexMatrix read_matrix_json(const std::filesystem::path& path);
void write_matrix_json(const std::filesystem::path& path, const ComplexMatrix& A);

std::pair<ComplexMatrix, ComplexMatrix> read_instance_json(
    const std::filesystem::path& path);

void write_sweep_csv(const std::filesystem::path& path, const SweepReport& report);
void write_sweep_json(const std::filesystem::path& path, const SweepReport& report,
                      bool include_rows);

/// Transform-run output: diagnostics plus config echo.
void write_transform_json(const std::filesystem::path& path,
                          const BlockDiagResult& result,
                          const std::string& partition_text);

/// Named matrix series (e.g. generator coefficients), one JSON file.
void write_series_json(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, MatrixSeries>>& entries,
                       const std::string& partition_text);

} // namespace blockdiag
