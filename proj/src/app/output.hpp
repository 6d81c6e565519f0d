/// \file output.hpp
/// \brief Plot-ready output files and the batch run/convergence drivers.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <string>
#include <vector>

#include "app/config.hpp"

namespace rtfp::app {

/// Creates `dir` (and parents) if needed. Throws ErrorCode::IoError.
void ensure_directory(const std::string& dir);

/// Writes `text` to `path`, replacing any existing file.
void write_text_file(const std::string& path, const std::string& text);

/// Diagnostics time series as comma-separated text with a header row.
/// Columns: t, entropy_ion, entropy_ele, divb_l1, and psi when tracked.
void write_series_csv(const std::string& path,
                      const std::vector<DiagnosticSample>& series,
                      bool with_psi);

/// Cell-centered snapshot table: x, y, the 18 conserved components, and
/// the recovered primitives of both species. Space-separated columns with
/// a commented header; rows grouped by y with a blank separator line so
/// structured-grid plotters consume the file directly.
void write_snapshot(const std::string& path, const FieldArray& field,
                    const GridSpec& grid, const PlasmaParams& par, double t,
                    const SolveControls& ctl = {});

/// Everything `execute_run` produced.
struct RunOutputs {
  RunRecord record;
  std::vector<std::string> snapshot_paths;
};

/// Runs the resolved configuration and writes manifest.txt, series.csv,
/// and numbered snapshots (initial, every snapshot_interval, final) into
/// `out_dir`.
RunOutputs execute_run(const ResolvedRun& run, const std::string& out_dir);

/// One row of a grid-refinement study.
struct ConvergenceRow {
  int cells = 0;
  double error = 0.0;
  double order = 0.0;  ///< log ratio against the previous row; 0 for the first
};

/// Reruns the case at each resolution and measures the L1 ion-density
/// error against the case's exact reference at the final time. Requires a
/// one-dimensional case with a known solution.
std::vector<ConvergenceRow> convergence_study(const ResolvedRun& base,
                                              const std::vector<int>& sizes);

/// The study as comma-separated text (cells, l1_error, order).
std::string convergence_table_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace rtfp::app
