/// \file output.cpp
/// \brief Output writers and batch drivers.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "app/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <memory>

#include "core/diagnostics.hpp"
#include "core/errors.hpp"

namespace rtfp::app {

namespace {

using FilePtr = std::unique_ptr<std::FILE, int (*)(std::FILE*)>;

FilePtr open_for_write(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) {
    throw_error(ErrorCode::IoError, "cannot write '" + path + "'");
  }
  return FilePtr(f, &std::fclose);
}

}  // namespace

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw_error(ErrorCode::IoError,
                "cannot create directory '" + dir + "': " + ec.message());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  const FilePtr f = open_for_write(path);
  if (std::fwrite(text.data(), 1, text.size(), f.get()) != text.size()) {
    throw_error(ErrorCode::IoError, "short write to '" + path + "'");
  }
}

void write_series_csv(const std::string& path,
                      const std::vector<DiagnosticSample>& series,
                      bool with_psi) {
  const FilePtr f = open_for_write(path);
  std::fprintf(f.get(), "t,entropy_ion,entropy_ele,divb_l1%s\n",
               with_psi ? ",psi" : "");
  for (const DiagnosticSample& s : series) {
    std::fprintf(f.get(), "%.12e,%.12e,%.12e,%.12e", s.t, s.entropy_ion,
                 s.entropy_ele, s.divb_l1);
    if (with_psi) {
      std::fprintf(f.get(), ",%.12e", s.psi);
    }
    std::fprintf(f.get(), "\n");
  }
}

void write_snapshot(const std::string& path, const FieldArray& field,
                    const GridSpec& grid, const PlasmaParams& par, double t,
                    const SolveControls& ctl) {
  const FilePtr f = open_for_write(path);
  std::fprintf(f.get(), "# t = %.12e\n# nx = %d ny = %d\n", t, grid.nx,
               grid.ny);
  std::fprintf(f.get(),
               "# columns: x y D_i Mx_i My_i Mz_i E_i D_e Mx_e My_e Mz_e E_e "
               "Bx By Bz Ex Ey Ez phi psi "
               "rho_i ux_i uy_i uz_i p_i rho_e ux_e uy_e uz_e p_e\n");
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Vec18 u = field.at(i, j);
      const PrimState w = cons_to_prim(u, par, ctl);
      std::fprintf(f.get(), "%.12e %.12e", grid.xc(i), grid.yc(j));
      for (int c = 0; c < kNumComp; ++c) {
        std::fprintf(f.get(), " %.12e", u(c));
      }
      for (const FluidPrim* s : {&w.ion, &w.ele}) {
        std::fprintf(f.get(), " %.12e %.12e %.12e %.12e %.12e", s->rho,
                     s->u(0), s->u(1), s->u(2), s->p);
      }
      std::fprintf(f.get(), "\n");
    }
    if (grid.ny > 1) {
      std::fprintf(f.get(), "\n");
    }
  }
}

RunOutputs execute_run(const ResolvedRun& run, const std::string& out_dir) {
  ensure_directory(out_dir);
  write_text_file(out_dir + "/manifest.txt", manifest_text(run));

  const RunSetup& s = run.setup;
  const FieldArray initial =
      build_initial_field(*run.def, s.grid, s.bc, s.params);

  RunOutputs out;
  int snap_index = 0;
  double next_snap = s.t_start + run.snapshot_interval;
  double last_snap_t = std::numeric_limits<double>::quiet_NaN();
  const double eps = 1e-12 * std::max(1.0, std::abs(s.t_end));

  auto snapshot_to = [&](const FieldArray& f, double t) {
    char name[32];
    std::snprintf(name, sizeof(name), "snapshot_%04d.dat", snap_index++);
    const std::string path = out_dir + "/" + name;
    write_snapshot(path, f, s.grid, s.params, t, s.controls);
    out.snapshot_paths.push_back(path);
    last_snap_t = t;
  };

  auto on_sample = [&](const FieldArray& f, double t, long) {
    bool due = snap_index == 0;
    if (run.snapshot_interval > 0.0) {
      while (t >= next_snap - eps) {
        due = true;
        next_snap += run.snapshot_interval;
      }
    }
    if (due) {
      snapshot_to(f, t);
    }
  };

  out.record = rtfp::run(initial, s, on_sample);
  if (!(last_snap_t == out.record.t_final)) {
    snapshot_to(out.record.field, out.record.t_final);
  }
  write_series_csv(out_dir + "/series.csv", out.record.series, s.track_psi);
  return out;
}

std::vector<ConvergenceRow> convergence_study(const ResolvedRun& base,
                                              const std::vector<int>& sizes) {
  if (!base.def->reference_rho_i) {
    throw_error(ErrorCode::ConfigError,
                "case '" + base.def->name +
                    "' has no exact reference solution for a refinement "
                    "study");
  }
  if (base.setup.grid.ny != 1) {
    throw_error(ErrorCode::ConfigError,
                "the refinement driver supports one-dimensional cases");
  }
  std::vector<ConvergenceRow> rows;
  for (const int n : sizes) {
    if (n < 1) {
      throw_error(ErrorCode::ConfigError, "refinement sizes must be positive");
    }
    RunSetup setup = base.setup;
    setup.grid.nx = n;
    const FieldArray initial =
        build_initial_field(*base.def, setup.grid, setup.bc, setup.params);
    const RunRecord rec = rtfp::run(initial, setup);
    const double t_end = rec.t_final;
    const double err = l1_error(
        rec.field, setup.grid, setup.params,
        [](const PrimState& w) { return w.ion.rho; },
        [&](double x, double y) {
          return base.def->reference_rho_i(x, y, t_end);
        },
        setup.controls);
    ConvergenceRow row;
    row.cells = n;
    row.error = err;
    if (!rows.empty()) {
      row.order = std::log(rows.back().error / err) /
                  std::log(static_cast<double>(n) / rows.back().cells);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string convergence_table_csv(const std::vector<ConvergenceRow>& rows) {
  std::string text = "cells,l1_error,order\n";
  char buf[80];
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      std::snprintf(buf, sizeof(buf), "%d,%.12e,\n", rows[i].cells,
                    rows[i].error);
    } else {
      std::snprintf(buf, sizeof(buf), "%d,%.12e,%.4f\n", rows[i].cells,
                    rows[i].error, rows[i].order);
    }
    text += buf;
  }
  return text;
}

}  // namespace rtfp::app
