/// \file rtfp_main.cpp
/// \brief Batch command line for the two-fluid plasma solver.
///
/// Talks to the solver exclusively through the shared-library C
/// interface, so it doubles as a worked example of embedding it.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "rtfp/rtfp.h"

namespace {

/// Prints the failure of the last C call and converts it to an exit code.
int report_failure(rtfp_status status) {
  std::fprintf(stderr, "rtfp: error: %s\n", rtfp_last_error());
  return static_cast<int>(status);
}

int list_cases() {
  const int count = rtfp_case_count();
  for (int i = 0; i < count; ++i) {
    char name[64];
    char summary[256];
    const rtfp_status st =
        rtfp_case_info(i, name, sizeof(name), summary, sizeof(summary));
    if (st != RTFP_OK) {
      return report_failure(st);
    }
    std::printf("%-16s %s\n", name, summary);
  }
  return 0;
}

bool is_case_name(const std::string& s) {
  const int count = rtfp_case_count();
  for (int i = 0; i < count; ++i) {
    char name[64];
    if (rtfp_case_info(i, name, sizeof(name), nullptr, 0) == RTFP_OK &&
        s == name) {
      return true;
    }
  }
  return false;
}

/// Builds the configuration from a file path or a bare case name plus
/// key=value overrides. Returns RTFP_OK and fills `out` on success.
rtfp_status build_config(const std::string& source,
                         const std::vector<std::string>& overrides,
                         rtfp_config** out) {
  rtfp_status st;
  if (std::filesystem::exists(source)) {
    st = rtfp_config_load(source.c_str(), out);
  } else if (is_case_name(source)) {
    st = rtfp_config_create(out);
    if (st == RTFP_OK) {
      st = rtfp_config_set(*out, "case", source.c_str());
    }
  } else {
    std::fprintf(stderr,
                 "rtfp: error: '%s' is neither a config file nor a case "
                 "name (see --list-cases)\n",
                 source.c_str());
    return RTFP_E_CONFIG;
  }
  for (const std::string& kv : overrides) {
    if (st != RTFP_OK) {
      break;
    }
    const size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "rtfp: error: --set expects key=value, got '%s'\n",
                   kv.c_str());
      rtfp_config_free(*out);
      *out = nullptr;
      return RTFP_E_CONFIG;
    }
    st = rtfp_config_set(*out, kv.substr(0, eq).c_str(),
                         kv.substr(eq + 1).c_str());
  }
  if (st != RTFP_OK && *out != nullptr) {
    rtfp_config_free(*out);
    *out = nullptr;
  }
  return st;
}

int print_manifest(const rtfp_config* cfg) {
  size_t needed = 0;
  rtfp_status st = rtfp_config_describe(cfg, nullptr, 0, &needed);
  if (st != RTFP_OK) {
    return report_failure(st);
  }
  std::string text(needed, '\0');
  st = rtfp_config_describe(cfg, text.data(), text.size(), nullptr);
  if (st != RTFP_OK) {
    return report_failure(st);
  }
  std::fputs(text.c_str(), stdout);
  return 0;
}

int run_convergence(const rtfp_config* cfg, const std::vector<int>& sizes) {
  std::vector<double> errors(sizes.size());
  std::vector<double> orders(sizes.size());
  const rtfp_status st =
      rtfp_convergence(cfg, sizes.data(), static_cast<int>(sizes.size()),
                       errors.data(), orders.data());
  if (st != RTFP_OK) {
    return report_failure(st);
  }
  std::printf("%8s  %14s  %8s\n", "cells", "l1_error", "order");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i == 0) {
      std::printf("%8d  %14.6e  %8s\n", sizes[i], errors[i], "-");
    } else {
      std::printf("%8d  %14.6e  %8.3f\n", sizes[i], errors[i], orders[i]);
    }
  }
  return 0;
}

int run_once(const rtfp_config* cfg, const std::string& out_dir) {
  rtfp_result* res = nullptr;
  const rtfp_status st =
      rtfp_run(cfg, out_dir.empty() ? nullptr : out_dir.c_str(), &res);
  if (st != RTFP_OK) {
    return report_failure(st);
  }
  std::printf("completed: t = %.6g after %ld steps\n",
              rtfp_result_t_final(res), rtfp_result_steps(res));
  const int newton = rtfp_result_max_newton_iterations(res);
  if (newton > 0) {
    std::printf("max newton iterations per stage: %d\n", newton);
  }
  const int samples = rtfp_result_sample_count(res);
  double row[5];
  if (samples > 0 && rtfp_result_sample(res, samples - 1, row) == RTFP_OK) {
    std::printf("final sample: entropy_i = %.9e  entropy_e = %.9e  "
                "divb_l1 = %.3e\n",
                row[1], row[2], row[3]);
  }
  if (!out_dir.empty()) {
    std::printf("outputs written to %s\n", out_dir.c_str());
  }
  rtfp_result_free(res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference solver for two-fluid relativistic "
               "plasmas with entropy-stable schemes"};
  app.set_help_all_flag("--help-all");

  bool want_list = false;
  app.add_flag("--list-cases", want_list,
               "Print the benchmark catalog and exit");

  std::string source;
  std::string out_dir;
  std::vector<std::string> overrides;
  std::vector<int> sizes;
  bool dry_run = false;
  bool ec_only = false;

  CLI::App* run = app.add_subcommand("run", "Execute one configuration");
  run->add_option("config", source,
                  "Config file path or catalog case name")
      ->required();
  run->add_option("--out", out_dir, "Directory for manifest, series, and "
                                    "snapshot outputs");
  run->add_option("--set", overrides,
                  "Override one config key (key=value, repeatable)");
  run->add_option("--convergence", sizes,
                  "Comma-separated grid sizes for a refinement study")
      ->delimiter(',');
  run->add_flag("--dry-run", dry_run,
                "Resolve and print the manifest without running");
  run->add_flag("--ec-only", ec_only,
                "Disable interface dissipation (entropy-conservative flux)");

  CLI11_PARSE(app, argc, argv);

  if (want_list) {
    return list_cases();
  }
  if (!run->parsed()) {
    std::fputs(app.help().c_str(), stdout);
    return 0;
  }

  if (ec_only) {
    overrides.push_back("ec_only=true");
  }
  rtfp_config* cfg = nullptr;
  const rtfp_status st = build_config(source, overrides, &cfg);
  if (st != RTFP_OK) {
    return static_cast<int>(st);
  }

  int rc;
  if (dry_run) {
    rc = print_manifest(cfg);
  } else if (!sizes.empty()) {
    rc = run_convergence(cfg, sizes);
  } else {
    rc = run_once(cfg, out_dir);
  }
  rtfp_config_free(cfg);
  return rc;
}
