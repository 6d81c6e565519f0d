/// \file config.cpp
/// \brief Configuration parsing and resolution.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "app/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace rtfp::app {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    return "";
  }
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw_error(ErrorCode::ConfigError,
                "key '" + key + "': cannot parse '" + value + "' as a number");
  }
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long x = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw_error(ErrorCode::ConfigError,
                "key '" + key + "': cannot parse '" + value +
                    "' as an integer");
  }
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") {
    return true;
  }
  if (value == "false" || value == "0") {
    return false;
  }
  throw_error(ErrorCode::ConfigError,
              "key '" + key + "': expected true/false, got '" + value + "'");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

KeyValues parse_config_text(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw_error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) +
                      ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw_error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_no) +
                      ": empty key or value in '" + line + "'");
    }
    kv[key] = value;
  }
  return kv;
}

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorCode::IoError, "cannot read config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

ResolvedRun resolve_run(const KeyValues& kv) {
  const auto case_it = kv.find("case");
  if (case_it == kv.end()) {
    throw_error(ErrorCode::ConfigError, "configuration must name a 'case'");
  }
  ResolvedRun r;
  r.def = &find_case(case_it->second);

  RunSetup& s = r.setup;
  s.grid = r.def->grid;
  s.bc = r.def->bc;
  s.params = r.def->params;
  s.scheme = r.def->scheme;
  s.time = r.def->time;
  s.t_start = r.def->t_start;
  s.t_end = r.def->t_end;
  s.sample_interval = r.def->sample_interval;
  s.track_psi = r.def->track_psi;
  s.psi_b0 = r.def->psi_b0;

  bool time_order_set = false;
  for (const auto& [key, value] : kv) {
    if (key == "case") {
      continue;
    } else if (key == "nx") {
      s.grid.nx = parse_int(key, value);
    } else if (key == "ny") {
      s.grid.ny = parse_int(key, value);
    } else if (key == "order") {
      s.scheme.order = parse_int(key, value);
    } else if (key == "ec_only") {
      s.scheme.ec_only = parse_bool(key, value);
    } else if (key == "imex") {
      s.time.imex = parse_bool(key, value);
    } else if (key == "time_order") {
      s.time.order = parse_int(key, value);
      time_order_set = true;
    } else if (key == "cfl") {
      s.time.cfl = parse_double(key, value);
    } else if (key == "harmonic_cfl") {
      s.time.harmonic_cfl = parse_bool(key, value);
    } else if (key == "fixed_dt") {
      s.time.fixed_dt = parse_double(key, value);
    } else if (key == "t_start") {
      s.t_start = parse_double(key, value);
    } else if (key == "t_end") {
      s.t_end = parse_double(key, value);
    } else if (key == "sample_interval") {
      s.sample_interval = parse_double(key, value);
    } else if (key == "snapshot_interval") {
      r.snapshot_interval = parse_double(key, value);
    } else if (key == "track_psi") {
      s.track_psi = parse_bool(key, value);
    } else if (key == "psi_b0") {
      s.psi_b0 = parse_double(key, value);
    } else if (key == "gamma_i") {
      s.params.gamma_i = parse_double(key, value);
    } else if (key == "gamma_e") {
      s.params.gamma_e = parse_double(key, value);
    } else if (key == "r_i") {
      s.params.r_i = parse_double(key, value);
    } else if (key == "r_e") {
      s.params.r_e = parse_double(key, value);
    } else if (key == "kappa") {
      s.params.kappa = parse_double(key, value);
    } else if (key == "chi") {
      s.params.chi = parse_double(key, value);
    } else if (key == "eta") {
      s.params.eta = parse_double(key, value);
    } else if (key == "source_scale") {
      s.params.source_scale = parse_double(key, value);
    } else {
      throw_error(ErrorCode::ConfigError,
                  "unknown configuration key '" + key + "'");
    }
  }

  if (s.grid.nx < 1 || s.grid.ny < 1) {
    throw_error(ErrorCode::ConfigError, "grid sizes must be positive");
  }
  if (s.scheme.order < 1 || s.scheme.order > 4) {
    throw_error(ErrorCode::ConfigError,
                "spatial order must lie in 1..4, got " +
                    std::to_string(s.scheme.order));
  }
  // A spatial-order override drags the default integrator order along so
  // `order = 3` alone selects the matching pair.
  if (!time_order_set) {
    s.time.order = std::min(std::max(s.scheme.order, 2), 4);
  }
  s.grid.ghost = s.scheme.order;
  s.params.validate();

  if (r.def->forced) {
    s.forcing = [](double x, double, double t) {
      return manufactured_forcing(x, t);
    };
  }
  return r;
}

std::string manifest_text(const ResolvedRun& r) {
  const RunSetup& s = r.setup;
  std::ostringstream out;
  out << "case = " << r.def->name << "\n";
  out << "nx = " << s.grid.nx << "\n";
  out << "ny = " << s.grid.ny << "\n";
  out << "order = " << s.scheme.order << "\n";
  out << "ec_only = " << (s.scheme.ec_only ? "true" : "false") << "\n";
  out << "imex = " << (s.time.imex ? "true" : "false") << "\n";
  out << "time_order = " << s.time.order << "\n";
  out << "cfl = " << format_double(s.time.cfl) << "\n";
  out << "harmonic_cfl = " << (s.time.harmonic_cfl ? "true" : "false")
      << "\n";
  out << "fixed_dt = " << format_double(s.time.fixed_dt) << "\n";
  out << "t_start = " << format_double(s.t_start) << "\n";
  out << "t_end = " << format_double(s.t_end) << "\n";
  out << "sample_interval = " << format_double(s.sample_interval) << "\n";
  out << "snapshot_interval = " << format_double(r.snapshot_interval) << "\n";
  out << "track_psi = " << (s.track_psi ? "true" : "false") << "\n";
  out << "psi_b0 = " << format_double(s.psi_b0) << "\n";
  out << "gamma_i = " << format_double(s.params.gamma_i) << "\n";
  out << "gamma_e = " << format_double(s.params.gamma_e) << "\n";
  out << "r_i = " << format_double(s.params.r_i) << "\n";
  out << "r_e = " << format_double(s.params.r_e) << "\n";
  out << "kappa = " << format_double(s.params.kappa) << "\n";
  out << "chi = " << format_double(s.params.chi) << "\n";
  out << "eta = " << format_double(s.params.eta) << "\n";
  out << "source_scale = " << format_double(s.params.source_scale) << "\n";
  return out.str();
}

}  // namespace rtfp::app
