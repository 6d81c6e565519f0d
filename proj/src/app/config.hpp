/// \file config.hpp
/// \brief Key-value run configuration: parsing, case resolution, and the
///        manifest echo.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <map>
#include <string>

#include "app/cases.hpp"

namespace rtfp::app {

/// Raw configuration entries in file order. Ordered so that manifests and
/// error messages are deterministic.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. `#` starts a comment, blank lines are
/// skipped. Throws ErrorCode::ConfigError with the line number on a
/// malformed line.
KeyValues parse_config_text(const std::string& text);

/// Reads and parses a configuration file. Throws ErrorCode::IoError when
/// the file cannot be read.
KeyValues parse_config_file(const std::string& path);

/// A fully resolved run: the selected case with every override applied.
struct ResolvedRun {
  const CaseDefinition* def = nullptr;
  RunSetup setup;
  /// Snapshot cadence in simulation time; 0 writes only the initial and
  /// final states.
  double snapshot_interval = 0.0;
};

/// Builds a run from the `case` entry plus overrides. Unknown keys and
/// out-of-range values throw ErrorCode::ConfigError.
ResolvedRun resolve_run(const KeyValues& kv);

/// The resolved configuration as loadable `key = value` text. Doubles are
/// printed with enough digits to round-trip, so re-running a manifest
/// reproduces the run bit for bit.
std::string manifest_text(const ResolvedRun& run);

}  // namespace rtfp::app
