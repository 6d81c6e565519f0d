/// \file errors.hpp
/// \brief Exception type carrying an error category for the C API boundary.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#pragma once

#include <stdexcept>
#include <string>

namespace rtfp {

/// Error categories. These map one-to-one onto the status codes of the
/// shared-library C API.
enum class ErrorCode : int {
  InvalidArgument = 1,  ///< bad parameter value or malformed input
  Inadmissible = 2,     ///< state left the physical admissible set
  RecoveryFailure = 3,  ///< primitive recovery did not converge
  NewtonFailure = 4,    ///< implicit stage solve did not converge
  ConfigError = 5,      ///< unusable run configuration
  IoError = 6,          ///< file read/write failure
  Internal = 7,         ///< broken internal invariant
};

/// Exception thrown by the core library. The code selects the C API status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace rtfp
