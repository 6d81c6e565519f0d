/// \file test_capi.cpp
/// \brief Exercises the shared-library C interface end to end.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "rtfp/rtfp.h"

namespace {

namespace fs = std::filesystem;

/// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("rtfp_capi_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

/// Owns an rtfp_config for the duration of a test.
struct Config {
  rtfp_config* ptr = nullptr;

  Config() { REQUIRE(rtfp_config_create(&ptr) == RTFP_OK); }
  explicit Config(const char* path) {
    REQUIRE(rtfp_config_load(path, &ptr) == RTFP_OK);
  }
  ~Config() { rtfp_config_free(ptr); }

  void set(const char* key, const char* value) {
    REQUIRE(rtfp_config_set(ptr, key, value) == RTFP_OK);
  }
  std::string describe() {
    size_t needed = 0;
    REQUIRE(rtfp_config_describe(ptr, nullptr, 0, &needed) == RTFP_OK);
    REQUIRE(needed > 1);
    std::string text(needed, '\0');
    REQUIRE(rtfp_config_describe(ptr, text.data(), text.size(), nullptr) ==
            RTFP_OK);
    text.resize(needed - 1);
    return text;
  }
};

/// Small manufactured-solution run that finishes in well under a second.
void configure_tiny_run(Config& cfg) {
  cfg.set("case", "accuracy");
  cfg.set("nx", "32");
  cfg.set("t_end", "0.05");
  cfg.set("sample_interval", "0.02");
}

}  // namespace

TEST_CASE("status codes mirror the library error taxonomy") {
  using rtfp::ErrorCode;
  CHECK(static_cast<int>(ErrorCode::InvalidArgument) ==
        RTFP_E_INVALID_ARGUMENT);
  CHECK(static_cast<int>(ErrorCode::Inadmissible) == RTFP_E_INADMISSIBLE);
  CHECK(static_cast<int>(ErrorCode::RecoveryFailure) == RTFP_E_RECOVERY);
  CHECK(static_cast<int>(ErrorCode::NewtonFailure) == RTFP_E_NEWTON);
  CHECK(static_cast<int>(ErrorCode::ConfigError) == RTFP_E_CONFIG);
  CHECK(static_cast<int>(ErrorCode::IoError) == RTFP_E_IO);
  CHECK(static_cast<int>(ErrorCode::Internal) == RTFP_E_INTERNAL);
}

TEST_CASE("benchmark catalog is reachable through the C interface") {
  const int count = rtfp_case_count();
  CHECK(count == 9);

  char name[64];
  char summary[256];
  for (int i = 0; i < count; ++i) {
    REQUIRE(rtfp_case_info(i, name, sizeof(name), summary,
                           sizeof(summary)) == RTFP_OK);
    CHECK(std::strlen(name) > 0);
    CHECK(std::strlen(summary) > 0);
  }
  REQUIRE(rtfp_case_info(0, name, sizeof(name), nullptr, 0) == RTFP_OK);
  CHECK(std::string(name) == "accuracy");

  SUBCASE("names truncate but stay NUL-terminated") {
    char tiny[4];
    REQUIRE(rtfp_case_info(1, tiny, sizeof(tiny), nullptr, 0) == RTFP_OK);
    CHECK(std::string(tiny) == "bri");
  }

  SUBCASE("out-of-range indices are rejected with a message") {
    CHECK(rtfp_case_info(-1, name, sizeof(name), summary,
                         sizeof(summary)) == RTFP_E_INVALID_ARGUMENT);
    CHECK(std::string(rtfp_last_error()).find("index") !=
          std::string::npos);
    CHECK(rtfp_case_info(count, name, sizeof(name), summary,
                         sizeof(summary)) == RTFP_E_INVALID_ARGUMENT);
  }
}

TEST_CASE("configurations build, describe, and reload") {
  Config cfg;
  configure_tiny_run(cfg);

  const std::string text = cfg.describe();
  CHECK(text.find("case = accuracy\n") != std::string::npos);
  CHECK(text.find("nx = 32\n") != std::string::npos);
  CHECK(text.find("t_end = 0.05") != std::string::npos);

  SUBCASE("describe truncates into short buffers") {
    char buf[8];
    size_t needed = 0;
    REQUIRE(rtfp_config_describe(cfg.ptr, buf, sizeof(buf), &needed) ==
            RTFP_OK);
    CHECK(needed == text.size() + 1);
    CHECK(std::string(buf) == text.substr(0, 7));
  }

  SUBCASE("the describe text reloads as a config file") {
    TempDir tmp;
    const fs::path file = tmp.path / "echo.cfg";
    std::ofstream(file) << text;
    Config reloaded(file.string().c_str());
    CHECK(reloaded.describe() == text);
  }

  SUBCASE("overriding a key changes the description") {
    cfg.set("order", "3");
    CHECK(cfg.describe().find("order = 3\n") != std::string::npos);
  }
}

TEST_CASE("runs execute with and without an output directory") {
  Config cfg;
  configure_tiny_run(cfg);

  rtfp_result* res = nullptr;
  REQUIRE(rtfp_run(cfg.ptr, nullptr, &res) == RTFP_OK);
  REQUIRE(res != nullptr);

  CHECK(rtfp_result_steps(res) > 0);
  CHECK(rtfp_result_t_final(res) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(rtfp_result_max_newton_iterations(res) == 0);

  const int samples = rtfp_result_sample_count(res);
  REQUIRE(samples >= 3);
  double first[5];
  double last[5];
  REQUIRE(rtfp_result_sample(res, 0, first) == RTFP_OK);
  REQUIRE(rtfp_result_sample(res, samples - 1, last) == RTFP_OK);
  CHECK(first[0] == doctest::Approx(0.0));
  CHECK(last[0] == doctest::Approx(0.05).epsilon(1e-12));
  for (int k = 1; k < 5; ++k) {
    CHECK(std::isfinite(first[k]));
    CHECK(std::isfinite(last[k]));
  }
  CHECK(first[1] != 0.0);  // ion entropy of this state is nonzero
  CHECK(rtfp_result_sample(res, samples, last) == RTFP_E_INVALID_ARGUMENT);
  rtfp_result_free(res);

  SUBCASE("an output directory receives the run artifacts") {
    TempDir tmp;
    const fs::path dir = tmp.path / "run";
    REQUIRE(rtfp_run(cfg.ptr, dir.string().c_str(), nullptr) == RTFP_OK);
    CHECK(fs::exists(dir / "manifest.txt"));
    CHECK(fs::exists(dir / "series.csv"));
    CHECK(fs::exists(dir / "snapshot_0000.dat"));
  }
}

TEST_CASE("grid refinement reduces the ion density error at some order") {
  Config cfg;
  cfg.set("case", "accuracy");
  cfg.set("t_end", "0.1");

  const int sizes[2] = {25, 50};
  double errors[2] = {0.0, 0.0};
  double orders[2] = {0.0, 0.0};
  REQUIRE(rtfp_convergence(cfg.ptr, sizes, 2, errors, orders) == RTFP_OK);
  CHECK(errors[0] > 0.0);
  CHECK(errors[1] > 0.0);
  CHECK(errors[1] < 0.5 * errors[0]);
  CHECK(orders[0] == 0.0);
  CHECK(orders[1] > 0.8);
  CHECK(orders[1] < 3.0);
}

TEST_CASE("failures report status codes and thread-local messages") {
  SUBCASE("null handles are invalid arguments") {
    CHECK(rtfp_config_create(nullptr) == RTFP_E_INVALID_ARGUMENT);
    CHECK(rtfp_config_set(nullptr, "nx", "8") == RTFP_E_INVALID_ARGUMENT);
    CHECK(rtfp_config_describe(nullptr, nullptr, 0, nullptr) ==
          RTFP_E_INVALID_ARGUMENT);
    CHECK(rtfp_run(nullptr, nullptr, nullptr) == RTFP_E_INVALID_ARGUMENT);
    CHECK(rtfp_convergence(nullptr, nullptr, 0, nullptr, nullptr) ==
          RTFP_E_INVALID_ARGUMENT);
    CHECK(rtfp_result_steps(nullptr) == -1);
    CHECK(rtfp_result_sample_count(nullptr) == -1);
  }

  SUBCASE("an unknown case name fails configuration resolution") {
    Config cfg;
    cfg.set("case", "no_such_case");
    CHECK(rtfp_config_describe(cfg.ptr, nullptr, 0, nullptr) ==
          RTFP_E_CONFIG);
    const std::string message = rtfp_last_error();
    CHECK(message.find("no_such_case") != std::string::npos);
    CHECK(message.find("accuracy") != std::string::npos);
    CHECK(rtfp_run(cfg.ptr, nullptr, nullptr) == RTFP_E_CONFIG);
  }

  SUBCASE("an unknown key fails configuration resolution") {
    Config cfg;
    configure_tiny_run(cfg);
    cfg.set("wobble", "1");
    CHECK(rtfp_run(cfg.ptr, nullptr, nullptr) == RTFP_E_CONFIG);
    CHECK(std::string(rtfp_last_error()).find("wobble") !=
          std::string::npos);
  }

  SUBCASE("a missing config file is an io error") {
    rtfp_config* cfg = nullptr;
    CHECK(rtfp_config_load("/nonexistent/rtfp.cfg", &cfg) == RTFP_E_IO);
    CHECK(cfg == nullptr);
  }

  SUBCASE("invalid physics parameters are invalid arguments") {
    Config cfg;
    configure_tiny_run(cfg);
    cfg.set("gamma_i", "3.5");
    CHECK(rtfp_run(cfg.ptr, nullptr, nullptr) == RTFP_E_INVALID_ARGUMENT);
  }
}
