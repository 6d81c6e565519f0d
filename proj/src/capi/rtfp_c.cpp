/// \file rtfp_c.cpp
/// \brief Shared-library C interface over the solver and batch drivers.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#include "rtfp/rtfp.h"

#include <cstring>
#include <string>
#include <vector>

#include "app/cases.hpp"
#include "app/config.hpp"
#include "app/output.hpp"
#include "core/errors.hpp"

struct rtfp_config {
  rtfp::app::KeyValues kv;
};

struct rtfp_result {
  rtfp::RunRecord record;
};

namespace {

thread_local std::string g_last_error;

rtfp_status fail(rtfp_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

/// Runs `body`, translating exceptions into status codes. The error codes
/// of the C++ layer share the C enum's numbering.
template <typename Body>
rtfp_status guarded(Body&& body) {
  try {
    body();
    return RTFP_OK;
  } catch (const rtfp::Error& e) {
    return fail(static_cast<rtfp_status>(static_cast<int>(e.code())),
                e.what());
  } catch (const std::exception& e) {
    return fail(RTFP_E_INTERNAL, e.what());
  } catch (...) {
    return fail(RTFP_E_INTERNAL, "unknown failure");
  }
}

void copy_string(const std::string& s, char* buf, size_t size) {
  if (buf == nullptr || size == 0) {
    return;
  }
  const size_t n = std::min(size - 1, s.size());
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

}  // namespace

extern "C" {

const char* rtfp_last_error(void) { return g_last_error.c_str(); }

int rtfp_case_count(void) {
  return static_cast<int>(rtfp::app::case_catalog().size());
}

rtfp_status rtfp_case_info(int index, char* name, size_t name_size,
                           char* summary, size_t summary_size) {
  return guarded([&] {
    const auto& catalog = rtfp::app::case_catalog();
    if (index < 0 || index >= static_cast<int>(catalog.size())) {
      rtfp::throw_error(rtfp::ErrorCode::InvalidArgument,
                        "case index out of range");
    }
    copy_string(catalog[index].name, name, name_size);
    copy_string(catalog[index].summary, summary, summary_size);
  });
}

rtfp_status rtfp_config_create(rtfp_config** out) {
  if (out == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "output handle is null");
  }
  return guarded([&] { *out = new rtfp_config(); });
}

rtfp_status rtfp_config_load(const char* path, rtfp_config** out) {
  if (path == nullptr || out == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "path or output handle is null");
  }
  return guarded([&] {
    auto kv = rtfp::app::parse_config_file(path);
    *out = new rtfp_config{std::move(kv)};
  });
}

rtfp_status rtfp_config_set(rtfp_config* cfg, const char* key,
                            const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { cfg->kv[key] = value; });
}

rtfp_status rtfp_config_describe(const rtfp_config* cfg, char* buf,
                                 size_t size, size_t* needed) {
  if (cfg == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "configuration handle is null");
  }
  return guarded([&] {
    const std::string text =
        rtfp::app::manifest_text(rtfp::app::resolve_run(cfg->kv));
    if (needed != nullptr) {
      *needed = text.size() + 1;
    }
    copy_string(text, buf, size);
  });
}

void rtfp_config_free(rtfp_config* cfg) { delete cfg; }

rtfp_status rtfp_run(const rtfp_config* cfg, const char* out_dir,
                     rtfp_result** out) {
  if (cfg == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "configuration handle is null");
  }
  return guarded([&] {
    const rtfp::app::ResolvedRun r = rtfp::app::resolve_run(cfg->kv);
    rtfp::RunRecord record;
    if (out_dir != nullptr) {
      record = rtfp::app::execute_run(r, out_dir).record;
    } else {
      const rtfp::FieldArray initial = rtfp::app::build_initial_field(
          *r.def, r.setup.grid, r.setup.bc, r.setup.params);
      record = rtfp::run(initial, r.setup);
    }
    if (out != nullptr) {
      *out = new rtfp_result{std::move(record)};
    }
  });
}

rtfp_status rtfp_convergence(const rtfp_config* cfg, const int* sizes,
                             int count, double* errors, double* orders) {
  if (cfg == nullptr || sizes == nullptr || count < 1) {
    return fail(RTFP_E_INVALID_ARGUMENT,
                "configuration and a positive number of sizes are required");
  }
  return guarded([&] {
    const rtfp::app::ResolvedRun r = rtfp::app::resolve_run(cfg->kv);
    const std::vector<int> ns(sizes, sizes + count);
    const auto rows = rtfp::app::convergence_study(r, ns);
    for (int i = 0; i < count; ++i) {
      if (errors != nullptr) {
        errors[i] = rows[i].error;
      }
      if (orders != nullptr) {
        orders[i] = rows[i].order;
      }
    }
  });
}

long rtfp_result_steps(const rtfp_result* res) {
  return res == nullptr ? -1 : res->record.steps;
}

double rtfp_result_t_final(const rtfp_result* res) {
  return res == nullptr ? 0.0 : res->record.t_final;
}

int rtfp_result_max_newton_iterations(const rtfp_result* res) {
  return res == nullptr ? -1 : res->record.max_newton_iterations;
}

int rtfp_result_sample_count(const rtfp_result* res) {
  return res == nullptr ? -1
                        : static_cast<int>(res->record.series.size());
}

rtfp_status rtfp_result_sample(const rtfp_result* res, int index,
                               double values[5]) {
  if (res == nullptr || values == nullptr) {
    return fail(RTFP_E_INVALID_ARGUMENT, "null argument");
  }
  if (index < 0 || index >= static_cast<int>(res->record.series.size())) {
    return fail(RTFP_E_INVALID_ARGUMENT, "sample index out of range");
  }
  const rtfp::DiagnosticSample& s = res->record.series[index];
  values[0] = s.t;
  values[1] = s.entropy_ion;
  values[2] = s.entropy_ele;
  values[3] = s.divb_l1;
  values[4] = s.psi;
  return RTFP_OK;
}

void rtfp_result_free(rtfp_result* res) { delete res; }

}  // extern "C"
