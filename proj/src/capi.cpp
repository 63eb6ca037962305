/*
 * Copyright 2026 The ESVC Foot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "esvc/esvc.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "esvc/commands.hpp"
#include "esvc/config.hpp"
#include "esvc/contact.hpp"
#include "esvc/design.hpp"
#include "esvc/error.hpp"

struct esvc_config {
  esvc::RunConfig cfg;
};

struct esvc_foot {
  esvc::FootGeometry foot;
};

namespace {

thread_local std::string g_last_error;

esvc_status set_error(esvc_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
esvc_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ESVC_OK;
  } catch (const esvc::Error& e) {
    return set_error(static_cast<esvc_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ESVC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ESVC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(ESVC_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (!p) esvc::fail(esvc::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

}  // namespace

extern "C" {

const char* esvc_version(void) { return "0.1.0"; }

const char* esvc_last_error(void) { return g_last_error.c_str(); }

const char* esvc_status_name(esvc_status s) {
  switch (s) {
    case ESVC_OK: return "ok";
    case ESVC_ERR_CONFIG: return "config";
    case ESVC_ERR_INFEASIBLE: return "infeasible";
    case ESVC_ERR_FALL: return "fall";
    case ESVC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ESVC_ERR_IO: return "io";
    case ESVC_ERR_NONCONVERGENCE: return "nonconvergence";
    case ESVC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int esvc_exit_code(esvc_status s) {
  switch (s) {
    case ESVC_OK: return 0;
    case ESVC_ERR_CONFIG:
    case ESVC_ERR_INVALID_ARGUMENT:
    case ESVC_ERR_IO: return 1;
    case ESVC_ERR_INFEASIBLE:
    case ESVC_ERR_NONCONVERGENCE: return 2;
    case ESVC_ERR_FALL: return 3;
    case ESVC_ERR_INTERNAL: return 4;
  }
  return 4;
}

esvc_status esvc_config_load(const char* path, esvc_config** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    *out = new esvc_config{esvc::load_config(path)};
  });
}

esvc_status esvc_config_parse(const char* text, esvc_config** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    *out = new esvc_config{esvc::parse_config(text, "<memory>")};
  });
}

void esvc_config_free(esvc_config* cfg) { delete cfg; }

esvc_status esvc_config_hash(const esvc_config* cfg, char* buf) {
  return guarded([&] {
    need(cfg, "cfg");
    need(buf, "buf");
    std::memcpy(buf, cfg->cfg.sha256.c_str(), cfg->cfg.sha256.size() + 1);
  });
}

esvc_status esvc_run(const esvc_config* cfg, const char* command,
                     const char* out_dir, uint64_t seed, int has_seed) {
  return guarded([&] {
    need(cfg, "cfg");
    need(command, "command");
    need(out_dir, "out_dir");
    esvc::RunOptions opt;
    opt.out_dir = out_dir;
    if (has_seed) opt.seed = seed;
    esvc::run_command(cfg->cfg, command, opt);
  });
}

void esvc_design_params_init(esvc_design_params* p) {
  if (!p) return;
  const esvc::DesignSpec d;
  p->mid_r_a = 0.0;
  p->mid_r_b = 0.0;
  p->h_foot = d.h_foot;
  p->theta_m_star = d.theta_m_star;
  p->w_foot_nominal = d.w_foot_nominal;
  p->l_foot = esvc::DesignSection{}.l_foot;
}

esvc_status esvc_foot_design(const esvc_design_params* p, esvc_foot** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = nullptr;
    esvc::DesignSection d;
    d.spec.mid = esvc::make_arc(p->mid_r_a, p->mid_r_b);
    d.spec.h_foot = p->h_foot;
    d.spec.theta_m_star = p->theta_m_star;
    d.spec.w_foot_nominal = p->w_foot_nominal;
    d.l_foot = p->l_foot;
    esvc::validate(d.spec);
    esvc::require(d.l_foot > 0.0, "l_foot must be positive");
    *out = new esvc_foot{esvc::design_foot(d)};
  });
}

esvc_status esvc_foot_line(double h_foot, double w_foot, double l_foot,
                           esvc_foot** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new esvc_foot{esvc::FootGeometry::line(h_foot, w_foot, l_foot)};
  });
}

void esvc_foot_free(esvc_foot* foot) { delete foot; }

esvc_status esvc_foot_get_info(const esvc_foot* foot, esvc_foot_info* info) {
  return guarded([&] {
    need(foot, "foot");
    need(info, "info");
    const esvc::FootGeometry& f = foot->foot;
    info->is_line = f.kind == esvc::FootKind::Line;
    info->r_fa = f.fore.r_a;
    info->r_fb = f.fore.r_b;
    info->w_foot = f.w_foot;
    info->h_foot = f.h_foot;
    info->l_foot = f.l_foot;
    info->theta_m_star = f.theta_m_star;
    info->alpha10 = f.alpha10;
    info->theta_corner = f.theta_corner;
    info->l_m_star = f.l_m_star;
  });
}

esvc_status esvc_foot_pose(const esvc_foot* foot, double roll, double pitch,
                           double yaw, double T_oi_c[16], double T_oc_c[16]) {
  return guarded([&] {
    need(foot, "foot");
    const esvc::FullTransform ft = esvc::full_transform(foot->foot, roll, pitch, yaw);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (T_oi_c) T_oi_c[4 * r + c] = ft.T_Oi_C(r, c);
        if (T_oc_c) T_oc_c[4 * r + c] = ft.T_OC_C(r, c);
      }
    }
  });
}

esvc_status esvc_foot_rollover(const esvc_foot* foot, double roll, double* length) {
  return guarded([&] {
    need(foot, "foot");
    need(length, "length");
    *length = esvc::roll_contact(foot->foot, roll).rollover_length;
  });
}

esvc_status esvc_arc_lengths(double r_a, double r_b, double theta, double* exact,
                             double* approx, double* compensated) {
  return guarded([&] {
    esvc::require(theta >= 0.0 && theta < std::acos(0.0),
                  "theta must lie in [0, pi/2)");
    const esvc::EllipseArc arc = esvc::make_arc(r_a, r_b);
    const esvc::RollAngles a = esvc::rollover_from_roll(arc, theta);
    if (exact) *exact = esvc::arc_length_exact(arc, a.lambda);
    if (approx) *approx = esvc::arc_length_approx(arc, a.lambda);
    if (compensated) {
      *compensated = esvc::arc_length_compensated(
          arc, esvc::calibrate_compensation(arc, 1024), a);
    }
  });
}

}  // extern "C"
