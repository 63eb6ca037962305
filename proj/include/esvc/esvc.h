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
#ifndef ESVC_ESVC_H
#define ESVC_ESVC_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(ESVC_BUILDING_LIBRARY)
#    define ESVC_API __declspec(dllexport)
#  else
#    define ESVC_API __declspec(dllimport)
#  endif
#else
#  define ESVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. 1-3 coincide with the CLI exit codes. */
typedef enum esvc_status {
  ESVC_OK = 0,
  ESVC_ERR_CONFIG = 1,
  ESVC_ERR_INFEASIBLE = 2,
  ESVC_ERR_FALL = 3,
  ESVC_ERR_INVALID_ARGUMENT = 4,
  ESVC_ERR_IO = 5,
  ESVC_ERR_NONCONVERGENCE = 6,
  ESVC_ERR_INTERNAL = 7
} esvc_status;

typedef struct esvc_config esvc_config;
typedef struct esvc_foot esvc_foot;

ESVC_API const char* esvc_version(void);

/* Message of the last failed call on this thread; empty after success. */
ESVC_API const char* esvc_last_error(void);

ESVC_API const char* esvc_status_name(esvc_status status);

/* Process exit code for a status: 0 ok, 1 config/argument/io,
   2 infeasible or non-converged design, 3 fall, 4 internal. */
ESVC_API int esvc_exit_code(esvc_status status);

/* ---- configuration and commands ---- */

ESVC_API esvc_status esvc_config_load(const char* path, esvc_config** out);
ESVC_API esvc_status esvc_config_parse(const char* text, esvc_config** out);
ESVC_API void esvc_config_free(esvc_config* cfg);

/* Hex SHA-256 of the config text; buf must hold 65 bytes. */
ESVC_API esvc_status esvc_config_hash(const esvc_config* cfg, char* buf);

/* Runs "design", "sweep", "walk" or "profile", writing into out_dir.
   has_seed = 0 keeps the seed from the config. Safe to call concurrently
   on distinct output directories. */
ESVC_API esvc_status esvc_run(const esvc_config* cfg, const char* command,
                              const char* out_dir, uint64_t seed, int has_seed);

/* ---- feet ---- */

typedef struct esvc_design_params {
  double mid_r_a, mid_r_b;
  double h_foot;
  double theta_m_star;
  double w_foot_nominal;
  double l_foot;
} esvc_design_params;

/* Defaults for everything except the mid axes. */
ESVC_API void esvc_design_params_init(esvc_design_params* p);

ESVC_API esvc_status esvc_foot_design(const esvc_design_params* p,
                                      esvc_foot** out);
ESVC_API esvc_status esvc_foot_line(double h_foot, double w_foot,
                                    double l_foot, esvc_foot** out);
ESVC_API void esvc_foot_free(esvc_foot* foot);

typedef struct esvc_foot_info {
  int is_line;
  double r_fa, r_fb;
  double w_foot, h_foot, l_foot;
  double theta_m_star;
  double alpha10;
  double theta_corner;
  double l_m_star;
} esvc_foot_info;

ESVC_API esvc_status esvc_foot_get_info(const esvc_foot* foot,
                                        esvc_foot_info* info);

/* Row-major 4x4 transforms for a roll/pitch/yaw pose. Either output may be
   NULL. */
ESVC_API esvc_status esvc_foot_pose(const esvc_foot* foot, double roll,
                                    double pitch, double yaw,
                                    double T_oi_c[16], double T_oc_c[16]);

/* Signed compensated rollover length at a roll angle. */
ESVC_API esvc_status esvc_foot_rollover(const esvc_foot* foot, double roll,
                                        double* length);

/* Arc lengths from the minor vertex to roll angle theta in [0, pi/2):
   quadrature, elementary approximation and calibrated compensation. */
ESVC_API esvc_status esvc_arc_lengths(double r_a, double r_b, double theta,
                                      double* exact, double* approx,
                                      double* compensated);

#ifdef __cplusplus
}
#endif

#endif /* ESVC_ESVC_H */
