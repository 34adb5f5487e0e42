/* Copyright 2026 The rotvlab Authors
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

/* C interface to the rotvlab towed-vehicle simulation and control library.
 *
 * All functions return a rotv_status; on any nonzero status a human-readable
 * message for the calling thread is available from rotv_last_error().  Output
 * parameters are only written on ROTV_OK.  Strings returned through char**
 * are heap-allocated and must be released with rotv_string_free(); strings
 * returned as const char* are static and must not be freed.  Handles are
 * opaque and freed with their matching *_free function (NULL is a no-op).
 */

#ifndef ROTVLAB_H
#define ROTVLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ROTVLAB_API __declspec(dllexport)
#else
#define ROTVLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rotv_status {
  ROTV_OK = 0,
  ROTV_ERR_ARGUMENT = 1,  /* null handle, bad name, invalid parameter */
  ROTV_ERR_CONFIG = 2,    /* malformed configuration text */
  ROTV_ERR_SYNTHESIS = 3, /* trim / linearization / gain synthesis failed */
  ROTV_ERR_DIVERGED = 4,  /* the closed-loop integration blew up */
  ROTV_ERR_IO = 5         /* file could not be opened, read or written */
} rotv_status;

/* Full run configuration: vehicle, actuators, controllers, courses. */
typedef struct rotv_config rotv_config;
/* Feedback gains tabulated over tow speed. */
typedef struct rotv_schedule rotv_schedule;
/* A simulated closed-loop run plus the course it was produced on. */
typedef struct rotv_trajectory rotv_trajectory;

/* Columns of a trajectory, in CSV order. */
#define ROTV_TRAJECTORY_COLS 19

ROTVLAB_API const char* rotv_version(void);

/* Message from the most recent failing call on this thread ("" if none). */
ROTVLAB_API const char* rotv_last_error(void);

ROTVLAB_API void rotv_string_free(char* text);

/* --- configuration ------------------------------------------------------ */

ROTVLAB_API rotv_status rotv_config_default(rotv_config** out);
ROTVLAB_API rotv_status rotv_config_open(const char* path, rotv_config** out);
/* Parses config text directly; origin labels error messages. */
ROTVLAB_API rotv_status rotv_config_parse(const char* text, const char* origin,
                                          rotv_config** out);
ROTVLAB_API void rotv_config_free(rotv_config* config);

/* --- linear models and gain schedules ------------------------------------ */

/* Trims the vehicle at the given tow speed and writes the Jacobians of the
 * reduced dynamics: a is 6x6 row-major (36 doubles), b is 6x3 row-major (18
 * doubles).  State order: depth, heave rate, roll, roll rate, pitch, pitch
 * rate; input order: left flap, right flap, tail flap. */
ROTVLAB_API rotv_status rotv_linearize(const rotv_config* config, double surge,
                                       double* a, double* b);

ROTVLAB_API rotv_status rotv_schedule_build(const rotv_config* config,
                                            rotv_schedule** out);
/* Same, but for an explicit ascending list of tow speeds instead of the
 * configured grid. */
ROTVLAB_API rotv_status rotv_schedule_build_speeds(const rotv_config* config,
                                                   const double* speeds,
                                                   size_t n_speeds,
                                                   rotv_schedule** out);
ROTVLAB_API rotv_status rotv_schedule_size(const rotv_schedule* schedule,
                                           size_t* out);
/* Entry `index`: its tow speed and its 3x6 row-major gain (18 doubles). */
ROTVLAB_API rotv_status rotv_schedule_entry(const rotv_schedule* schedule,
                                            size_t index, double* surge,
                                            double* gain);
/* Interpolated 3x6 row-major gain at an arbitrary tow speed. */
ROTVLAB_API rotv_status rotv_schedule_gain_at(const rotv_schedule* schedule,
                                              double surge, double* gain);
/* Stabilization warnings recorded while building the schedule. */
ROTVLAB_API rotv_status rotv_schedule_warning_count(
    const rotv_schedule* schedule, size_t* out);
ROTVLAB_API rotv_status rotv_schedule_warning(const rotv_schedule* schedule,
                                              size_t index, char** out);
ROTVLAB_API void rotv_schedule_free(rotv_schedule* schedule);

/* --- closed-loop simulation ---------------------------------------------- */

/* Runs `controller` ("lqr" or "pid") over the preset course `scenario`
 * ("nominal", "disturbed", "gainsched" or "tuning").  The seed drives the
 * disturbance stream; identical inputs give byte-identical trajectories. */
ROTVLAB_API rotv_status rotv_simulate(const rotv_config* config,
                                      const char* scenario,
                                      const char* controller, uint64_t seed,
                                      rotv_trajectory** out);

ROTVLAB_API rotv_status rotv_trajectory_rows(const rotv_trajectory* trajectory,
                                             size_t* out);
/* Comma-separated column names, matching the CSV header. */
ROTVLAB_API const char* rotv_trajectory_header(void);
ROTVLAB_API rotv_status rotv_trajectory_cell(const rotv_trajectory* trajectory,
                                             size_t row, size_t col,
                                             double* out);
ROTVLAB_API rotv_status rotv_trajectory_to_csv(
    const rotv_trajectory* trajectory, char** out);
ROTVLAB_API rotv_status rotv_trajectory_write_csv(
    const rotv_trajectory* trajectory, const char* path);
/* Tracking/actuation metrics of the run, rendered as deterministic text. */
ROTVLAB_API rotv_status rotv_trajectory_metrics_report(
    const rotv_trajectory* trajectory, char** out);
ROTVLAB_API void rotv_trajectory_free(rotv_trajectory* trajectory);

/* --- one-call drivers ----------------------------------------------------- */

/* Simulates, scores and (when out_dir is non-NULL and non-empty) writes
 * <scenario>_<controller>[_seed<N>].csv plus a .txt report into out_dir.
 * The report text is returned through report_out when it is non-NULL. */
ROTVLAB_API rotv_status rotv_run_scenario(const rotv_config* config,
                                          const char* scenario,
                                          const char* controller,
                                          uint64_t seed, const char* out_dir,
                                          char** report_out);

/* Head-to-head table of both controllers on one preset course: rows are
 * metrics, columns lqr / pid / ratio, averaged over the given seeds. */
ROTVLAB_API rotv_status rotv_compare(const rotv_config* config,
                                     const char* scenario,
                                     const uint64_t* seeds, size_t n_seeds,
                                     const char* out_dir, char** table_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ROTVLAB_H */
