// Copyright 2026 The rotvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rotvlab.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "rotv/config.hpp"
#include "rotv/harness.hpp"
#include "rotv/lincontrol.hpp"
#include "rotv/metrics.hpp"
#include "rotv/sim.hpp"
#include "rotv/types.hpp"

struct rotv_config {
  rotv::RunConfig cfg;
};

struct rotv_schedule {
  rotv::GainSchedule schedule;
};

struct rotv_trajectory {
  rotv::ScenarioRun run;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
rotv_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ROTV_OK;
  } catch (const rotv::DivergedError& e) {
    g_last_error = e.what();
    return ROTV_ERR_DIVERGED;
  } catch (const rotv::SynthesisError& e) {
    g_last_error = e.what();
    return ROTV_ERR_SYNTHESIS;
  } catch (const rotv::IoError& e) {
    g_last_error = e.what();
    return ROTV_ERR_IO;
  } catch (const rotv::ConfigError& e) {
    g_last_error = e.what();
    return ROTV_ERR_CONFIG;
  } catch (const rotv::ParamError& e) {
    g_last_error = e.what();
    return ROTV_ERR_ARGUMENT;
  } catch (const rotv::DomainError& e) {
    g_last_error = e.what();
    return ROTV_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = std::string("unexpected error: ") + e.what();
    return ROTV_ERR_ARGUMENT;
  }
}

rotv_status fail_argument(const char* message) {
  g_last_error = message;
  return ROTV_ERR_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void copy_row_major(const Eigen::Ref<const Eigen::MatrixXd>& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out[r * m.cols() + c] = m(r, c);
    }
  }
}

}  // namespace

extern "C" {

const char* rotv_version(void) { return "1.0.0"; }

const char* rotv_last_error(void) { return g_last_error.c_str(); }

void rotv_string_free(char* text) { delete[] text; }

/* --- configuration ------------------------------------------------------ */

rotv_status rotv_config_default(rotv_config** out) {
  if (!out) return fail_argument("out is null");
  return guarded([&] { *out = new rotv_config{rotv::RunConfig::defaults()}; });
}

rotv_status rotv_config_open(const char* path, rotv_config** out) {
  if (!path) return fail_argument("path is null");
  if (!out) return fail_argument("out is null");
  return guarded(
      [&] { *out = new rotv_config{rotv::RunConfig::from_file(path)}; });
}

rotv_status rotv_config_parse(const char* text, const char* origin,
                              rotv_config** out) {
  if (!text) return fail_argument("text is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] {
    *out = new rotv_config{rotv::RunConfig::from_string(
        text, origin ? origin : "<string>")};
  });
}

void rotv_config_free(rotv_config* config) { delete config; }

/* --- linear models and gain schedules ------------------------------------ */

rotv_status rotv_linearize(const rotv_config* config, double surge, double* a,
                           double* b) {
  if (!config) return fail_argument("config is null");
  if (!a || !b) return fail_argument("output matrix is null");
  return guarded([&] {
    const rotv::StateSpace ss = rotv::linearize(surge, config->cfg.vehicle);
    copy_row_major(ss.a, a);
    copy_row_major(ss.b, b);
  });
}

rotv_status rotv_schedule_build(const rotv_config* config,
                                rotv_schedule** out) {
  if (!config) return fail_argument("config is null");
  if (!out) return fail_argument("out is null");
  return guarded(
      [&] { *out = new rotv_schedule{rotv::make_schedule(config->cfg)}; });
}

rotv_status rotv_schedule_build_speeds(const rotv_config* config,
                                       const double* speeds, size_t n_speeds,
                                       rotv_schedule** out) {
  if (!config) return fail_argument("config is null");
  if (!speeds || n_speeds == 0) return fail_argument("speeds list is empty");
  if (!out) return fail_argument("out is null");
  return guarded([&] {
    const std::vector<double> speed_list(speeds, speeds + n_speeds);
    *out = new rotv_schedule{rotv::build_gain_schedule(
        speed_list, config->cfg.weights, config->cfg.vehicle)};
  });
}

rotv_status rotv_schedule_size(const rotv_schedule* schedule, size_t* out) {
  if (!schedule) return fail_argument("schedule is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] { *out = schedule->schedule.entries.size(); });
}

rotv_status rotv_schedule_entry(const rotv_schedule* schedule, size_t index,
                                double* surge, double* gain) {
  if (!schedule) return fail_argument("schedule is null");
  if (!surge || !gain) return fail_argument("output is null");
  if (index >= schedule->schedule.entries.size()) {
    return fail_argument("schedule index out of range");
  }
  return guarded([&] {
    const rotv::GainSchedule::Entry& e = schedule->schedule.entries[index];
    *surge = e.surge;
    copy_row_major(e.gain, gain);
  });
}

rotv_status rotv_schedule_gain_at(const rotv_schedule* schedule, double surge,
                                  double* gain) {
  if (!schedule) return fail_argument("schedule is null");
  if (!gain) return fail_argument("gain is null");
  return guarded(
      [&] { copy_row_major(schedule->schedule.gain_at(surge), gain); });
}

rotv_status rotv_schedule_warning_count(const rotv_schedule* schedule,
                                        size_t* out) {
  if (!schedule) return fail_argument("schedule is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] { *out = schedule->schedule.warnings.size(); });
}

rotv_status rotv_schedule_warning(const rotv_schedule* schedule, size_t index,
                                  char** out) {
  if (!schedule) return fail_argument("schedule is null");
  if (!out) return fail_argument("out is null");
  if (index >= schedule->schedule.warnings.size()) {
    return fail_argument("warning index out of range");
  }
  return guarded(
      [&] { *out = dup_string(schedule->schedule.warnings[index]); });
}

void rotv_schedule_free(rotv_schedule* schedule) { delete schedule; }

/* --- closed-loop simulation ---------------------------------------------- */

rotv_status rotv_simulate(const rotv_config* config, const char* scenario,
                          const char* controller, uint64_t seed,
                          rotv_trajectory** out) {
  if (!config) return fail_argument("config is null");
  if (!scenario) return fail_argument("scenario is null");
  if (!controller) return fail_argument("controller is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] {
    rotv::ScenarioRun run =
        rotv::run_scenario(scenario, rotv::controller_by_name(controller),
                           config->cfg, seed, /*out_dir=*/"");
    *out = new rotv_trajectory{std::move(run)};
  });
}

rotv_status rotv_trajectory_rows(const rotv_trajectory* trajectory,
                                 size_t* out) {
  if (!trajectory) return fail_argument("trajectory is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] { *out = trajectory->run.trajectory.rows.size(); });
}

const char* rotv_trajectory_header(void) {
  return "t,x,z,z_ref,w,phi,p,theta,q,u1,u2,u3,u1_cmd,u2_cmd,u3_cmd,"
         "d_heave,d_roll,d_pitch,surge";
}

rotv_status rotv_trajectory_cell(const rotv_trajectory* trajectory, size_t row,
                                 size_t col, double* out) {
  if (!trajectory) return fail_argument("trajectory is null");
  if (!out) return fail_argument("out is null");
  const auto& rows = trajectory->run.trajectory.rows;
  if (row >= rows.size()) return fail_argument("row index out of range");
  if (col >= ROTV_TRAJECTORY_COLS) {
    return fail_argument("column index out of range");
  }
  const rotv::TrajectoryRow& r = rows[row];
  const double cells[ROTV_TRAJECTORY_COLS] = {
      r.t,  r.x,  r.z,      r.z_ref,  r.w,      r.phi,     r.p,
      r.theta, r.q, r.u1,   r.u2,     r.u3,     r.u1_cmd,  r.u2_cmd,
      r.u3_cmd, r.d_heave,  r.d_roll, r.d_pitch, r.surge};
  *out = cells[col];
  g_last_error.clear();
  return ROTV_OK;
}

rotv_status rotv_trajectory_to_csv(const rotv_trajectory* trajectory,
                                   char** out) {
  if (!trajectory) return fail_argument("trajectory is null");
  if (!out) return fail_argument("out is null");
  return guarded(
      [&] { *out = dup_string(trajectory->run.trajectory.to_csv()); });
}

rotv_status rotv_trajectory_write_csv(const rotv_trajectory* trajectory,
                                      const char* path) {
  if (!trajectory) return fail_argument("trajectory is null");
  if (!path) return fail_argument("path is null");
  return guarded([&] { trajectory->run.trajectory.write_csv(path); });
}

rotv_status rotv_trajectory_metrics_report(const rotv_trajectory* trajectory,
                                           char** out) {
  if (!trajectory) return fail_argument("trajectory is null");
  if (!out) return fail_argument("out is null");
  return guarded([&] { *out = dup_string(trajectory->run.report); });
}

void rotv_trajectory_free(rotv_trajectory* trajectory) { delete trajectory; }

/* --- one-call drivers ----------------------------------------------------- */

rotv_status rotv_run_scenario(const rotv_config* config, const char* scenario,
                              const char* controller, uint64_t seed,
                              const char* out_dir, char** report_out) {
  if (!config) return fail_argument("config is null");
  if (!scenario) return fail_argument("scenario is null");
  if (!controller) return fail_argument("controller is null");
  return guarded([&] {
    const rotv::ScenarioRun run = rotv::run_scenario(
        scenario, rotv::controller_by_name(controller), config->cfg, seed,
        out_dir ? out_dir : "");
    if (report_out) *report_out = dup_string(run.report);
  });
}

rotv_status rotv_compare(const rotv_config* config, const char* scenario,
                         const uint64_t* seeds, size_t n_seeds,
                         const char* out_dir, char** table_out) {
  if (!config) return fail_argument("config is null");
  if (!scenario) return fail_argument("scenario is null");
  if (!seeds && n_seeds > 0) return fail_argument("seeds is null");
  if (!table_out) return fail_argument("table_out is null");
  return guarded([&] {
    const std::vector<std::uint64_t> seed_list(seeds, seeds + n_seeds);
    *table_out = dup_string(rotv::compare_controllers(
        config->cfg, scenario, seed_list, out_dir ? out_dir : ""));
  });
}

} /* extern "C" */
