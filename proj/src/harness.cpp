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

#include "rotv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <utility>

namespace rotv {
namespace {

constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

// Applies the config's optional scenario overrides on top of a preset.
void apply_overrides(Scenario& sc, const RunConfig& config) {
  if (config.profile_override) sc.profile = *config.profile_override;
  if (config.course_length) sc.course_length = *config.course_length;
  if (config.target_surge) sc.target_surge = *config.target_surge;
  if (config.target_altitude) sc.target_altitude = *config.target_altitude;
  if (config.ramp_ticks) sc.ramp_ticks = *config.ramp_ticks;
  if (config.physics_hz) sc.physics_hz = *config.physics_hz;
  if (config.control_hz) sc.control_hz = *config.control_hz;
}

std::string format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

std::string controller_name(ControllerKind kind) {
  return kind == ControllerKind::kLqr ? "lqr" : "pid";
}

ControllerKind controller_by_name(const std::string& name) {
  if (name == "lqr") return ControllerKind::kLqr;
  if (name == "pid") return ControllerKind::kPid;
  throw ConfigError("unknown controller '" + name + "' (want lqr or pid)");
}

Scenario nominal_scenario(const RunConfig& config) {
  Scenario sc;
  sc.name = "nominal";
  sc.profile = parse_profile(
      "flat:20:-20, slope:20:0.1, flat:15, ledge_down:1, flat:15, ledge_up:1, "
      "flat:29");
  sc.course_length = 100.0;
  sc.target_surge = 5.0;
  sc.ramp_ticks = 200;
  sc.target_altitude = 3.0;
  sc.disturbance = config.disturbance;
  sc.disturbance.enabled = false;
  apply_overrides(sc, config);
  sc.controller_start_tick = sc.ramp_ticks;
  return sc;
}

Scenario disturbed_scenario(const RunConfig& config) {
  Scenario sc;
  sc.name = "disturbed";
  sc.profile = parse_profile(
      "flat:40:-20, slope:20:0.1, flat:20, ledge_down:1, flat:20, ledge_up:1, "
      "flat:50");
  sc.course_length = 150.0;
  sc.target_surge = 5.0;
  sc.ramp_ticks = 200;
  sc.target_altitude = 3.0;
  sc.disturbance = config.disturbance;
  sc.disturbance.enabled = true;
  // Skip the start-up transient and the course boundary when scoring.
  sc.metrics_min_x = 52.0;
  sc.metrics_max_x = 148.0;
  apply_overrides(sc, config);
  sc.controller_start_tick = sc.ramp_ticks;
  return sc;
}

Scenario gainsched_scenario(const RunConfig& config) {
  Scenario sc;
  sc.name = "gainsched";
  sc.profile = parse_profile("flat:500:-20");
  sc.course_length = 450.0;
  sc.target_surge = 5.0;
  sc.ramp_ticks = 24000;  // 0 -> 5 m/s over 120 s at the default physics rate
  sc.target_altitude = 3.0;
  sc.disturbance = config.disturbance;
  sc.disturbance.enabled = false;
  // Identical depth steps landing at 1, 2, 3, 4 and 5 m/s along the ramp.
  sc.ref_steps = {{24.0, -0.5}, {48.0, -0.5}, {72.0, -0.5},
                  {96.0, -0.5}, {124.0, -0.5}};
  apply_overrides(sc, config);
  sc.controller_start_tick = 200;
  return sc;
}

Scenario tuning_scenario(const RunConfig& config) {
  Scenario sc;
  sc.name = "tuning";
  sc.profile = parse_profile("flat:200:-20");
  sc.course_length = 100.0;
  sc.target_surge = 5.0;
  sc.ramp_ticks = 200;
  sc.target_altitude = 3.0;
  sc.disturbance = config.disturbance;
  sc.disturbance.enabled = false;
  sc.ref_steps = {{4.0, -0.5}};
  apply_overrides(sc, config);
  sc.controller_start_tick = sc.ramp_ticks;
  return sc;
}

Scenario scenario_by_name(const std::string& name, const RunConfig& config) {
  if (name == "nominal") return nominal_scenario(config);
  if (name == "disturbed") return disturbed_scenario(config);
  if (name == "gainsched") return gainsched_scenario(config);
  if (name == "tuning") return tuning_scenario(config);
  throw ConfigError("unknown scenario '" + name +
                    "' (want nominal, disturbed, gainsched or tuning)");
}

GainSchedule make_schedule(const RunConfig& config) {
  return build_gain_schedule(config.schedule_speeds, config.weights,
                             config.vehicle);
}

ControllerVariant make_controller(ControllerKind kind, const RunConfig& config,
                                  const GainSchedule& schedule,
                                  const PidSettings& pid) {
  if (kind == ControllerKind::kLqr) {
    return LqrController(schedule, config.lqr);
  }
  return PidController(pid);
}

namespace {

// Settling time of the single tuning step; infinite when it never settles or
// the run diverges.
double tuning_settling(const Scenario& tune, const RunConfig& config,
                       ControllerVariant controller) {
  Trajectory traj;
  try {
    traj = simulate(tune, config.vehicle, config.servo, std::move(controller),
                    /*seed=*/0);
  } catch (const DivergedError&) {
    return std::numeric_limits<double>::infinity();
  }
  const Metrics m = compute_metrics(traj, tune);
  if (m.steps.empty()) {
    throw SynthesisError("tuning course produced no reference step");
  }
  const StepMetric& step = m.steps.front();
  return step.settled ? step.settling_time
                      : std::numeric_limits<double>::infinity();
}

PidSettings scaled_depth_gains(const PidSettings& base, double scale) {
  PidSettings out = base;
  out.depth.kp *= scale;
  out.depth.ki *= scale;
  out.depth.kd *= scale;
  return out;
}

}  // namespace

PidSettings autotune_pid(const RunConfig& config,
                         const GainSchedule& schedule) {
  const Scenario tune = tuning_scenario(config);
  const double t_ref =
      tuning_settling(tune, config, LqrController(schedule, config.lqr));
  if (!std::isfinite(t_ref) || t_ref <= 0.0) {
    throw SynthesisError(
        "reference controller never settled on the tuning step");
  }

  auto mismatch = [&](double scale) {
    const double t = tuning_settling(
        tune, config, PidController(scaled_depth_gains(config.pid, scale)));
    return std::abs(t - t_ref);
  };

  // Coarse geometric sweep over the depth-gain factor, then two zooms around
  // the best candidate.  Settling time is not monotone in the factor (fast
  // gains start ringing), so a scan beats bisection here.
  double best_scale = 1.0;
  double best_err = std::numeric_limits<double>::infinity();
  auto scan = [&](double lo, double hi, int points) {
    for (int i = 0; i < points; ++i) {
      const double s =
          lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
      const double err = mismatch(s);
      if (err < best_err) {
        best_err = err;
        best_scale = s;
      }
    }
  };
  scan(0.2, 8.0, 17);
  scan(best_scale / 1.6, best_scale * 1.6, 9);
  scan(best_scale / 1.15, best_scale * 1.15, 9);

  if (best_err > 0.05 * t_ref) {
    throw SynthesisError(format(
        "depth-gain tuning failed: best settling mismatch %.3f s exceeds "
        "5%% of the %.3f s reference",
        best_err, t_ref));
  }
  return scaled_depth_gains(config.pid, best_scale);
}

PidSettings resolve_pid(const RunConfig& config, const GainSchedule& schedule) {
  if (config.pid_gains_supplied) return config.pid;
  return autotune_pid(config, schedule);
}

namespace {

ScenarioRun run_built(const Scenario& scenario, ControllerKind kind,
                      const RunConfig& config, const GainSchedule& schedule,
                      const PidSettings& pid, std::uint64_t seed,
                      const std::string& out_dir) {
  ScenarioRun run;
  run.scenario = scenario;
  run.trajectory =
      simulate(scenario, config.vehicle, config.servo,
               make_controller(kind, config, schedule, pid), seed);
  run.metrics = compute_metrics(run.trajectory, scenario);
  run.report =
      metrics_report(run.metrics, scenario, controller_name(kind), seed);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::string base = scenario.name + "_" + controller_name(kind);
    if (scenario.disturbance.enabled) {
      base += "_seed" + std::to_string(seed);
    }
    run.csv_path = out_dir + "/" + base + ".csv";
    run.report_path = out_dir + "/" + base + ".txt";
    run.trajectory.write_csv(run.csv_path);
    std::ofstream report_file(run.report_path, std::ios::binary);
    if (!report_file) {
      throw IoError("cannot open report file: " + run.report_path);
    }
    report_file << run.report;
  }
  return run;
}

}  // namespace

ScenarioRun run_scenario(const std::string& scenario_name, ControllerKind kind,
                         const RunConfig& config, std::uint64_t seed,
                         const std::string& out_dir) {
  const Scenario scenario = scenario_by_name(scenario_name, config);
  GainSchedule schedule;
  if (kind == ControllerKind::kLqr || !config.pid_gains_supplied) {
    schedule = make_schedule(config);
  }
  const PidSettings pid = kind == ControllerKind::kPid
                              ? resolve_pid(config, schedule)
                              : config.pid;
  return run_built(scenario, kind, config, schedule, pid, seed, out_dir);
}

namespace {

// Seed-averaged scalar metrics of one controller on one course.
struct MetricColumn {
  double steady_state = 0.0;
  double settling = 0.0;  // infinity when any seed never settled
  double overshoot = 0.0;
  double max_roll = 0.0;
  double max_pitch = 0.0;
  double max_u[3] = {0.0, 0.0, 0.0};
  double effort = 0.0;
};

MetricColumn average_runs(const Scenario& scenario, ControllerKind kind,
                          const RunConfig& config,
                          const GainSchedule& schedule, const PidSettings& pid,
                          const std::vector<std::uint64_t>& seeds,
                          const std::string& out_dir) {
  MetricColumn col;
  for (const std::uint64_t seed : seeds) {
    const ScenarioRun run =
        run_built(scenario, kind, config, schedule, pid, seed, out_dir);
    const Metrics& m = run.metrics;
    col.steady_state += m.worst_steady_state_error();
    col.settling += m.worst_settling_time();  // inf is absorbing, as intended
    col.overshoot += m.max_overshoot();
    col.max_roll += m.max_abs_roll;
    col.max_pitch += m.max_abs_pitch;
    for (int i = 0; i < 3; ++i) col.max_u[i] += m.max_abs_deflection[i];
    col.effort += m.control_effort;
  }
  const double n = static_cast<double>(seeds.size());
  col.steady_state /= n;
  col.settling /= n;
  col.overshoot /= n;
  col.max_roll /= n;
  col.max_pitch /= n;
  for (double& u : col.max_u) u /= n;
  col.effort /= n;
  return col;
}

std::string table_row(const char* label, double lqr, double pid,
                      const char* value_fmt) {
  const std::string ratio =
      lqr != 0.0 && std::isfinite(lqr) && std::isfinite(pid)
          ? format("%11.3f", pid / lqr)
          : std::string("          -");
  auto cell = [&](double v) {
    return std::isfinite(v) ? format(value_fmt, v) : std::string("      never");
  };
  return format("  %-34s %s %s %s\n", label, cell(lqr).c_str(),
                cell(pid).c_str(), ratio.c_str());
}

}  // namespace

std::string compare_controllers(const RunConfig& config,
                                const std::string& scenario_name,
                                const std::vector<std::uint64_t>& seeds,
                                const std::string& out_dir) {
  if (seeds.empty()) {
    throw ConfigError("controller comparison needs at least one seed");
  }
  const GainSchedule schedule = make_schedule(config);
  const PidSettings pid = resolve_pid(config, schedule);
  const Scenario scenario = scenario_by_name(scenario_name, config);

  const MetricColumn lqr = average_runs(scenario, ControllerKind::kLqr, config,
                                        schedule, pid, seeds, out_dir);
  const MetricColumn pidc = average_runs(scenario, ControllerKind::kPid,
                                         config, schedule, pid, seeds,
                                         out_dir);

  std::string seed_list;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i > 0) seed_list += ",";
    seed_list += std::to_string(seeds[i]);
  }

  std::string out;
  out += format("controller comparison: scenario %s, seed(s) %s\n",
                scenario.name.c_str(), seed_list.c_str());
  if (seeds.size() > 1) out += "values are means over the seeds\n";
  out += "\n";
  out += format("  %-34s %11s %11s %11s\n", "metric", "lqr", "pid", "pid/lqr");
  out += table_row("worst steady-state error [m]", lqr.steady_state,
                   pidc.steady_state, "%11.4f");
  out += table_row("worst settling time [s]", lqr.settling, pidc.settling,
                   "%11.3f");
  out += table_row("max overshoot [m]", lqr.overshoot, pidc.overshoot,
                   "%11.4f");
  out += table_row("max |roll| [deg]", lqr.max_roll * kRadToDeg,
                   pidc.max_roll * kRadToDeg, "%11.3f");
  out += table_row("max |pitch| [deg]", lqr.max_pitch * kRadToDeg,
                   pidc.max_pitch * kRadToDeg, "%11.3f");
  out += table_row("max |u1| [deg]", lqr.max_u[0] * kRadToDeg,
                   pidc.max_u[0] * kRadToDeg, "%11.3f");
  out += table_row("max |u2| [deg]", lqr.max_u[1] * kRadToDeg,
                   pidc.max_u[1] * kRadToDeg, "%11.3f");
  out += table_row("max |u3| [deg]", lqr.max_u[2] * kRadToDeg,
                   pidc.max_u[2] * kRadToDeg, "%11.3f");
  out += table_row("control effort [rad/sqrt(s)]", lqr.effort, pidc.effort,
                   "%11.4f");
  out += format("\nactuation ratio max|u3|_pid / max|u3|_lqr = %.3f\n",
                lqr.max_u[2] > 0.0
                    ? pidc.max_u[2] / lqr.max_u[2]
                    : std::numeric_limits<double>::infinity());
  return out;
}

}  // namespace rotv
