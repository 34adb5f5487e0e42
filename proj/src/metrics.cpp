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

#include "rotv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

namespace rotv {
namespace {

constexpr double kSettlingBandFraction = 0.02;
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

struct StepEvent {
  std::size_t index;       // first row at/after the step
  double magnitude = 0.0;  // signed z_ref jump
};

std::string format_line(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

double Metrics::worst_steady_state_error() const {
  double worst = 0.0;
  for (const FlatWindowMetric& w : flat_windows) {
    worst = std::max(worst, w.steady_state_error);
  }
  return worst;
}

double Metrics::worst_settling_time() const {
  double worst = 0.0;
  for (const StepMetric& s : steps) {
    if (!s.settled) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, s.settling_time);
  }
  return worst;
}

double Metrics::max_overshoot() const {
  double worst = 0.0;
  for (const StepMetric& s : steps) worst = std::max(worst, s.overshoot);
  return worst;
}

Metrics compute_metrics(const Trajectory& trajectory,
                        const Scenario& scenario) {
  Metrics m;
  const auto& rows = trajectory.rows;
  if (rows.empty()) {
    throw ParamError("cannot score an empty trajectory");
  }

  // Row range inside the along-track metrics window.
  std::size_t begin = 0;
  while (begin < rows.size() && rows[begin].x < scenario.metrics_min_x) {
    ++begin;
  }
  std::size_t end = begin;
  while (end < rows.size() && rows[end].x <= scenario.metrics_max_x) ++end;
  if (begin >= end) return m;

  const double dt = 1.0 / trajectory.physics_hz;
  double effort_sq = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const TrajectoryRow& r = rows[i];
    m.max_abs_depth_error = std::max(m.max_abs_depth_error,
                                     std::abs(r.z - r.z_ref));
    m.max_abs_roll = std::max(m.max_abs_roll, std::abs(r.phi));
    m.max_abs_pitch = std::max(m.max_abs_pitch, std::abs(r.theta));
    m.max_abs_deflection[0] = std::max(m.max_abs_deflection[0], std::abs(r.u1));
    m.max_abs_deflection[1] = std::max(m.max_abs_deflection[1], std::abs(r.u2));
    m.max_abs_deflection[2] = std::max(m.max_abs_deflection[2], std::abs(r.u3));
    if (i > begin) {
      const TrajectoryRow& prev = rows[i - 1];
      const double s1 = (r.u1 - prev.u1) / dt;
      const double s2 = (r.u2 - prev.u2) / dt;
      const double s3 = (r.u3 - prev.u3) / dt;
      effort_sq += (s1 * s1 + s2 * s2 + s3 * s3) * dt;
    }
  }
  m.control_effort = std::sqrt(effort_sq);

  // Steady-state depth tracking per flat stretch: mean |error| over the last
  // half of the rows inside the stretch.
  for (const auto& [x0, x1] : scenario.profile.flat_windows()) {
    const double w0 = std::max(x0, scenario.metrics_min_x);
    const double w1 = std::min(x1, scenario.metrics_max_x);
    if (!(w0 < w1)) continue;
    std::size_t first = begin;
    while (first < end && rows[first].x < w0) ++first;
    std::size_t last = first;
    while (last < end && rows[last].x < w1) ++last;
    if (last - first < 4) continue;
    const std::size_t half = first + (last - first) / 2;
    double acc = 0.0;
    for (std::size_t i = half; i < last; ++i) {
      acc += std::abs(rows[i].z - rows[i].z_ref);
    }
    FlatWindowMetric fw;
    fw.x0 = x0;
    fw.x1 = x1;
    fw.steady_state_error = acc / static_cast<double>(last - half);
    m.flat_windows.push_back(fw);
  }

  // Reference steps: seabed ledges (crossed at some x) plus commanded steps
  // (fired at some t).
  std::vector<StepEvent> events;
  for (const auto& [x_pos, elev_jump] : scenario.profile.ledges()) {
    std::size_t idx = begin;
    while (idx < end && rows[idx].x < x_pos) ++idx;
    if (idx <= begin || idx >= end) continue;  // outside the metrics window
    events.push_back({idx, -elev_jump});
  }
  for (const ReferenceStep& step : scenario.ref_steps) {
    std::size_t idx = begin;
    while (idx < end && rows[idx].t < step.time) ++idx;
    if (idx <= begin || idx >= end) continue;
    events.push_back({idx, step.delta});
  }
  std::sort(events.begin(), events.end(),
            [](const StepEvent& a, const StepEvent& b) {
              return a.index < b.index;
            });

  for (std::size_t e = 0; e < events.size(); ++e) {
    const StepEvent& ev = events[e];
    const std::size_t stop =
        (e + 1 < events.size()) ? events[e + 1].index : end;
    const double band = kSettlingBandFraction * std::abs(ev.magnitude);
    const double direction = ev.magnitude >= 0.0 ? 1.0 : -1.0;

    StepMetric sm;
    sm.time = rows[ev.index].t;
    sm.magnitude = ev.magnitude;
    std::size_t last_violation = ev.index;  // the step row itself violates
    bool any_violation = false;
    for (std::size_t i = ev.index; i < stop; ++i) {
      const double err = rows[i].z - rows[i].z_ref;
      sm.overshoot = std::max(sm.overshoot, direction * err);
      sm.max_deflection =
          std::max({sm.max_deflection, std::abs(rows[i].u1),
                    std::abs(rows[i].u2), std::abs(rows[i].u3)});
      if (std::abs(err) > band) {
        last_violation = i;
        any_violation = true;
      }
    }
    if (!any_violation) {
      sm.settled = true;
      sm.settling_time = 0.0;
    } else if (last_violation + 1 < stop) {
      sm.settled = true;
      sm.settling_time = rows[last_violation + 1].t - sm.time;
    } else {
      sm.settled = false;
      sm.settling_time = std::numeric_limits<double>::infinity();
    }
    m.steps.push_back(sm);
  }
  return m;
}

std::string metrics_report(const Metrics& m, const Scenario& scenario,
                           const std::string& controller_name,
                           std::uint64_t seed) {
  std::string out;
  out += format_line("scenario: %s\n", scenario.name.c_str());
  out += format_line("controller: %s\n", controller_name.c_str());
  out += format_line("seed: %llu\n", static_cast<unsigned long long>(seed));
  out += format_line("settling band: %.0f%% of step magnitude\n",
                     kSettlingBandFraction * 100.0);
  out += format_line("max |depth error| [m]: %.6g\n", m.max_abs_depth_error);
  out += format_line("max |roll| [deg]: %.6g\n", m.max_abs_roll * kRadToDeg);
  out += format_line("max |pitch| [deg]: %.6g\n", m.max_abs_pitch * kRadToDeg);
  out += format_line("max |u1| [deg]: %.6g\n",
                     m.max_abs_deflection[0] * kRadToDeg);
  out += format_line("max |u2| [deg]: %.6g\n",
                     m.max_abs_deflection[1] * kRadToDeg);
  out += format_line("max |u3| [deg]: %.6g\n",
                     m.max_abs_deflection[2] * kRadToDeg);
  out += format_line("control effort [rad/sqrt(s)]: %.6g\n", m.control_effort);
  for (const FlatWindowMetric& w : m.flat_windows) {
    out += format_line(
        "flat %.6g-%.6g m: steady-state |depth error| [m]: %.6g\n", w.x0, w.x1,
        w.steady_state_error);
  }
  for (const StepMetric& s : m.steps) {
    if (s.settled) {
      out += format_line(
          "step at t=%.6g s (%+.3g m): overshoot %.6g m, settling %.6g s, "
          "max deflection %.6g deg\n",
          s.time, s.magnitude, s.overshoot, s.settling_time,
          s.max_deflection * kRadToDeg);
    } else {
      out += format_line(
          "step at t=%.6g s (%+.3g m): overshoot %.6g m, did not settle, "
          "max deflection %.6g deg\n",
          s.time, s.magnitude, s.overshoot, s.max_deflection * kRadToDeg);
    }
  }
  return out;
}

}  // namespace rotv
