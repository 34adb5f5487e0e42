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

#include "rotv/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace rotv {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

double parse_double(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(context + ": not a number: '" + text + "'");
  }
}

}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_string(buf.str(), path);
}

KeyValueFile KeyValueFile::parse_string(const std::string& text,
                                        const std::string& origin) {
  KeyValueFile kv;
  kv.origin_ = origin;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": empty key");
    }
    kv.entries_[key] = Entry{value, line_no};
  }
  return kv;
}

void KeyValueFile::fail(const std::string& key, const std::string& why) const {
  const auto it = entries_.find(key);
  const std::string where =
      it == entries_.end()
          ? origin_
          : origin_ + ":" + std::to_string(it->second.line);
  throw ConfigError(where + ": key '" + key + "' " + why);
}

bool KeyValueFile::has(const std::string& key) const {
  consumed_[key] = true;
  return entries_.count(key) > 0;
}

double KeyValueFile::get_double(const std::string& key,
                                double fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  try {
    return parse_double(it->second.value, key);
  } catch (const ConfigError&) {
    fail(key, "must be a number, got '" + it->second.value + "'");
  }
}

long KeyValueFile::get_long(const std::string& key, long fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second.value;
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(key, "must be an integer, got '" + v + "'");
  }
  return out;
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& v = it->second.value;
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  fail(key, "must be a boolean (true/false/on/off), got '" + v + "'");
}

std::vector<double> KeyValueFile::get_list(
    const std::string& key, std::vector<double> fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<double> out;
  for (const std::string& part : split(it->second.value, ',')) {
    if (part.empty()) fail(key, "has an empty list element");
    try {
      out.push_back(parse_double(part, key));
    } catch (const ConfigError&) {
      fail(key, "has a non-numeric element '" + part + "'");
    }
  }
  return out;
}

std::vector<std::pair<double, double>> KeyValueFile::get_pair_list(
    const std::string& key,
    std::vector<std::pair<double, double>> fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<std::pair<double, double>> out;
  for (const std::string& part : split(it->second.value, ',')) {
    const std::vector<std::string> halves = split(part, ':');
    if (halves.size() != 2) {
      fail(key, "expects 'x:value' pairs, got '" + part + "'");
    }
    try {
      out.emplace_back(parse_double(halves[0], key),
                       parse_double(halves[1], key));
    } catch (const ConfigError&) {
      fail(key, "has a non-numeric pair '" + part + "'");
    }
  }
  return out;
}

std::string KeyValueFile::get_string(const std::string& key,
                                     std::string fallback) const {
  consumed_[key] = true;
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return it->second.value;
}

void KeyValueFile::reject_unknown_keys() const {
  for (const auto& [key, entry] : entries_) {
    if (!consumed_.count(key)) {
      throw ConfigError(origin_ + ":" + std::to_string(entry.line) +
                        ": unknown key '" + key + "'");
    }
  }
}

SeabedProfile parse_profile(const std::string& text) {
  std::vector<SeabedSegment> segments;
  for (const std::string& part : split(text, ',')) {
    const std::vector<std::string> fields = split(part, ':');
    if (fields.empty() || fields[0].empty()) {
      throw ConfigError("profile: empty segment in '" + text + "'");
    }
    SeabedSegment seg;
    const std::string& kind = fields[0];
    if (kind == "flat") {
      seg.kind = SeabedSegment::Kind::Flat;
      if (fields.size() < 2 || fields.size() > 3) {
        throw ConfigError("profile: flat takes length[:elevation]");
      }
      seg.length = parse_double(fields[1], "profile flat length");
      seg.value = fields.size() == 3
                      ? parse_double(fields[2], "profile flat elevation")
                      : std::numeric_limits<double>::quiet_NaN();
    } else if (kind == "slope") {
      seg.kind = SeabedSegment::Kind::Slope;
      if (fields.size() != 3) {
        throw ConfigError("profile: slope takes length:grade");
      }
      seg.length = parse_double(fields[1], "profile slope length");
      seg.value = parse_double(fields[2], "profile slope grade");
    } else if (kind == "ledge_down" || kind == "ledge_up") {
      seg.kind = kind == "ledge_down" ? SeabedSegment::Kind::LedgeDown
                                      : SeabedSegment::Kind::LedgeUp;
      if (fields.size() != 2) {
        throw ConfigError("profile: " + kind + " takes a single size");
      }
      seg.value = parse_double(fields[1], "profile ledge size");
    } else {
      throw ConfigError("profile: unknown segment kind '" + kind + "'");
    }
    segments.push_back(seg);
  }
  return SeabedProfile::from_segments(segments);
}

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

PidGains gains_from_list(const KeyValueFile& kv, const std::string& key,
                         const PidGains& fallback) {
  if (!kv.has(key)) return fallback;
  const std::vector<double> v = kv.get_list(key, {});
  if (v.size() != 3) {
    throw ConfigError("key '" + key + "' needs exactly kp,ki,kd");
  }
  return PidGains{v[0], v[1], v[2]};
}

}  // namespace

RunConfig RunConfig::defaults() { return RunConfig{}; }

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return from_string(buf.str(), path);
}

RunConfig RunConfig::from_string(const std::string& text,
                                 const std::string& origin) {
  const KeyValueFile kv = KeyValueFile::parse_string(text, origin);
  RunConfig cfg;

  VehicleParams& vp = cfg.vehicle;
  vp.mass = kv.get_double("mass", vp.mass);
  vp.I_x = kv.get_double("I_x", vp.I_x);
  vp.I_y = kv.get_double("I_y", vp.I_y);
  vp.I_z = kv.get_double("I_z", vp.I_z);
  vp.I_xy = kv.get_double("I_xy", vp.I_xy);
  vp.I_xz = kv.get_double("I_xz", vp.I_xz);
  vp.I_yz = kv.get_double("I_yz", vp.I_yz);
  vp.body_length = kv.get_double("body_length", vp.body_length);
  vp.r_profile = kv.get_pair_list("r_profile", vp.r_profile);
  vp.fw_chord = kv.get_double("fw_chord", vp.fw_chord);
  vp.fw_span = kv.get_double("fw_span", vp.fw_span);
  vp.tw_chord = kv.get_double("tw_chord", vp.tw_chord);
  vp.tw_span = kv.get_double("tw_span", vp.tw_span);
  vp.k_trans_fw = kv.get_double("k_trans_fw", vp.k_trans_fw);
  vp.k_trans_tw = kv.get_double("k_trans_tw", vp.k_trans_tw);
  vp.k_rot_fw = kv.get_double("k_rot_fw", vp.k_rot_fw);
  vp.k_rot_tw = kv.get_double("k_rot_tw", vp.k_rot_tw);
  if (kv.has("wing_areas")) {
    const auto v = kv.get_list("wing_areas", {});
    if (v.size() != 4) throw ConfigError("wing_areas needs 4 values");
    std::copy(v.begin(), v.end(), vp.wing_areas.begin());
  }
  if (kv.has("moment_arms")) {
    const auto v = kv.get_list("moment_arms", {});
    if (v.size() != 4) throw ConfigError("moment_arms needs 4 values");
    std::copy(v.begin(), v.end(), vp.moment_arms.begin());
  }
  vp.flap_lateral_offset =
      kv.get_double("flap_lateral_offset", vp.flap_lateral_offset);
  vp.fluid_density = kv.get_double("fluid_density", vp.fluid_density);
  vp.frontal_area = kv.get_double("frontal_area", vp.frontal_area);
  vp.drag_coeff = kv.get_double("drag_coeff", vp.drag_coeff);
  vp.cable_arm = kv.get_double("cable_arm", vp.cable_arm);
  if (kv.has("damping_linear")) {
    const auto v = kv.get_list("damping_linear", {});
    if (v.size() != 3) throw ConfigError("damping_linear needs Z_w,K_p,M_q");
    vp.Z_w = v[0];
    vp.K_p = v[1];
    vp.M_q = v[2];
  }
  if (kv.has("damping_quadratic")) {
    const auto v = kv.get_list("damping_quadratic", {});
    if (v.size() != 3) {
      throw ConfigError("damping_quadratic needs Z_ww,K_pp,M_qq");
    }
    vp.Z_ww = v[0];
    vp.K_pp = v[1];
    vp.M_qq = v[2];
  }
  vp.lift_slope_per_degree =
      kv.get_bool("lift_slope_per_degree", vp.lift_slope_per_degree);
  vp.quadrature_panels = static_cast<int>(
      kv.get_long("quadrature_panels", vp.quadrature_panels));

  ServoParams& sv = cfg.servo;
  sv.time_constant = kv.get_double("servo.time_constant", sv.time_constant);
  sv.dead_zone = kv.get_double("servo.dead_zone", sv.dead_zone);
  sv.max_rate = kv.get_double("servo.max_rate", sv.max_rate);
  sv.deflection_limit =
      kv.get_double("servo.limit_deg", sv.deflection_limit / kDegToRad) *
      kDegToRad;
  sv.ideal = kv.get_bool("servo.ideal", sv.ideal);

  if (kv.has("lqr.Q")) {
    const auto v = kv.get_list("lqr.Q", {});
    if (v.size() != 6) throw ConfigError("lqr.Q needs 6 weights");
    for (int i = 0; i < 6; ++i) cfg.weights.q_diag(i) = v[i];
  }
  if (kv.has("lqr.R")) {
    const auto v = kv.get_list("lqr.R", {});
    if (v.size() != 3) throw ConfigError("lqr.R needs 3 weights");
    for (int i = 0; i < 3; ++i) cfg.weights.r_diag(i) = v[i];
  }
  cfg.lqr.ki_depth = kv.get_double("lqr.ki_depth", cfg.lqr.ki_depth);
  cfg.lqr.integrator_limit =
      kv.get_double("lqr.integrator_limit", cfg.lqr.integrator_limit);
  cfg.lqr.capture_band =
      kv.get_double("lqr.capture_band", cfg.lqr.capture_band);
  cfg.lqr.deflection_limit = sv.deflection_limit;

  const bool any_pid_gain =
      kv.has("pid.depth") || kv.has("pid.roll") || kv.has("pid.pitch");
  cfg.pid.depth = gains_from_list(kv, "pid.depth", cfg.pid.depth);
  cfg.pid.roll = gains_from_list(kv, "pid.roll", cfg.pid.roll);
  cfg.pid.pitch = gains_from_list(kv, "pid.pitch", cfg.pid.pitch);
  cfg.pid_gains_supplied = any_pid_gain;
  if (kv.has("pid.mixing")) {
    const auto v = kv.get_list("pid.mixing", {});
    if (v.size() != 9) throw ConfigError("pid.mixing needs 9 values");
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) cfg.pid.mixing(r, c) = v[r * 3 + c];
    }
  }
  cfg.pid.deriv_filter_tau =
      kv.get_double("pid.deriv_filter_tau", cfg.pid.deriv_filter_tau);
  cfg.pid.integrator_limit =
      kv.get_double("pid.integrator_limit", cfg.pid.integrator_limit);
  cfg.pid.capture_band =
      kv.get_double("pid.capture_band", cfg.pid.capture_band);
  cfg.pid.deflection_limit = sv.deflection_limit;

  const bool anti_windup = kv.get_bool("antiwindup", true);
  cfg.lqr.anti_windup = anti_windup;
  cfg.pid.anti_windup = anti_windup;

  cfg.schedule_speeds = kv.get_list("schedule_speeds", cfg.schedule_speeds);

  cfg.disturbance.sigma =
      kv.get_double("disturbance.sigma", cfg.disturbance.sigma);
  if (kv.has("disturbance.scale")) {
    const auto v = kv.get_list("disturbance.scale", {});
    if (v.size() != 6) throw ConfigError("disturbance.scale needs 6 values");
    std::copy(v.begin(), v.end(), cfg.disturbance.scale.begin());
  }

  if (kv.has("profile")) {
    cfg.profile_override = parse_profile(kv.get_string("profile", ""));
  }
  if (kv.has("course_length")) {
    cfg.course_length = kv.get_double("course_length", 0.0);
  }
  if (kv.has("target_surge")) {
    cfg.target_surge = kv.get_double("target_surge", 0.0);
  }
  if (kv.has("target_altitude")) {
    cfg.target_altitude = kv.get_double("target_altitude", 0.0);
  }
  if (kv.has("ramp_ticks")) {
    cfg.ramp_ticks = kv.get_long("ramp_ticks", 0);
  }
  if (kv.has("physics_hz")) {
    cfg.physics_hz = static_cast<int>(kv.get_long("physics_hz", 0));
  }
  if (kv.has("control_hz")) {
    cfg.control_hz = static_cast<int>(kv.get_long("control_hz", 0));
  }

  kv.reject_unknown_keys();
  validate(cfg.vehicle);
  validate(cfg.servo);
  return cfg;
}

}  // namespace rotv
