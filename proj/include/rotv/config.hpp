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

#ifndef ROTV_CONFIG_HPP
#define ROTV_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotv/actuators.hpp"
#include "rotv/controllers.hpp"
#include "rotv/lincontrol.hpp"
#include "rotv/params.hpp"
#include "rotv/sim.hpp"

namespace rotv {

// `key = value` text with '#' comments.  Raises ConfigError with the
// offending line number on malformed lines, bad literals or unknown keys.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_string(const std::string& text,
                                   const std::string& origin);

  bool has(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key,
                               std::vector<double> fallback) const;
  // "x0:r0, x1:r1, ..." pair list.
  std::vector<std::pair<double, double>> get_pair_list(
      const std::string& key,
      std::vector<std::pair<double, double>> fallback) const;
  std::string get_string(const std::string& key, std::string fallback) const;

  // Throws ConfigError naming the first key never queried by any getter.
  void reject_unknown_keys() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  [[noreturn]] void fail(const std::string& key, const std::string& why) const;

  std::string origin_;
  std::map<std::string, Entry> entries_;
  mutable std::map<std::string, bool> consumed_;
};

// Everything a run needs: plant, actuators, both controllers, schedule
// speeds, disturbance shape and optional scenario overrides.
struct RunConfig {
  VehicleParams vehicle;
  ServoParams servo;
  LqrWeights weights;
  LqrSettings lqr;
  PidSettings pid;
  bool pid_gains_supplied = false;  // true when the file pins PID gains
  std::vector<double> schedule_speeds = {1.0, 2.0, 3.0, 4.0, 5.0};
  DisturbanceConfig disturbance;  // sigma/scale; enabling is per scenario

  std::optional<SeabedProfile> profile_override;
  std::optional<double> course_length;
  std::optional<double> target_surge;
  std::optional<double> target_altitude;
  std::optional<long> ramp_ticks;
  std::optional<int> physics_hz;
  std::optional<int> control_hz;

  static RunConfig from_file(const std::string& path);
  static RunConfig from_string(const std::string& text,
                               const std::string& origin);
  static RunConfig defaults();
};

// Parses "flat:20:-20, slope:20:0.1, ledge_down:1, ..." into a profile.
SeabedProfile parse_profile(const std::string& text);

}  // namespace rotv

#endif  // ROTV_CONFIG_HPP
