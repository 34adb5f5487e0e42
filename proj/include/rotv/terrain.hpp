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

#ifndef ROTV_TERRAIN_HPP
#define ROTV_TERRAIN_HPP

#include <utility>
#include <vector>

#include "rotv/types.hpp"

namespace rotv {

// One seabed feature.  Elevation is geodetic (z up, negative underwater):
//  - Flat: `length` meters; `value` sets the elevation, or NaN to continue at
//    the current one (required on the first segment).
//  - Slope: `length` meters at grade `value` (elevation change per meter).
//  - LedgeDown / LedgeUp: instantaneous elevation drop/rise of `value` m.
struct SeabedSegment {
  enum class Kind { Flat, Slope, LedgeDown, LedgeUp };
  Kind kind = Kind::Flat;
  double length = 0.0;
  double value = 0.0;
};

// Piecewise-linear seabed elevation over along-track distance, with
// discontinuities at ledges (right-continuous there).  Beyond either end the
// elevation continues at the boundary value.
class SeabedProfile {
 public:
  SeabedProfile() = default;
  static SeabedProfile from_segments(const std::vector<SeabedSegment>& segments);

  double elevation(double x) const;
  double total_length() const;

  // Along-track ranges of the Flat segments, for steady-state windows.
  const std::vector<std::pair<double, double>>& flat_windows() const {
    return flats_;
  }
  // (position, elevation jump) of each ledge; jump is negative for a drop.
  const std::vector<std::pair<double, double>>& ledges() const {
    return ledges_;
  }

 private:
  struct Piece {
    double x0 = 0.0, x1 = 0.0;  // along-track range
    double e0 = 0.0, e1 = 0.0;  // elevation at the endpoints
  };
  std::vector<Piece> pieces_;
  std::vector<std::pair<double, double>> flats_;
  std::vector<std::pair<double, double>> ledges_;
};

// Depth the vehicle should hold at x: the seabed depth minus the sonar
// standoff, in NED depth (positive down).
double depth_reference(const SeabedProfile& profile, double x,
                       double target_altitude);

}  // namespace rotv

#endif  // ROTV_TERRAIN_HPP
