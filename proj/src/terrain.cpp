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

#include "rotv/terrain.hpp"

#include <cmath>
#include <limits>

namespace rotv {

SeabedProfile SeabedProfile::from_segments(
    const std::vector<SeabedSegment>& segments) {
  if (segments.empty()) {
    throw ConfigError("seabed profile needs at least one segment");
  }

  SeabedProfile profile;
  double x = 0.0;
  double elevation = std::numeric_limits<double>::quiet_NaN();
  for (const SeabedSegment& seg : segments) {
    switch (seg.kind) {
      case SeabedSegment::Kind::Flat: {
        if (!std::isnan(seg.value)) elevation = seg.value;
        if (std::isnan(elevation)) {
          throw ConfigError(
              "first flat segment must carry an explicit elevation");
        }
        if (!(seg.length > 0.0)) {
          throw ConfigError("flat segment length must be positive");
        }
        profile.pieces_.push_back({x, x + seg.length, elevation, elevation});
        profile.flats_.emplace_back(x, x + seg.length);
        x += seg.length;
        break;
      }
      case SeabedSegment::Kind::Slope: {
        if (std::isnan(elevation)) {
          throw ConfigError("slope cannot be the first profile segment");
        }
        if (!(seg.length > 0.0) || !std::isfinite(seg.value)) {
          throw ConfigError("slope needs a positive length and finite grade");
        }
        const double e1 = elevation + seg.value * seg.length;
        profile.pieces_.push_back({x, x + seg.length, elevation, e1});
        elevation = e1;
        x += seg.length;
        break;
      }
      case SeabedSegment::Kind::LedgeDown:
      case SeabedSegment::Kind::LedgeUp: {
        if (std::isnan(elevation)) {
          throw ConfigError("ledge cannot be the first profile segment");
        }
        if (!(seg.value > 0.0)) {
          throw ConfigError("ledge size must be positive");
        }
        const double jump =
            seg.kind == SeabedSegment::Kind::LedgeDown ? -seg.value : seg.value;
        elevation += jump;
        profile.ledges_.emplace_back(x, jump);
        break;
      }
    }
  }
  if (profile.pieces_.empty()) {
    throw ConfigError("seabed profile has no along-track extent");
  }
  return profile;
}

double SeabedProfile::elevation(double x) const {
  if (x <= pieces_.front().x0) return pieces_.front().e0;
  if (x >= pieces_.back().x1) return pieces_.back().e1;
  for (const Piece& piece : pieces_) {
    // Right-continuous at internal breaks: a piece owns [x0, x1).
    if (x >= piece.x0 && x < piece.x1) {
      const double s = (x - piece.x0) / (piece.x1 - piece.x0);
      return piece.e0 + s * (piece.e1 - piece.e0);
    }
  }
  return pieces_.back().e1;
}

double SeabedProfile::total_length() const {
  return pieces_.empty() ? 0.0 : pieces_.back().x1;
}

double depth_reference(const SeabedProfile& profile, double x,
                       double target_altitude) {
  return -profile.elevation(x) - target_altitude;
}

}  // namespace rotv
