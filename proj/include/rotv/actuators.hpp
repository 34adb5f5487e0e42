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

#ifndef ROTV_ACTUATORS_HPP
#define ROTV_ACTUATORS_HPP

#include "rotv/types.hpp"

namespace rotv {

// First-order fin servo with a PWM dead zone.  The drive stays quiet until
// the normalized command magnitude exceeds dead_zone, then ramps linearly to
// max_rate at full command.
struct ServoParams {
  double time_constant = 0.1;  // s, first-order lag of the deflection loop
  double dead_zone = 0.17;     // fraction of full PWM with no motion
  double max_rate = 2.0;       // rad/s at full drive
  double deflection_limit = 20.0 * 0.017453292519943295;  // rad (20 deg)
  // When true the servo is treated as instantaneous: deflection jumps to the
  // clamped command and the dead zone never engages.
  bool ideal = true;
};

// Throws ParamError for out-of-contract servo parameters.
void validate(const ServoParams& params);

// Deflection rate for a normalized PWM command in [-1, 1] (clamped first):
// zero inside the dead zone, then sign(pwm)*max_rate*(|pwm|-dz)/(1-dz).
double dead_zone_rate(double pwm, const ServoParams& params);

// One servo deflection tracking one commanded angle.
struct ServoState {
  double deflection = 0.0;  // rad
};

// Advances the servo by dt toward `command` (rad).  The PWM demand is a
// proportional map of the angle error with the gain that realizes the
// configured time constant; the deflection is clamped to the mechanical
// limit.  Returns the new deflection.
double servo_step(ServoState& state, double command, double dt,
                  const ServoParams& params);

// Steps all three fins; commands are clamped to the deflection limit.
FinDeflections servo_step_all(FinDeflections& deflections,
                              const FinDeflections& commands, double dt,
                              const ServoParams& params);

}  // namespace rotv

#endif  // ROTV_ACTUATORS_HPP
