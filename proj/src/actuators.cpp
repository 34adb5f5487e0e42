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

#include "rotv/actuators.hpp"

#include <algorithm>
#include <cmath>

namespace rotv {

void validate(const ServoParams& p) {
  auto fail = [](const char* why) { throw ParamError(why); };
  if (!std::isfinite(p.time_constant) || p.time_constant <= 0.0) {
    fail("servo time_constant must be positive");
  }
  if (!std::isfinite(p.dead_zone) || p.dead_zone < 0.0 || p.dead_zone >= 1.0) {
    fail("servo dead_zone must lie in [0, 1)");
  }
  if (!std::isfinite(p.max_rate) || p.max_rate <= 0.0) {
    fail("servo max_rate must be positive");
  }
  if (!std::isfinite(p.deflection_limit) || p.deflection_limit <= 0.0) {
    fail("servo deflection_limit must be positive");
  }
}

double dead_zone_rate(double pwm, const ServoParams& params) {
  const double u = std::clamp(pwm, -1.0, 1.0);
  const double mag = std::abs(u);
  if (mag < params.dead_zone) return 0.0;
  const double span = 1.0 - params.dead_zone;
  const double rate = params.max_rate * (mag - params.dead_zone) / span;
  return std::copysign(rate, u);
}

double servo_step(ServoState& state, double command, double dt,
                  const ServoParams& params) {
  const double limit = params.deflection_limit;
  const double target = std::clamp(command, -limit, limit);
  if (params.ideal) {
    state.deflection = target;
    return state.deflection;
  }
  const double error = target - state.deflection;
  const double pwm = error / (params.time_constant * params.max_rate);
  state.deflection += dead_zone_rate(pwm, params) * dt;
  state.deflection = std::clamp(state.deflection, -limit, limit);
  return state.deflection;
}

FinDeflections servo_step_all(FinDeflections& deflections,
                              const FinDeflections& commands, double dt,
                              const ServoParams& params) {
  ServoState s1{deflections.u1}, s2{deflections.u2}, s3{deflections.u3};
  deflections.u1 = servo_step(s1, commands.u1, dt, params);
  deflections.u2 = servo_step(s2, commands.u2, dt, params);
  deflections.u3 = servo_step(s3, commands.u3, dt, params);
  return deflections;
}

}  // namespace rotv
