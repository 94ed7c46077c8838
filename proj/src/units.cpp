// Copyright 2026 The landau-vortex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vortex/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vortex::units {

Conversion convert_units(double b_tesla, double m_kev) {
  if (!(b_tesla >= 0.0) || !std::isfinite(b_tesla)) {
    throw std::invalid_argument("B must be finite and >= 0 tesla");
  }
  if (!(m_kev > 0.0) || !std::isfinite(m_kev)) {
    throw std::invalid_argument("mass must be finite and > 0 keV");
  }
  const double mc2_joule = m_kev * 1e3 * kElementaryCharge;
  Conversion c;
  // hbar |e| B c^2 / (m c^2)^2
  c.beB_over_m2 = kHbar * kElementaryCharge * b_tesla * kSpeedOfLight *
                  kSpeedOfLight / (mc2_joule * mc2_joule);
  c.length_m = b_tesla == 0.0
                   ? std::numeric_limits<double>::infinity()
                   : std::sqrt(2.0 * kHbar / (kElementaryCharge * b_tesla));
  return c;
}

}  // namespace vortex::units
