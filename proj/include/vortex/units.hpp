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

#pragma once

namespace vortex::units {

// CODATA 2018 recommended values (exact where the 2019 SI fixes them).
inline constexpr double kHbar = 1.054571817e-34;            // J s (exact)
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C (exact)
inline constexpr double kSpeedOfLight = 299792458.0;        // m / s (exact)
inline constexpr double kElectronMassKeV = 510.99895000;    // keV, +-1.5e-7
inline constexpr double kDefaultMassKeV = 511.0;

struct Conversion {
  /// B|e| in units of m^2 (hbar = c = 1).
  double beB_over_m2 = 0.0;
  /// Physical radius of r~ = 1, sqrt(2 hbar / (|e| B)), in metres.
  /// +inf for B = 0.
  double length_m = 0.0;
  double length_nm() const noexcept { return length_m * 1e9; }
};

/// Throws std::invalid_argument for negative or non-finite input, or m = 0.
Conversion convert_units(double b_tesla, double m_kev = kDefaultMassKeV);

}  // namespace vortex::units
