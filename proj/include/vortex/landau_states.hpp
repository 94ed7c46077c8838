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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vortex/clifford.hpp"
#include "vortex/laguerre.hpp"

namespace vortex {

enum class Spin : int { Down = -1, Up = 1 };
enum class OrbitalSign : int { Negative = -1, Positive = 1 };

/// The four exact solution families, in the order (spin, OAM):
/// (+, >=0), (-, >0), (+, <0), (-, <=0).
enum class Family : int {
  SpinUpOamNonNegative = 1,
  SpinDownOamPositive = 2,
  SpinUpOamNegative = 3,
  SpinDownOamNonPositive = 4,
};

constexpr int sign_of(Spin s) noexcept { return static_cast<int>(s); }
constexpr int sign_of(OrbitalSign o) noexcept { return static_cast<int>(o); }

/// Family selector plus radial index p >= 0 and OAM magnitude l >= 0.
/// Families 2 and 3 exist only for l >= 1; l = 0 belongs to families 1 and 4.
struct QuantumNumbers {
  Spin spin = Spin::Up;
  OrbitalSign oam = OrbitalSign::Positive;
  int l = 0;
  int p = 0;

  /// Throws std::invalid_argument when the combination does not exist.
  void validate() const;
  Family family() const;
  /// Signed orbital quantum number oam * l.
  int winding() const noexcept { return sign_of(oam) * l; }

  /// Maps a signed OAM value onto (oam sign, |l|). l = 0 goes to the
  /// family with matching spin (1 for spin up, 4 for spin down).
  static QuantumNumbers from_signed_l(int signed_l, int p, Spin spin);
  static QuantumNumbers of_family(Family f, int l, int p);

  friend bool operator==(const QuantumNumbers&,
                         const QuantumNumbers&) = default;
};

std::string to_string(const QuantumNumbers& qn);
std::string family_label(Family f);

/// Natural units (hbar = c = 1). beB = B|e| carries units of energy squared.
struct BeamParameters {
  double beB = 0.0;
  double mass = 1.0;
  double k = 0.0;

  void validate() const;
};

struct EnergyDecomposition {
  double landau_sq = 0.0;
  double zeeman_sq = 0.0;
  double total = 0.0;

  /// E_L^2 + E_Z^2, the squared energy that drives spin-orbit mixing.
  double mixing_sq() const noexcept { return landau_sq + zeeman_sq; }
};

EnergyDecomposition energy(const QuantumNumbers& qn, const BeamParameters& bp);

/// (E_L^2 + E_Z^2) / (2 B|e|) as an exact integer: the rung on the squared
/// energy ladder.
int ladder_level(const QuantumNumbers& qn);

/// Twice the canonical J_z eigenvalue, 2 (oam l) + spin.
int twice_canonical_jz(const QuantumNumbers& qn);

struct SpacetimePoint {
  double r = 0.0;  ///< rescaled radius sqrt(|e|B/2) r
  double phi = 0.0;
  double z = 0.0;
  double t = 0.0;
};

struct SpinorValue {
  Spinor4 components = Spinor4::Zero();
  SpacetimePoint point;
};

enum class SpinOrbit { Included, Dropped };

/// Term-by-term description of one exact solution, without the common factor
/// exp(i(kz - E t)) exp(-r^2/2):
///   main:  r^l L_p^l(r^2) e^{i w phi} * main_column
///   spin-orbit: i sqrt(B|e|) c r^n L(r^2) e^{i w' phi} in component so_slot.
struct SolutionForm {
  std::array<double, 4> main_column{};
  int main_winding = 0;
  int main_power = 0;
  laguerre::LaguerreIndex main_laguerre;

  int so_slot = 3;
  double so_coefficient = 0.0;
  int so_winding = 0;
  int so_power = 0;
  laguerre::LaguerreIndex so_laguerre;
  double sqrt_beB = 0.0;
};

/// Builds the closed form for a given total energy. Passing anything other
/// than energy(qn, bp).total yields a non-solution; the oracle uses that as a
/// sensitivity control.
SolutionForm solution_form(const QuantumNumbers& qn, const BeamParameters& bp,
                           double total_energy);

/// Radial factor r^n L(r^2) without envelope.
double radial_factor(int power, laguerre::LaguerreIndex idx, double r);

/// r^l e^{-r^2/2} L_p^l(r^2) e^{i(kz - E t + oam l phi)}.
Complex scalar_mode(const QuantumNumbers& qn, const BeamParameters& bp,
                    const SpacetimePoint& x);

/// Unnormalized exact Dirac spinor at a spacetime point.
SpinorValue evaluate_spinor(const QuantumNumbers& qn, const BeamParameters& bp,
                            const SpacetimePoint& x,
                            SpinOrbit so = SpinOrbit::Included);

/// 1 / sqrt(2 pi E (E + m) (l+p)!/p!): makes the transverse integral of j0
/// equal to one.
double normalization_constant(const QuantumNumbers& qn,
                              const BeamParameters& bp);

/// The opposite-spin state with equal squared energy and canonical J_z, if
/// any. Only the (-, <=0), p = 0 ground states have none.
std::optional<QuantumNumbers> mixing_partner(const QuantumNumbers& qn);

struct SpectrumEntry {
  QuantumNumbers qn;
  EnergyDecomposition energy;
  int twice_jz = 0;
  int level = 0;
  std::optional<QuantumNumbers> partner;

  double canonical_jz() const noexcept { return 0.5 * twice_jz; }
};

/// All states on ladder rungs 0 .. max_levels-1 with |J_z| <= max_abs_jz,
/// sorted by (J_z, squared energy, spin). The J_z window is needed because
/// the negative-OAM rungs are infinitely degenerate in l.
std::vector<SpectrumEntry> spectrum_table(const BeamParameters& bp,
                                          int max_levels,
                                          double max_abs_jz);

}  // namespace vortex
