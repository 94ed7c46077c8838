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

// Observables of the unnormalized exact states. Currents are contravariant,
// j^mu = Psi^dagger gamma^0 gamma^mu Psi, per unit dz x dr~ unless a profile
// asks for the physical surface element. Transverse integrals run over the
// rescaled plane, d^2 r~ = r~ dr~ dphi.

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vortex/landau_states.hpp"

namespace vortex::observables {

struct CurrentSample {
  double r = 0.0;
  double j0 = 0.0;
  double jr = 0.0;
  double jphi = 0.0;
  double jz = 0.0;
};

struct SpinTextureSample {
  double r = 0.0;
  double s_r = 0.0;
  double s_phi = 0.0;
  double s_z = 0.0;
};

/// Diagonal of the reduced spin density matrix in the z basis.
struct ReducedSpinState {
  double prob_up = 0.0;
  double prob_down = 0.0;

  double trace() const noexcept { return prob_up + prob_down; }
  double purity() const noexcept {
    return prob_up * prob_up + prob_down * prob_down;
  }
};

/// Closed-form currents at radius r.
CurrentSample current_density(const QuantumNumbers& qn,
                              const BeamParameters& bp, double r,
                              SpinOrbit so = SpinOrbit::Included);

/// Psi^dagger gamma^0 gamma^mu Psi at the spinor's own point, in cylindrical
/// components.
CurrentSample contract_current(const SpinorValue& psi);

/// (1/2) Psi^dagger Sigma Psi in cylindrical components.
SpinTextureSample contract_spin(const SpinorValue& psi);

/// 2 pi E (E + m) (l+p)!/p!.
double integrated_density(const QuantumNumbers& qn, const BeamParameters& bp);

/// pi (l+p)!/p! (m^2 + E^2 + 2 m E + k^2 + 2 B|e| X), X in
/// {l+p+1, l+p, p+1, p} by family.
double integrated_density_long_form(const QuantumNumbers& qn,
                                    const BeamParameters& bp);

double integrated_jz(const QuantumNumbers& qn, const BeamParameters& bp);

/// S_phi = spin (1/2) k / (E + m) jphi, S_r = 0, S_z = (1/2) Psi^dagger Sigma_z Psi.
SpinTextureSample spin_texture(const QuantumNumbers& qn,
                               const BeamParameters& bp, double r);

/// Spin density entering the Gordon split of j^z.
enum class GordonSpin {
  Bar,     ///< (1/2) Psi-bar Sigma Psi, curl weighted by 1/m
  Dagger,  ///< (1/2) Psi^dagger Sigma Psi, curl unweighted
};

struct RadialGrid {
  double r_max = 4.0;
  double h = 0.01;
};

/// max over r_i = i h, 0 < r_i < r_max, of
///   | j^z - (k/m) Psi-bar Psi - c (curl S)_z |
/// divided by max(|j^z|, tiny). (curl S)_z = (1/r) d_r (r S_phi) in physical
/// length, by second order central differences; c = 1/m for Bar, 1 for
/// Dagger. Zero-current states return an absolute residual.
double gordon_residual(const QuantumNumbers& qn, const BeamParameters& bp,
                       const RadialGrid& grid,
                       GordonSpin convention = GordonSpin::Bar);

ReducedSpinState reduced_spin_state(const QuantumNumbers& qn,
                                    const BeamParameters& bp);

/// oam l + spin / 2.
double canonical_jz(const QuantumNumbers& qn);

/// delta = (E_L^2 + E_Z^2) / (2 E (E + m)).
double mixing_fraction(const QuantumNumbers& qn, const BeamParameters& bp);

/// Expectation value of the gauge covariant J_z,
/// canonical + <r~^2>. With the spin-orbit term dropped this is
/// canonical + 2p + l + 1.
double gauge_covariant_jz(const QuantumNumbers& qn, const BeamParameters& bp,
                          SpinOrbit so = SpinOrbit::Included);

/// Family-by-family form: 2p+2l+3/2+d, 2p+2l+1/2-d, 2p+3/2+d, 2p+1/2-d.
double gauge_covariant_jz_family_form(const QuantumNumbers& qn,
                                      const BeamParameters& bp);

/// Integral of Psi^dagger r~^2 Psi over the rescaled plane.
double r2_moment(const QuantumNumbers& qn, const BeamParameters& bp,
                 SpinOrbit so = SpinOrbit::Included);

/// 2p + l (1 + oam) + 1 + spin.
int orbital_plus_twice_spin(const QuantumNumbers& qn);

/// M_z / |e| = -(int j0 / E) (E_L^2 + E_Z^2) / (2 B|e|). Throws for beB = 0.
double magnetic_moment(const QuantumNumbers& qn, const BeamParameters& bp);

/// -(int j0 / (2 E)) (L + 2S). Throws for beB = 0.
double magnetic_moment_spin_form(const QuantumNumbers& qn,
                                 const BeamParameters& bp);

struct RadialInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct CurrentStructure {
  /// Radii where jphi changes sign, increasing.
  std::vector<double> sign_changes;
  /// Sign of jphi on each interval between consecutive sign changes,
  /// starting at the axis.
  std::vector<int> interval_signs;
  /// Sign of the circulation moment int r~^2 jphi dr~, i.e. of -M_z; 0 when
  /// jphi vanishes identically.
  int dominant_sign = 0;
  /// Intervals whose sign opposes the dominant one. hi is +inf for the
  /// outermost interval.
  std::vector<RadialInterval> counterflow;
};

CurrentStructure current_structure(const QuantumNumbers& qn,
                                   const BeamParameters& bp);

std::vector<RadialInterval> counterflow_rings(const QuantumNumbers& qn,
                                              const BeamParameters& bp);

/// Number of jphi sign changes: 2p, 2p, 2p + 1, max(2p - 1, 0) by family.
int predicted_sign_changes(const QuantumNumbers& qn);

/// Sampled radial profile on a uniform grid over [0, r_max].
struct ProfileOptions {
  double r_max = 4.0;
  int samples = 512;
  bool normalized = false;
  /// Report jphi, jz, S_phi per dz x dr (multiplied by sqrt(beB / 2)).
  bool physical_surface_element = false;
};

struct RadialProfile {
  QuantumNumbers qn;
  BeamParameters bp;
  ProfileOptions options;
  std::vector<double> r, j0, jz, jphi, s_phi;
};

RadialProfile radial_profile(const QuantumNumbers& qn, const BeamParameters& bp,
                             const ProfileOptions& options);

}  // namespace vortex::observables

namespace vortex::quadrature {

/// Integral of f over the rescaled transverse plane at z = t = 0:
///   int_0^2pi dphi int_0^inf dr~ r~ f(Psi(r~, phi)).
/// Gauss-Laguerre in x = r~^2 with `nodes` points times a uniform
/// phi rule with `phi_points` points. Exact when f e^{r~^2} is a polynomial
/// in x of degree < 2 nodes and a trigonometric polynomial of degree
/// < phi_points in phi.
double transverse_integral(const QuantumNumbers& qn, const BeamParameters& bp,
                           const std::function<double(const SpinorValue&)>& f,
                           SpinOrbit so = SpinOrbit::Included, int nodes = 0,
                           int phi_points = 16);

double integrated_density(const QuantumNumbers& qn, const BeamParameters& bp);
double integrated_jz(const QuantumNumbers& qn, const BeamParameters& bp);
double r2_moment(const QuantumNumbers& qn, const BeamParameters& bp,
                 SpinOrbit so = SpinOrbit::Included);
double gauge_covariant_jz(const QuantumNumbers& qn, const BeamParameters& bp,
                          SpinOrbit so = SpinOrbit::Included);
/// -(1/2) int r jphi over the plane, r in physical length.
double magnetic_moment(const QuantumNumbers& qn, const BeamParameters& bp);
/// Full 2x2 reduced spin matrix from component integrals, trace one.
Eigen::Matrix2cd reduced_spin_matrix(const QuantumNumbers& qn,
                                     const BeamParameters& bp);

}  // namespace vortex::quadrature
