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

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace vortex {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Spinor4 = Eigen::Matrix<Complex, 4, 1>;

/// Dirac matrices in the standard (Dirac-Pauli) representation with metric
/// signature diag(+,-,-,-). `gamma(mu)` returns the contravariant gamma^mu:
///   gamma^0 = diag(I, -I),  gamma^i = [[0, sigma_i], [-sigma_i, 0]].
namespace clifford {

/// Minkowski metric eta_{mu mu}; off-diagonal entries are zero.
constexpr double metric(int mu) noexcept { return mu == 0 ? 1.0 : -1.0; }

/// Contravariant gamma^mu, mu in 0..3. Throws std::invalid_argument otherwise.
const Matrix4c& gamma(int mu);

/// Covariant gamma_mu = eta_{mu mu} gamma^mu.
Matrix4c gamma_lower(int mu);

/// Sigma_i = diag(sigma_i, sigma_i), i in 1..3 (x, y, z).
const Matrix4c& spin_matrix(int i);

/// Identity on bispinor space.
const Matrix4c& identity();

struct CylindricalPair {
  Matrix4c radial;
  Matrix4c azimuthal;
};

/// gamma^r = cos(phi) gamma^x + sin(phi) gamma^y,
/// gamma^phi = -sin(phi) gamma^x + cos(phi) gamma^y.
CylindricalPair gamma_cylindrical(double phi);

/// Same rotation applied to Sigma_x, Sigma_y.
CylindricalPair sigma_cylindrical(double phi);

/// sigma_{mu nu} = 1/2 [gamma_mu, gamma_nu] (covariant indices).
Matrix4c sigma_tensor(int mu, int nu);

/// Max-norm of [sigma_{mu nu}, sigma_{rho sigma}] minus
/// 2(-eta_{mu rho} sigma_{nu sigma} + eta_{mu sigma} sigma_{nu rho}
///   + eta_{nu rho} sigma_{mu sigma} - eta_{nu sigma} sigma_{mu rho}).
double check_sigma_commutator(int mu, int nu, int rho, int sigma);

/// Max-norm of {gamma^mu, gamma^nu} - 2 eta^{mu nu} I.
double check_anticommutator(int mu, int nu);

/// Largest entry modulus.
double max_norm(const Matrix4c& m);

}  // namespace clifford
}  // namespace vortex
