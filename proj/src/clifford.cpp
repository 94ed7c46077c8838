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

#include "vortex/clifford.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vortex::clifford {
namespace {

using Pauli = Eigen::Matrix<Complex, 2, 2>;

constexpr Complex kI{0.0, 1.0};

Pauli pauli(int i) {
  Pauli s = Pauli::Zero();
  switch (i) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli index must be 1..3");
  }
  return s;
}

std::array<Matrix4c, 4> build_gammas() {
  std::array<Matrix4c, 4> g;
  g[0] = Matrix4c::Zero();
  g[0].diagonal() << 1.0, 1.0, -1.0, -1.0;
  for (int i = 1; i <= 3; ++i) {
    g[i] = Matrix4c::Zero();
    g[i].block<2, 2>(0, 2) = pauli(i);
    g[i].block<2, 2>(2, 0) = -pauli(i);
  }
  return g;
}

std::array<Matrix4c, 3> build_spins() {
  std::array<Matrix4c, 3> s;
  for (int i = 1; i <= 3; ++i) {
    s[i - 1] = Matrix4c::Zero();
    s[i - 1].block<2, 2>(0, 0) = pauli(i);
    s[i - 1].block<2, 2>(2, 2) = pauli(i);
  }
  return s;
}

const std::array<Matrix4c, 4>& gammas() {
  static const std::array<Matrix4c, 4> g = build_gammas();
  return g;
}

const std::array<Matrix4c, 3>& spins() {
  static const std::array<Matrix4c, 3> s = build_spins();
  return s;
}

void require_spacetime_index(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("spacetime index out of range: " +
                                std::to_string(mu));
  }
}

}  // namespace

const Matrix4c& gamma(int mu) {
  require_spacetime_index(mu);
  return gammas()[static_cast<std::size_t>(mu)];
}

Matrix4c gamma_lower(int mu) { return metric(mu) * gamma(mu); }

const Matrix4c& spin_matrix(int i) {
  if (i < 1 || i > 3) {
    throw std::invalid_argument("spin matrix index must be 1..3");
  }
  return spins()[static_cast<std::size_t>(i - 1)];
}

const Matrix4c& identity() {
  static const Matrix4c id = Matrix4c::Identity();
  return id;
}

CylindricalPair gamma_cylindrical(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c * gamma(1) + s * gamma(2), -s * gamma(1) + c * gamma(2)};
}

CylindricalPair sigma_cylindrical(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c * spin_matrix(1) + s * spin_matrix(2),
          -s * spin_matrix(1) + c * spin_matrix(2)};
}

Matrix4c sigma_tensor(int mu, int nu) {
  const Matrix4c a = gamma_lower(mu);
  const Matrix4c b = gamma_lower(nu);
  return 0.5 * (a * b - b * a);
}

double check_sigma_commutator(int mu, int nu, int rho, int sigma) {
  const Matrix4c a = sigma_tensor(mu, nu);
  const Matrix4c b = sigma_tensor(rho, sigma);
  const Matrix4c lhs = a * b - b * a;
  auto eta = [](int x, int y) { return x == y ? metric(x) : 0.0; };
  const Matrix4c rhs =
      2.0 * (-eta(mu, rho) * sigma_tensor(nu, sigma) +
             eta(mu, sigma) * sigma_tensor(nu, rho) +
             eta(nu, rho) * sigma_tensor(mu, sigma) -
             eta(nu, sigma) * sigma_tensor(mu, rho));
  return max_norm(lhs - rhs);
}

double check_anticommutator(int mu, int nu) {
  const Matrix4c& a = gamma(mu);
  const Matrix4c& b = gamma(nu);
  const double eta = mu == nu ? metric(mu) : 0.0;
  return max_norm(a * b + b * a - 2.0 * eta * identity());
}

double max_norm(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace vortex::clifford
