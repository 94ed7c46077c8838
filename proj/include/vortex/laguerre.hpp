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

#include <vector>

namespace vortex::laguerre {

/// Associated Laguerre polynomial L_p^l. The superscript may be -1, which
/// shows up in the spin-orbit terms of the l = 0 edge cases. p = -1 denotes
/// the identically zero polynomial.
struct LaguerreIndex {
  int p = 0;
  int l = 0;
};

/// L_p^l(x) by the upward three-term recurrence in p.
/// Throws std::invalid_argument for p < -1 or l < -1.
double eval(LaguerreIndex idx, double x);

/// d/dx L_p^l(x) = -L_{p-1}^{l+1}(x).
double eval_derivative(LaguerreIndex idx, double x);

/// Power-series coefficients c_j of L_p^l(x) = sum_j c_j x^j,
///   c_j = (-1)^j binom(p + l, p - j) / j!.
/// Used by the polynomial oracle; evaluation goes through the recurrence.
std::vector<double> coefficients(LaguerreIndex idx);

/// Largest scaled residual of
///   L_p^l = L_p^{l+1} - L_{p-1}^{l+1}
///   x dL_p^l/dx = p L_p^l - (p + l) L_{p-1}^l
/// at x. Each residual is divided by max(1, largest term magnitude).
double check_recurrences(int p, int l, double x);

/// (l + p)! / p! as a running product. Throws std::range_error when
/// l + p > 170 and std::invalid_argument for negative input.
double factorial_ratio(int l, int p);

/// Gauss rule for the weight x^alpha e^{-x} on [0, inf).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule, exact for polynomials of degree
/// <= 2n - 1. Nodes come from the Jacobi matrix eigenproblem and are polished
/// by Newton steps in extended precision.
QuadratureRule gauss_laguerre(int n, int alpha = 0);

/// integral_0^inf x^weight_power L_{p1}^l(x) L_{p2}^l(x) e^{-x} dx, evaluated
/// with a rule sized so the integrand is integrated exactly.
double weighted_inner_product(int p1, int p2, int l, int weight_power);

/// Zeros of L_p^l on (0, inf), strictly increasing. For l >= 0 there are
/// exactly p of them; for l = -1 the root at the origin is dropped.
std::vector<double> positive_roots(LaguerreIndex idx);

}  // namespace vortex::laguerre
