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

// Exact operator algebra on spinors of the form
//
//   f(t, x, y, z) = sum_i poly_i(T, X, Y, Z) e_i * G(X, Y) * exp(i (K Z - W T))
//
// with scaled coordinates X^mu = x^mu / lambda, G = exp(-(X^2 + Y^2) / 2) (or
// G = 1), K = k lambda and W = E lambda. Derivatives, multiplication by
// coordinates, and constant 4x4 matrices map this class to itself, so every
// operator identity can be checked coefficient by coefficient.
//
// Conventions: metric diag(+,-,-,-), P_mu = i d_mu - e A_mu with covariant
// A_mu = (V, -A_vec), A_vec = B x r / 2, V = -E.r. With charge e = -|e| and
// B along +z this is the symmetric gauge of the Landau problem.

#include <array>
#include <cstdint>
#include <map>
#include <random>

#include "vortex/clifford.hpp"
#include "vortex/landau_states.hpp"

namespace vortex::oracle {

/// Powers of (T, X, Y, Z).
using Exponents = std::array<int, 4>;

class Polynomial {
 public:
  using Terms = std::map<Exponents, Complex>;

  Polynomial() = default;
  static Polynomial constant(Complex c);
  static Polynomial monomial(Exponents e, Complex c = 1.0);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  void add(const Exponents& e, Complex c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Multiplication by the scaled coordinate X^mu.
  Polynomial times_coordinate(int mu) const;
  /// Partial derivative of the polynomial part only.
  Polynomial derivative(int mu) const;

  int degree() const;
  double max_abs() const;
  Complex evaluate(const std::array<double, 4>& scaled) const;

 private:
  Terms terms_;
};

/// Envelope parameters. Everything here is shared by all components.
struct Envelope {
  double length_scale = 1.0;  ///< lambda
  double k = 0.0;             ///< longitudinal momentum (physical)
  double energy = 0.0;        ///< E (physical)
  bool transverse_gaussian = true;
};

class PolyGaussSpinor {
 public:
  PolyGaussSpinor() = default;
  explicit PolyGaussSpinor(Envelope env) : env_(env) {}

  const Envelope& envelope() const noexcept { return env_; }
  Polynomial& component(int i) { return comps_.at(static_cast<std::size_t>(i)); }
  const Polynomial& component(int i) const {
    return comps_.at(static_cast<std::size_t>(i));
  }

  /// Physical partial derivative d/dx^mu, envelope included.
  PolyGaussSpinor derivative(int mu) const;
  /// Multiplication by the physical coordinate x^mu.
  PolyGaussSpinor times_coordinate(int mu) const;
  /// Multiplication by a polynomial in scaled coordinates.
  PolyGaussSpinor times(const Polynomial& q) const;
  PolyGaussSpinor apply(const Matrix4c& m) const;

  PolyGaussSpinor& operator+=(const PolyGaussSpinor& o);
  PolyGaussSpinor& operator-=(const PolyGaussSpinor& o);
  PolyGaussSpinor& operator*=(Complex c);
  friend PolyGaussSpinor operator+(PolyGaussSpinor a, const PolyGaussSpinor& b) {
    return a += b;
  }
  friend PolyGaussSpinor operator-(PolyGaussSpinor a, const PolyGaussSpinor& b) {
    return a -= b;
  }
  friend PolyGaussSpinor operator*(Complex c, PolyGaussSpinor a) { return a *= c; }

  int degree() const;
  double max_coefficient() const;
  std::size_t term_count() const;
  /// Value at a physical point (t, x, y, z).
  Spinor4 evaluate(const std::array<double, 4>& x) const;

 private:
  void require_same_envelope(const PolyGaussSpinor& o) const;

  Envelope env_;
  std::array<Polynomial, 4> comps_;
};

/// Zero test: every coefficient <= tol * reference_scale.
bool is_zero(const PolyGaussSpinor& f, double reference_scale, double tol);

/// Constant electromagnetic field. `charge` is the signed particle charge in
/// the same units; the Landau problem uses charge = -1 and B = (0, 0, B|e|).
struct FieldConfig {
  std::array<double, 3> B{};
  std::array<double, 3> E{};
  double charge = -1.0;

  /// c[mu][nu] with A_mu(x) = sum_nu c[mu][nu] x^nu (covariant A).
  std::array<std::array<double, 4>, 4> potential_coefficients() const;
  /// F_{mu nu} = d_mu A_nu - d_nu A_mu (covariant).
  double field_tensor(int mu, int nu) const;
};

/// P_mu f = (i d_mu - e A_mu) f, covariant index.
PolyGaussSpinor apply_gauge_momentum(int mu, const PolyGaussSpinor& f,
                                     const FieldConfig& field);

/// gamma^mu P_mu f (without the mass term).
PolyGaussSpinor apply_slashed_momentum(const PolyGaussSpinor& f,
                                       const FieldConfig& field);

/// (gamma^mu P_mu - m) f.
PolyGaussSpinor apply_dirac(const PolyGaussSpinor& f, const FieldConfig& field,
                            double mass);

/// -i (x d_y - y d_x) + Sigma_z / 2.
PolyGaussSpinor apply_canonical_jz(const PolyGaussSpinor& f);

/// J_{mu nu} = x_mu P_nu - x_nu P_mu + (i/2) sigma_{mu nu} (covariant).
PolyGaussSpinor apply_gauge_covariant_j(int mu, int nu, const PolyGaussSpinor& f,
                                        const FieldConfig& field);

/// J_x = J_23, J_y = J_31, J_z = J_12; axis in {1, 2, 3}.
PolyGaussSpinor apply_gauge_covariant_j(int axis, const PolyGaussSpinor& f,
                                        const FieldConfig& field);

/// Oracle frame of the Landau problem: length scale sqrt(2 / B|e|) so the
/// scaled transverse coordinates are the rescaled x~, y~.
Envelope landau_envelope(const BeamParameters& bp, double total_energy);
FieldConfig landau_field(const BeamParameters& bp);

/// Exact polynomial form of a closed-form solution built for `total_energy`.
PolyGaussSpinor from_solution(const QuantumNumbers& qn,
                              const BeamParameters& bp, double total_energy,
                              SpinOrbit so = SpinOrbit::Included);
PolyGaussSpinor from_solution(const QuantumNumbers& qn,
                              const BeamParameters& bp,
                              SpinOrbit so = SpinOrbit::Included);

/// Solution of the squared equation: scalar mode times the unit bispinor
/// (1,0,0,0) for spin up or (0,1,0,0) for spin down.
PolyGaussSpinor scalar_solution(const QuantumNumbers& qn,
                                const BeamParameters& bp);

/// max |coeff of (P-slash - m) Psi| / max(|P-slash Psi|, |m Psi|). The state
/// is built with total energy E + energy_offset; any nonzero offset must
/// produce a large residual.
double dirac_residual(const QuantumNumbers& qn, const BeamParameters& bp,
                      double energy_offset = 0.0);

/// Same measure for (P-slash^2 - m^2) psi u, the squared equation.
double squared_dirac_residual(const QuantumNumbers& qn,
                              const BeamParameters& bp);

/// Least-squares eigenvalue fit of g against f over coefficients.
struct EigenFit {
  Complex eigenvalue;
  double residual = 0.0;  ///< max|g - lambda f| / max|g|
};
EigenFit fit_eigenvalue(const PolyGaussSpinor& f, const PolyGaussSpinor& g);

/// max|J_j J_k f - J_k J_j f - RHS| / scale with
/// RHS = i eps_{jkl} (J_l + e x^l (x.B)) f, i.e. i eps_{jkl} (J_l - x_l x.B)
/// for e = -1. At B = 0 this is the ordinary angular momentum algebra. With
/// include_anomaly = false the x^l (x.B) term is left out.
double commutator_jj_residual(int j, int k, const FieldConfig& field,
                              const PolyGaussSpinor& f,
                              bool include_anomaly = true);

enum class CommutatorRhs {
  Tensor,   ///< i e x_[mu F_nu]lambda gamma^lambda
  Explicit  ///< i e ((x E_y - y E_x) gamma^0 - B_z x.gamma + gamma^3 x.B), (1,2) only
};

/// [P-slash - m, J_{mu nu}] f against the chosen right-hand side.
double commutator_dirac_j_residual(int mu, int nu, const FieldConfig& field,
                                   const PolyGaussSpinor& f,
                                   CommutatorRhs rhs = CommutatorRhs::Tensor,
                                   double mass = 1.0);

/// Random spinor with complex coefficients on all monomials of total degree
/// <= max_degree in (T, X, Y, Z).
PolyGaussSpinor random_spinor(std::mt19937_64& rng, int max_degree,
                              const Envelope& env);

FieldConfig random_field(std::mt19937_64& rng);

}  // namespace vortex::oracle
