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

#include "vortex/operator_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortex::oracle {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_index(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("index must be 0..3");
}

// (X + s i Y)^n (X^2 + Y^2)^j combined into sum_j c_j (X^2+Y^2)^j.
Polynomial vortex_polynomial(int power, int winding_sign,
                             laguerre::LaguerreIndex idx) {
  if (idx.p < 0) return {};
  Polynomial phase = Polynomial::constant(1.0);
  const Polynomial factor = Polynomial::monomial({0, 1, 0, 0}) +
                            Polynomial::monomial({0, 0, 1, 0},
                                                 Complex(0.0, winding_sign));
  for (int i = 0; i < power; ++i) phase = phase * factor;

  const Polynomial r2 =
      Polynomial::monomial({0, 2, 0, 0}) + Polynomial::monomial({0, 0, 2, 0});
  const std::vector<double> c = laguerre::coefficients(idx);
  Polynomial radial;
  Polynomial r2j = Polynomial::constant(1.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) r2j = r2j * r2;
    radial += Complex(c[j]) * r2j;
  }
  return phase * radial;
}

double combined_scale(std::initializer_list<const PolyGaussSpinor*> parts) {
  double s = 0.0;
  for (const auto* p : parts) s = std::max(s, p->max_coefficient());
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Complex c) { return monomial({0, 0, 0, 0}, c); }

Polynomial Polynomial::monomial(Exponents e, Complex c) {
  Polynomial p;
  p.add(e, c);
  return p;
}

void Polynomial::add(const Exponents& e, Complex c) {
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]},
              ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::times_coordinate(int mu) const {
  require_index(mu);
  Polynomial out;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    e[static_cast<std::size_t>(mu)] += 1;
    out.terms_.emplace(e, c);
  }
  return out;
}

Polynomial Polynomial::derivative(int mu) const {
  require_index(mu);
  Polynomial out;
  const auto idx = static_cast<std::size_t>(mu);
  for (const auto& [key, c] : terms_) {
    if (key[idx] == 0) continue;
    Exponents e = key;
    const double n = e[idx];
    e[idx] -= 1;
    out.add(e, c * n);
  }
  return out;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

double Polynomial::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::evaluate(const std::array<double, 4>& scaled) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (std::size_t i = 0; i < 4; ++i) mono *= std::pow(scaled[i], e[i]);
    sum += c * mono;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// PolyGaussSpinor

void PolyGaussSpinor::require_same_envelope(const PolyGaussSpinor& o) const {
  const Envelope& a = env_;
  const Envelope& b = o.env_;
  if (a.length_scale != b.length_scale || a.k != b.k ||
      a.energy != b.energy || a.transverse_gaussian != b.transverse_gaussian) {
    throw std::invalid_argument("PolyGaussSpinor envelopes differ");
  }
}

PolyGaussSpinor PolyGaussSpinor::derivative(int mu) const {
  require_index(mu);
  const double lambda = env_.length_scale;
  PolyGaussSpinor out(env_);
  for (std::size_t i = 0; i < 4; ++i) {
    const Polynomial& f = comps_[i];
    Polynomial d = f.derivative(mu);
    switch (mu) {
      case 0:
        d += Complex(0.0, -env_.energy * lambda) * f;
        break;
      case 1:
      case 2:
        if (env_.transverse_gaussian) d -= f.times_coordinate(mu);
        break;
      case 3:
        d += Complex(0.0, env_.k * lambda) * f;
        break;
    }
    d *= 1.0 / lambda;
    out.comps_[i] = std::move(d);
  }
  return out;
}

PolyGaussSpinor PolyGaussSpinor::times_coordinate(int mu) const {
  PolyGaussSpinor out(env_);
  for (std::size_t i = 0; i < 4; ++i) {
    out.comps_[i] = comps_[i].times_coordinate(mu);
    out.comps_[i] *= env_.length_scale;
  }
  return out;
}

PolyGaussSpinor PolyGaussSpinor::times(const Polynomial& q) const {
  PolyGaussSpinor out(env_);
  for (std::size_t i = 0; i < 4; ++i) out.comps_[i] = comps_[i] * q;
  return out;
}

PolyGaussSpinor PolyGaussSpinor::apply(const Matrix4c& m) const {
  PolyGaussSpinor out(env_);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (m(r, c) == Complex(0.0)) continue;
      out.comps_[static_cast<std::size_t>(r)] +=
          m(r, c) * comps_[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

PolyGaussSpinor& PolyGaussSpinor::operator+=(const PolyGaussSpinor& o) {
  require_same_envelope(o);
  for (std::size_t i = 0; i < 4; ++i) comps_[i] += o.comps_[i];
  return *this;
}

PolyGaussSpinor& PolyGaussSpinor::operator-=(const PolyGaussSpinor& o) {
  require_same_envelope(o);
  for (std::size_t i = 0; i < 4; ++i) comps_[i] -= o.comps_[i];
  return *this;
}

PolyGaussSpinor& PolyGaussSpinor::operator*=(Complex c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

int PolyGaussSpinor::degree() const {
  int d = -1;
  for (const auto& p : comps_) d = std::max(d, p.degree());
  return d;
}

double PolyGaussSpinor::max_coefficient() const {
  double m = 0.0;
  for (const auto& p : comps_) m = std::max(m, p.max_abs());
  return m;
}

std::size_t PolyGaussSpinor::term_count() const {
  std::size_t n = 0;
  for (const auto& p : comps_) n += p.terms().size();
  return n;
}

Spinor4 PolyGaussSpinor::evaluate(const std::array<double, 4>& x) const {
  std::array<double, 4> scaled{};
  for (std::size_t i = 0; i < 4; ++i) scaled[i] = x[i] / env_.length_scale;
  double gauss = 1.0;
  if (env_.transverse_gaussian) {
    gauss = std::exp(-0.5 * (scaled[1] * scaled[1] + scaled[2] * scaled[2]));
  }
  const Complex plane = std::polar(gauss, env_.k * x[3] - env_.energy * x[0]);
  Spinor4 out;
  for (int i = 0; i < 4; ++i) {
    out(i) = comps_[static_cast<std::size_t>(i)].evaluate(scaled) * plane;
  }
  return out;
}

bool is_zero(const PolyGaussSpinor& f, double reference_scale, double tol) {
  return f.max_coefficient() <= tol * reference_scale;
}

// ---------------------------------------------------------------------------
// Fields and operators

std::array<std::array<double, 4>, 4> FieldConfig::potential_coefficients()
    const {
  const auto& b = B;
  const auto& e = E;
  std::array<std::array<double, 4>, 4> c{};
  c[0] = {0.0, -e[0], -e[1], -e[2]};
  c[1] = {0.0, 0.0, 0.5 * b[2], -0.5 * b[1]};
  c[2] = {0.0, -0.5 * b[2], 0.0, 0.5 * b[0]};
  c[3] = {0.0, 0.5 * b[1], -0.5 * b[0], 0.0};
  return c;
}

double FieldConfig::field_tensor(int mu, int nu) const {
  require_index(mu);
  require_index(nu);
  const auto c = potential_coefficients();
  const auto m = static_cast<std::size_t>(mu);
  const auto n = static_cast<std::size_t>(nu);
  return c[n][m] - c[m][n];
}

PolyGaussSpinor apply_gauge_momentum(int mu, const PolyGaussSpinor& f,
                                     const FieldConfig& field) {
  require_index(mu);
  PolyGaussSpinor out = kI * f.derivative(mu);
  const auto c = field.potential_coefficients()[static_cast<std::size_t>(mu)];
  for (int nu = 0; nu < 4; ++nu) {
    const double a = c[static_cast<std::size_t>(nu)];
    if (a == 0.0) continue;
    out -= Complex(field.charge * a) * f.times_coordinate(nu);
  }
  return out;
}

PolyGaussSpinor apply_slashed_momentum(const PolyGaussSpinor& f,
                                       const FieldConfig& field) {
  PolyGaussSpinor out(f.envelope());
  for (int mu = 0; mu < 4; ++mu) {
    out += apply_gauge_momentum(mu, f, field).apply(clifford::gamma(mu));
  }
  return out;
}

PolyGaussSpinor apply_dirac(const PolyGaussSpinor& f, const FieldConfig& field,
                            double mass) {
  return apply_slashed_momentum(f, field) - Complex(mass) * f;
}

PolyGaussSpinor apply_canonical_jz(const PolyGaussSpinor& f) {
  PolyGaussSpinor orbital =
      f.derivative(2).times_coordinate(1) - f.derivative(1).times_coordinate(2);
  return -kI * orbital + f.apply(0.5 * clifford::spin_matrix(3));
}

PolyGaussSpinor apply_gauge_covariant_j(int mu, int nu, const PolyGaussSpinor& f,
                                        const FieldConfig& field) {
  require_index(mu);
  require_index(nu);
  PolyGaussSpinor out =
      Complex(clifford::metric(mu)) *
          apply_gauge_momentum(nu, f, field).times_coordinate(mu) -
      Complex(clifford::metric(nu)) *
          apply_gauge_momentum(mu, f, field).times_coordinate(nu);
  out += f.apply(Complex(0.0, 0.5) * clifford::sigma_tensor(mu, nu));
  return out;
}

PolyGaussSpinor apply_gauge_covariant_j(int axis, const PolyGaussSpinor& f,
                                        const FieldConfig& field) {
  switch (axis) {
    case 1: return apply_gauge_covariant_j(2, 3, f, field);
    case 2: return apply_gauge_covariant_j(3, 1, f, field);
    case 3: return apply_gauge_covariant_j(1, 2, f, field);
    default: throw std::invalid_argument("axis must be 1, 2 or 3");
  }
}

// ---------------------------------------------------------------------------
// Landau solutions

Envelope landau_envelope(const BeamParameters& bp, double total_energy) {
  bp.validate();
  if (!(bp.beB > 0.0)) {
    throw std::invalid_argument("the polynomial frame needs B|e| > 0");
  }
  Envelope env;
  env.length_scale = std::sqrt(2.0 / bp.beB);
  env.k = bp.k;
  env.energy = total_energy;
  env.transverse_gaussian = true;
  return env;
}

FieldConfig landau_field(const BeamParameters& bp) {
  FieldConfig field;
  field.B = {0.0, 0.0, bp.beB};
  field.charge = -1.0;
  return field;
}

PolyGaussSpinor from_solution(const QuantumNumbers& qn,
                              const BeamParameters& bp, double total_energy,
                              SpinOrbit so) {
  const SolutionForm form = solution_form(qn, bp, total_energy);
  PolyGaussSpinor psi(landau_envelope(bp, total_energy));

  const int main_sign = form.main_winding >= 0 ? 1 : -1;
  const Polynomial main =
      vortex_polynomial(form.main_power, main_sign, form.main_laguerre);
  for (int i = 0; i < 4; ++i) {
    if (form.main_column[static_cast<std::size_t>(i)] == 0.0) continue;
    psi.component(i) += Complex(form.main_column[static_cast<std::size_t>(i)]) * main;
  }
  if (so == SpinOrbit::Included) {
    // |winding| equals the radial power in every family, so the phase
    // e^{i w phi} r^n is (X + sign(w) i Y)^n.
    const int so_sign = form.so_winding >= 0 ? 1 : -1;
    const Polynomial term =
        vortex_polynomial(form.so_power, so_sign, form.so_laguerre);
    psi.component(form.so_slot) +=
        Complex(0.0, form.sqrt_beB * form.so_coefficient) * term;
  }
  return psi;
}

PolyGaussSpinor from_solution(const QuantumNumbers& qn,
                              const BeamParameters& bp, SpinOrbit so) {
  return from_solution(qn, bp, energy(qn, bp).total, so);
}

PolyGaussSpinor scalar_solution(const QuantumNumbers& qn,
                                const BeamParameters& bp) {
  const double e = energy(qn, bp).total;
  PolyGaussSpinor psi(landau_envelope(bp, e));
  const int sign = qn.winding() >= 0 ? 1 : -1;
  psi.component(qn.spin == Spin::Up ? 0 : 1) =
      vortex_polynomial(qn.l, sign, {qn.p, qn.l});
  return psi;
}

double dirac_residual(const QuantumNumbers& qn, const BeamParameters& bp,
                      double energy_offset) {
  const double e = energy(qn, bp).total + energy_offset;
  const PolyGaussSpinor psi = from_solution(qn, bp, e);
  const FieldConfig field = landau_field(bp);
  const PolyGaussSpinor slashed = apply_slashed_momentum(psi, field);
  const PolyGaussSpinor massive = Complex(bp.mass) * psi;
  const PolyGaussSpinor r = slashed - massive;
  return r.max_coefficient() / combined_scale({&slashed, &massive});
}

double squared_dirac_residual(const QuantumNumbers& qn,
                              const BeamParameters& bp) {
  const PolyGaussSpinor psi = scalar_solution(qn, bp);
  const FieldConfig field = landau_field(bp);
  const PolyGaussSpinor squared =
      apply_slashed_momentum(apply_slashed_momentum(psi, field), field);
  const PolyGaussSpinor massive = Complex(bp.mass * bp.mass) * psi;
  const PolyGaussSpinor r = squared - massive;
  return r.max_coefficient() / combined_scale({&squared, &massive});
}

EigenFit fit_eigenvalue(const PolyGaussSpinor& f, const PolyGaussSpinor& g) {
  Complex num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto& ft = f.component(i).terms();
    const auto& gt = g.component(i).terms();
    for (const auto& [e, c] : ft) {
      den += std::norm(c);
      auto it = gt.find(e);
      if (it != gt.end()) num += std::conj(c) * it->second;
    }
  }
  EigenFit fit;
  fit.eigenvalue = den > 0.0 ? num / den : Complex(0.0);
  const PolyGaussSpinor r = g - fit.eigenvalue * f;
  const double scale = g.max_coefficient();
  fit.residual = scale > 0.0 ? r.max_coefficient() / scale : 0.0;
  return fit;
}

double commutator_jj_residual(int j, int k, const FieldConfig& field,
                              const PolyGaussSpinor& f, bool include_anomaly) {
  if (j < 1 || j > 3 || k < 1 || k > 3) {
    throw std::invalid_argument("axes must be 1..3");
  }
  const PolyGaussSpinor jk =
      apply_gauge_covariant_j(j, apply_gauge_covariant_j(k, f, field), field);
  const PolyGaussSpinor kj =
      apply_gauge_covariant_j(k, apply_gauge_covariant_j(j, f, field), field);
  PolyGaussSpinor lhs = jk - kj;

  PolyGaussSpinor rhs(f.envelope());
  if (j != k) {
    const int l = 6 - j - k;
    // Levi-Civita sign for a permutation of (1, 2, 3).
    const double eps = ((k - j + 3) % 3 == 1) ? 1.0 : -1.0;
    PolyGaussSpinor inner = apply_gauge_covariant_j(l, f, field);
    if (include_anomaly) {
      PolyGaussSpinor x_dot_b(f.envelope());
      for (int a = 1; a <= 3; ++a) {
        const double b = field.B[static_cast<std::size_t>(a - 1)];
        if (b != 0.0) x_dot_b += Complex(b) * f.times_coordinate(a);
      }
      inner += Complex(field.charge) * x_dot_b.times_coordinate(l);
    }
    rhs = Complex(0.0, eps) * inner;
  }
  const PolyGaussSpinor r = lhs - rhs;
  const double scale = std::max(combined_scale({&jk, &kj, &rhs}), 1e-300);
  return r.max_coefficient() / scale;
}

double commutator_dirac_j_residual(int mu, int nu, const FieldConfig& field,
                                   const PolyGaussSpinor& f, CommutatorRhs rhs,
                                   double mass) {
  const PolyGaussSpinor dj =
      apply_dirac(apply_gauge_covariant_j(mu, nu, f, field), field, mass);
  const PolyGaussSpinor jd =
      apply_gauge_covariant_j(mu, nu, apply_dirac(f, field, mass), field);
  const PolyGaussSpinor lhs = dj - jd;

  PolyGaussSpinor expected(f.envelope());
  if (rhs == CommutatorRhs::Tensor) {
    for (int lambda = 0; lambda < 4; ++lambda) {
      PolyGaussSpinor g = f.apply(clifford::gamma(lambda));
      const double fnl = field.field_tensor(nu, lambda);
      const double fml = field.field_tensor(mu, lambda);
      if (fnl != 0.0) {
        expected += Complex(clifford::metric(mu) * fnl) * g.times_coordinate(mu);
      }
      if (fml != 0.0) {
        expected -= Complex(clifford::metric(nu) * fml) * g.times_coordinate(nu);
      }
    }
  } else {
    if (mu != 1 || nu != 2) {
      throw std::invalid_argument("explicit form exists for (1,2) only");
    }
    const auto& E = field.E;
    const auto& B = field.B;
    const PolyGaussSpinor g0 = f.apply(clifford::gamma(0));
    expected += Complex(E[1]) * g0.times_coordinate(1);
    expected -= Complex(E[0]) * g0.times_coordinate(2);
    for (int a = 1; a <= 3; ++a) {
      expected -= Complex(B[2]) * f.apply(clifford::gamma(a)).times_coordinate(a);
      const double b = B[static_cast<std::size_t>(a - 1)];
      if (b != 0.0) {
        expected += Complex(b) * f.apply(clifford::gamma(3)).times_coordinate(a);
      }
    }
  }
  expected *= Complex(0.0, field.charge);

  const PolyGaussSpinor r = lhs - expected;
  const double scale = std::max(combined_scale({&dj, &jd}), 1e-300);
  return r.max_coefficient() / scale;
}

PolyGaussSpinor random_spinor(std::mt19937_64& rng, int max_degree,
                              const Envelope& env) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PolyGaussSpinor f(env);
  for (int i = 0; i < 4; ++i) {
    for (int a = 0; a <= max_degree; ++a) {
      for (int b = 0; a + b <= max_degree; ++b) {
        for (int c = 0; a + b + c <= max_degree; ++c) {
          for (int d = 0; a + b + c + d <= max_degree; ++d) {
            f.component(i).add({a, b, c, d}, Complex(u(rng), u(rng)));
          }
        }
      }
    }
  }
  return f;
}

FieldConfig random_field(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FieldConfig field;
  for (std::size_t i = 0; i < 3; ++i) {
    field.B[i] = u(rng);
    field.E[i] = u(rng);
  }
  field.charge = -1.0;
  return field;
}

}  // namespace vortex::oracle
