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

#include "vortex/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vortex/clifford.hpp"
#include "vortex/laguerre.hpp"

namespace vortex::observables {
namespace {

using clifford::gamma;

struct RadialAmplitudes {
  double main = 0.0;  // r^l L_p^l
  double so = 0.0;    // c r^n L, without sqrt(beB)
};

RadialAmplitudes amplitudes(const SolutionForm& f, double r, SpinOrbit so) {
  RadialAmplitudes a;
  a.main = radial_factor(f.main_power, f.main_laguerre, r);
  if (so == SpinOrbit::Included) {
    a.so = f.so_coefficient * radial_factor(f.so_power, f.so_laguerre, r);
  }
  return a;
}

double spin_orbit_sign(const QuantumNumbers& qn) {
  return qn.spin == Spin::Up ? 1.0 : -1.0;
}

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

CurrentSample current_density(const QuantumNumbers& qn,
                              const BeamParameters& bp, double r,
                              SpinOrbit so) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be >= 0");
  const EnergyDecomposition e = energy(qn, bp);
  const SolutionForm f = solution_form(qn, bp, e.total);
  const RadialAmplitudes a = amplitudes(f, r, so);
  const double env = std::exp(-r * r);
  const double mpe = bp.mass + e.total;

  CurrentSample s;
  s.r = r;
  s.j0 = env * (a.main * a.main * (mpe * mpe + bp.k * bp.k) +
                bp.beB * a.so * a.so);
  s.jz = 2.0 * bp.k * mpe * a.main * a.main * env;
  s.jphi = spin_orbit_sign(qn) * 2.0 * mpe * f.sqrt_beB * a.main * a.so * env;
  s.jr = 0.0;
  return s;
}

CurrentSample contract_current(const SpinorValue& psi) {
  const Spinor4 bar_row = psi.components;
  const auto cyl = clifford::gamma_cylindrical(psi.point.phi);
  const Matrix4c& g0 = gamma(0);
  auto bilinear = [&](const Matrix4c& g) {
    return (bar_row.adjoint() * g0 * g * psi.components)(0, 0).real();
  };
  CurrentSample s;
  s.r = psi.point.r;
  s.j0 = psi.components.squaredNorm();
  s.jr = bilinear(cyl.radial);
  s.jphi = bilinear(cyl.azimuthal);
  s.jz = bilinear(gamma(3));
  return s;
}

SpinTextureSample contract_spin(const SpinorValue& psi) {
  const auto cyl = clifford::sigma_cylindrical(psi.point.phi);
  auto expect = [&](const Matrix4c& m) {
    return 0.5 * (psi.components.adjoint() * m * psi.components)(0, 0).real();
  };
  SpinTextureSample s;
  s.r = psi.point.r;
  s.s_r = expect(cyl.radial);
  s.s_phi = expect(cyl.azimuthal);
  s.s_z = expect(clifford::spin_matrix(3));
  return s;
}

double integrated_density(const QuantumNumbers& qn, const BeamParameters& bp) {
  const double e = energy(qn, bp).total;
  return 2.0 * std::numbers::pi * e * (e + bp.mass) *
         laguerre::factorial_ratio(qn.l, qn.p);
}

double integrated_density_long_form(const QuantumNumbers& qn,
                                    const BeamParameters& bp) {
  const double e = energy(qn, bp).total;
  const double m = bp.mass;
  double x = 0.0;
  switch (qn.family()) {
    case Family::SpinUpOamNonNegative: x = qn.l + qn.p + 1; break;
    case Family::SpinDownOamPositive: x = qn.l + qn.p; break;
    case Family::SpinUpOamNegative: x = qn.p + 1; break;
    case Family::SpinDownOamNonPositive: x = qn.p; break;
  }
  return std::numbers::pi * laguerre::factorial_ratio(qn.l, qn.p) *
         (m * m + e * e + 2.0 * m * e + bp.k * bp.k + 2.0 * bp.beB * x);
}

double integrated_jz(const QuantumNumbers& qn, const BeamParameters& bp) {
  return integrated_density(qn, bp) * bp.k / energy(qn, bp).total;
}

SpinTextureSample spin_texture(const QuantumNumbers& qn,
                               const BeamParameters& bp, double r) {
  const CurrentSample c = current_density(qn, bp, r);
  const EnergyDecomposition e = energy(qn, bp);
  const SolutionForm f = solution_form(qn, bp, e.total);
  const RadialAmplitudes a = amplitudes(f, r, SpinOrbit::Included);
  const double mpe = bp.mass + e.total;
  const double spin = sign_of(qn.spin);

  SpinTextureSample s;
  s.r = r;
  s.s_r = 0.0;
  s.s_phi = spin * 0.5 * bp.k / mpe * c.jphi;
  s.s_z = spin * 0.5 * std::exp(-r * r) *
          (a.main * a.main * (mpe * mpe + bp.k * bp.k) -
           bp.beB * a.so * a.so);
  return s;
}

double gordon_residual(const QuantumNumbers& qn, const BeamParameters& bp,
                       const RadialGrid& grid, GordonSpin convention) {
  if (!(grid.h > 0.0) || !(grid.r_max > 2.0 * grid.h) ||
      !std::isfinite(grid.r_max)) {
    throw std::invalid_argument("radial grid needs h > 0 and r_max > 2h");
  }
  energy(qn, bp);
  const double m = bp.mass;
  const double scale_to_physical = std::sqrt(0.5 * bp.beB);
  const Matrix4c& g0 = gamma(0);

  auto spinor = [&](double r) {
    return evaluate_spinor(qn, bp, SpacetimePoint{r, 0.0, 0.0, 0.0});
  };
  // r S_phi, azimuthal spin at phi = 0 is the Sigma_y expectation.
  auto r_s_phi = [&](double r) {
    const Spinor4 psi = spinor(r).components;
    const Matrix4c& sy = clifford::spin_matrix(2);
    const Matrix4c w = convention == GordonSpin::Bar ? Matrix4c(g0 * sy) : sy;
    return r * 0.5 * (psi.adjoint() * w * psi)(0, 0).real();
  };
  const double curl_weight = convention == GordonSpin::Bar ? 1.0 / m : 1.0;

  const int n = static_cast<int>(std::floor(grid.r_max / grid.h));
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 1; i < n; ++i) {
    const double r = i * grid.h;
    const SpinorValue psi = spinor(r);
    const double jz = contract_current(psi).jz;
    const double bar_psi =
        (psi.components.adjoint() * g0 * psi.components)(0, 0).real();
    const double orbital = bp.k / m * bar_psi;
    const double curl = scale_to_physical / r *
                        (r_s_phi(r + grid.h) - r_s_phi(r - grid.h)) /
                        (2.0 * grid.h);
    worst = std::max(worst, std::abs(jz - orbital - curl_weight * curl));
    scale = std::max(scale, std::abs(jz));
  }
  return scale > 0.0 ? worst / scale : worst;
}

ReducedSpinState reduced_spin_state(const QuantumNumbers& qn,
                                    const BeamParameters& bp) {
  const double minority = mixing_fraction(qn, bp);
  const double majority = 1.0 - minority;
  ReducedSpinState s;
  if (qn.spin == Spin::Up) {
    s.prob_up = majority;
    s.prob_down = minority;
  } else {
    s.prob_up = minority;
    s.prob_down = majority;
  }
  return s;
}

double canonical_jz(const QuantumNumbers& qn) {
  qn.validate();
  return 0.5 * twice_canonical_jz(qn);
}

double mixing_fraction(const QuantumNumbers& qn, const BeamParameters& bp) {
  const EnergyDecomposition e = energy(qn, bp);
  return e.mixing_sq() / (2.0 * e.total * (e.total + bp.mass));
}

double r2_moment(const QuantumNumbers& qn, const BeamParameters& bp,
                 SpinOrbit so) {
  const EnergyDecomposition e = energy(qn, bp);
  const double ratio = laguerre::factorial_ratio(qn.l, qn.p);
  const double main = 2.0 * e.total * (e.total + bp.mass) *
                      (2.0 * qn.p + qn.l + 1.0);
  if (so == SpinOrbit::Dropped) {
    // Only the main term: its norm times <r~^2> of the scalar mode.
    const double mpe = bp.mass + e.total;
    return std::numbers::pi * ratio * (mpe * mpe + bp.k * bp.k) *
           (2.0 * qn.p + qn.l + 1.0);
  }
  return std::numbers::pi * ratio *
         (main + sign_of(qn.spin) * e.mixing_sq());
}

double gauge_covariant_jz(const QuantumNumbers& qn, const BeamParameters& bp,
                          SpinOrbit so) {
  if (so == SpinOrbit::Dropped) {
    return canonical_jz(qn) + (2.0 * qn.p + qn.l + 1.0);
  }
  // r2_moment / integrated_density, simplified.
  return canonical_jz(qn) + (2.0 * qn.p + qn.l + 1.0) +
         sign_of(qn.spin) * mixing_fraction(qn, bp);
}

double gauge_covariant_jz_family_form(const QuantumNumbers& qn,
                                      const BeamParameters& bp) {
  const double d = mixing_fraction(qn, bp);
  const double p = qn.p;
  const double l = qn.l;
  switch (qn.family()) {
    case Family::SpinUpOamNonNegative: return 2 * p + 2 * l + 1.5 + d;
    case Family::SpinDownOamPositive: return 2 * p + 2 * l + 0.5 - d;
    case Family::SpinUpOamNegative: return 2 * p + 1.5 + d;
    case Family::SpinDownOamNonPositive: return 2 * p + 0.5 - d;
  }
  return 0.0;
}

int orbital_plus_twice_spin(const QuantumNumbers& qn) {
  qn.validate();
  return 2 * qn.p + qn.l * (1 + sign_of(qn.oam)) + 1 + sign_of(qn.spin);
}

double magnetic_moment(const QuantumNumbers& qn, const BeamParameters& bp) {
  if (!(bp.beB > 0.0)) {
    throw std::invalid_argument("magnetic moment needs B|e| > 0");
  }
  const EnergyDecomposition e = energy(qn, bp);
  return -(integrated_density(qn, bp) / e.total) * e.mixing_sq() /
         (2.0 * bp.beB);
}

double magnetic_moment_spin_form(const QuantumNumbers& qn,
                                 const BeamParameters& bp) {
  if (!(bp.beB > 0.0)) {
    throw std::invalid_argument("magnetic moment needs B|e| > 0");
  }
  const double e = energy(qn, bp).total;
  return -(integrated_density(qn, bp) / (2.0 * e)) *
         orbital_plus_twice_spin(qn);
}

int predicted_sign_changes(const QuantumNumbers& qn) {
  qn.validate();
  switch (qn.family()) {
    case Family::SpinUpOamNonNegative:
    case Family::SpinDownOamPositive: return 2 * qn.p;
    case Family::SpinUpOamNegative: return 2 * qn.p + 1;
    case Family::SpinDownOamNonPositive: return std::max(2 * qn.p - 1, 0);
  }
  return 0;
}

CurrentStructure current_structure(const QuantumNumbers& qn,
                                   const BeamParameters& bp) {
  const EnergyDecomposition e = energy(qn, bp);
  const SolutionForm f = solution_form(qn, bp, e.total);
  CurrentStructure out;
  if (f.so_laguerre.p < 0 || bp.beB == 0.0) return out;

  std::vector<double> x = laguerre::positive_roots(f.main_laguerre);
  for (double root : laguerre::positive_roots(f.so_laguerre)) x.push_back(root);
  std::sort(x.begin(), x.end());
  for (double root : x) out.sign_changes.push_back(std::sqrt(root));

  auto jphi = [&](double r) { return current_density(qn, bp, r).jphi; };
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), out.sign_changes.begin(), out.sign_changes.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double mid = i + 1 < edges.size() ? 0.5 * (edges[i] + edges[i + 1])
                                            : edges[i] + 1.0;
    out.interval_signs.push_back(static_cast<int>(sgn(jphi(mid))));
  }

  // Circulation moment int r~^2 jphi dr~ has the sign of -M_z.
  out.dominant_sign = -static_cast<int>(sgn(magnetic_moment(qn, bp)));

  for (std::size_t i = 0; i < out.interval_signs.size(); ++i) {
    if (out.interval_signs[i] != out.dominant_sign) {
      RadialInterval ring;
      ring.lo = edges[i];
      ring.hi = i + 1 < edges.size()
                    ? edges[i + 1]
                    : std::numeric_limits<double>::infinity();
      out.counterflow.push_back(ring);
    }
  }
  return out;
}

std::vector<RadialInterval> counterflow_rings(const QuantumNumbers& qn,
                                              const BeamParameters& bp) {
  return current_structure(qn, bp).counterflow;
}

RadialProfile radial_profile(const QuantumNumbers& qn, const BeamParameters& bp,
                             const ProfileOptions& options) {
  if (options.samples < 2) throw std::invalid_argument("samples must be >= 2");
  if (!(options.r_max > 0.0) || !std::isfinite(options.r_max)) {
    throw std::invalid_argument("r_max must be finite and > 0");
  }
  energy(qn, bp);
  RadialProfile out;
  out.qn = qn;
  out.bp = bp;
  out.options = options;
  double weight = 1.0;
  if (options.normalized) {
    const double c = normalization_constant(qn, bp);
    weight = c * c;
  }
  const double surface =
      options.physical_surface_element ? std::sqrt(0.5 * bp.beB) : 1.0;
  const auto n = static_cast<std::size_t>(options.samples);
  for (auto v : {&out.r, &out.j0, &out.jz, &out.jphi, &out.s_phi}) {
    v->reserve(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = options.r_max * static_cast<double>(i) /
                     static_cast<double>(n - 1);
    const CurrentSample c = current_density(qn, bp, r);
    const SpinTextureSample s = spin_texture(qn, bp, r);
    out.r.push_back(r);
    out.j0.push_back(weight * c.j0);
    out.jz.push_back(weight * c.jz);
    out.jphi.push_back(weight * surface * c.jphi);
    out.s_phi.push_back(weight * s.s_phi);
  }
  return out;
}

}  // namespace vortex::observables

namespace vortex::quadrature {

double transverse_integral(const QuantumNumbers& qn, const BeamParameters& bp,
                           const std::function<double(const SpinorValue&)>& f,
                           SpinOrbit so, int nodes, int phi_points) {
  qn.validate();
  if (nodes <= 0) nodes = (qn.l + 2 * qn.p + 8) / 2 + 2;
  if (phi_points < 1) throw std::invalid_argument("phi_points must be >= 1");
  const auto rule = laguerre::gauss_laguerre(nodes, 0);
  const double dphi = 2.0 * std::numbers::pi / phi_points;
  double total = 0.0;
  for (int j = 0; j < phi_points; ++j) {
    const double phi = j * dphi;
    double radial = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i];
      const SpinorValue psi =
          evaluate_spinor(qn, bp, SpacetimePoint{std::sqrt(x), phi, 0.0, 0.0},
                          so);
      radial += rule.weights[i] * std::exp(x) * f(psi);
    }
    total += 0.5 * radial * dphi;
  }
  return total;
}

double integrated_density(const QuantumNumbers& qn, const BeamParameters& bp) {
  return transverse_integral(qn, bp, [](const SpinorValue& psi) {
    return observables::contract_current(psi).j0;
  });
}

double integrated_jz(const QuantumNumbers& qn, const BeamParameters& bp) {
  return transverse_integral(qn, bp, [](const SpinorValue& psi) {
    return observables::contract_current(psi).jz;
  });
}

double r2_moment(const QuantumNumbers& qn, const BeamParameters& bp,
                 SpinOrbit so) {
  return transverse_integral(
      qn, bp,
      [](const SpinorValue& psi) {
        return psi.point.r * psi.point.r * psi.components.squaredNorm();
      },
      so);
}

double gauge_covariant_jz(const QuantumNumbers& qn, const BeamParameters& bp,
                          SpinOrbit so) {
  auto density = [](const SpinorValue& psi) {
    return psi.components.squaredNorm();
  };
  return observables::canonical_jz(qn) +
         r2_moment(qn, bp, so) / transverse_integral(qn, bp, density, so);
}

double magnetic_moment(const QuantumNumbers& qn, const BeamParameters& bp) {
  if (!(bp.beB > 0.0)) {
    throw std::invalid_argument("magnetic moment needs B|e| > 0");
  }
  const double to_physical = std::sqrt(2.0 / bp.beB);
  return transverse_integral(qn, bp, [&](const SpinorValue& psi) {
    return -0.5 * to_physical * psi.point.r *
           observables::contract_current(psi).jphi;
  });
}

Eigen::Matrix2cd reduced_spin_matrix(const QuantumNumbers& qn,
                                     const BeamParameters& bp) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      auto part = [a, b](const SpinorValue& psi, bool imag) {
        const Spinor4& c = psi.components;
        const Complex v =
            c(a) * std::conj(c(b)) + c(a + 2) * std::conj(c(b + 2));
        return imag ? v.imag() : v.real();
      };
      const double re = transverse_integral(
          qn, bp, [&](const SpinorValue& p) { return part(p, false); });
      const double im = transverse_integral(
          qn, bp, [&](const SpinorValue& p) { return part(p, true); });
      rho(a, b) = Complex(re, im);
    }
  }
  return rho / rho.trace().real();
}

}  // namespace vortex::quadrature
