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

#include "vortex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "vortex/clifford.hpp"
#include "vortex/laguerre.hpp"
#include "vortex/landau_states.hpp"
#include "vortex/observables.hpp"
#include "vortex/operator_oracle.hpp"
#include "vortex/units.hpp"

namespace vortex::verify {
namespace {

constexpr Family kFamilies[] = {
    Family::SpinUpOamNonNegative, Family::SpinDownOamPositive,
    Family::SpinUpOamNegative, Family::SpinDownOamNonPositive};

bool exists(Family f, int l) {
  return l >= 1 || f == Family::SpinUpOamNonNegative ||
         f == Family::SpinDownOamNonPositive;
}

template <typename Fn>
void for_states(int max_l, int max_p, Fn&& fn) {
  for (Family f : kFamilies) {
    for (int l = 0; l <= max_l; ++l) {
      if (!exists(f, l)) continue;
      for (int p = 0; p <= max_p; ++p) fn(QuantumNumbers::of_family(f, l, p));
    }
  }
}

double rel(double a, double b) {
  const double s = std::max(std::abs(b), 1e-300);
  return std::abs(a - b) / s;
}

const BeamParameters kDiracSets[] = {
    {1e-10, 1.0, 1.0}, {0.1, 1.0, 1.0}, {1.0, 1.0, 3.0}};
const BeamParameters kQuadratureSets[] = {
    {0.1, 1.0, 1.0}, {1.0, 1.0, 3.0}, {2.265e-10, 1.0, 1.0}};

}  // namespace

Check make_check(std::string name, double residual, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

std::vector<Check> clifford_suite(const Options& opt) {
  double anti = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      anti = std::max(anti, clifford::check_anticommutator(mu, nu));
    }
  }
  double comm = 0.0;
  for (int a = 0; a < 256; ++a) {
    comm = std::max(comm, clifford::check_sigma_commutator(
                              a & 3, (a >> 2) & 3, (a >> 4) & 3, a >> 6));
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  double cyl = 0.0;
  const Matrix4c& id = clifford::identity();
  for (int i = 0; i < 100; ++i) {
    const double phi = angle(rng);
    const auto g = clifford::gamma_cylindrical(phi);
    const auto s = clifford::sigma_cylindrical(phi);
    cyl = std::max({cyl, clifford::max_norm(g.radial * g.radial + id),
                    clifford::max_norm(g.azimuthal * g.azimuthal + id),
                    clifford::max_norm(s.radial * s.radial - id),
                    clifford::max_norm(s.azimuthal * s.azimuthal - id)});
  }
  return {make_check("anticommutator", anti, 1e-15),
          make_check("sigma_commutator_256", comm, 1e-14),
          make_check("cylindrical_squares", cyl, 1e-14)};
}

std::vector<Check> laguerre_suite(const Options& opt) {
  double ortho = 0.0;
  double second = 0.0;
  for (int l = 0; l <= 10; ++l) {
    for (int p1 = 0; p1 <= 10; ++p1) {
      const double n1 = laguerre::factorial_ratio(l, p1);
      for (int p2 = 0; p2 <= 10; ++p2) {
        const double v = laguerre::weighted_inner_product(p1, p2, l, l);
        const double scale =
            std::sqrt(n1 * laguerre::factorial_ratio(l, p2));
        ortho = std::max(ortho, std::abs(v - (p1 == p2 ? n1 : 0.0)) / scale);
      }
      second = std::max(
          second, rel(laguerre::weighted_inner_product(p1, p1, l, l + 1),
                      n1 * (2.0 * p1 + l + 1.0)));
    }
  }

  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_int_distribution<int> index(0, 10);
  std::uniform_real_distribution<double> xs(0.0, 20.0);
  double rec = 0.0;
  double deriv = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int p = index(rng);
    const int l = index(rng);
    const double x = xs(rng);
    rec = std::max(rec, laguerre::check_recurrences(p, l, x));
    if (i < 50) {
      const double h = 1e-5 * std::max(1.0, x);
      const double fd = (laguerre::eval({p, l}, x + h) -
                         laguerre::eval({p, l}, x - h)) / (2.0 * h);
      const double d = laguerre::eval_derivative({p, l}, x);
      deriv = std::max(deriv, std::abs(fd - d) / std::max(1.0, std::abs(d)));
    }
  }

  double roots = 0.0;
  double interlace_failures = 0.0;
  for (int l = 0; l <= 10; ++l) {
    for (int p = 1; p <= 10; ++p) {
      const auto r = laguerre::positive_roots({p, l});
      const auto s = laguerre::positive_roots({p, l + 1});
      if (static_cast<int>(r.size()) != p) interlace_failures += 1.0;
      for (double x : r) {
        const double slope =
            std::max(1.0, std::abs(laguerre::eval_derivative({p, l}, x)));
        roots = std::max(roots, std::abs(laguerre::eval({p, l}, x)) / slope);
      }
      // 0 < r_1 < s_1 < r_2 < s_2 < ... : roots move outward with l.
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] < s[i])) interlace_failures += 1.0;
        if (i + 1 < r.size() && !(s[i] < r[i + 1])) interlace_failures += 1.0;
      }
    }
  }
  return {make_check("orthogonality_p_l_le_10", ortho, 1e-11),
          make_check("second_moment_p_l_le_10", second, 1e-11),
          make_check("recurrences_100_points", rec, 1e-12),
          make_check("derivative_vs_central_difference", deriv, 1e-7),
          make_check("root_residual", roots, 1e-10),
          make_check("root_count_and_interlacing", interlace_failures, 0.0)};
}

std::vector<Check> landau_states_suite(const Options& opt) {
  double dirac = 0.0;
  for (const BeamParameters& bp : kDiracSets) {
    for_states(8, 8, [&](const QuantumNumbers& qn) {
      const double offset =
          opt.sabotage_energy ? 1e-6 * energy(qn, bp).total : 0.0;
      dirac = std::max(dirac, oracle::dirac_residual(qn, bp, offset));
    });
  }
  const BeamParameters bp{0.1, 1.0, 1.0};
  double squared = 0.0;
  double eigen = 0.0;
  for_states(4, 4, [&](const QuantumNumbers& qn) {
    squared = std::max(squared, oracle::squared_dirac_residual(qn, bp));
    const auto f = oracle::from_solution(qn, bp);
    const auto fit = oracle::fit_eigenvalue(f, oracle::apply_canonical_jz(f));
    eigen = std::max({eigen, fit.residual,
                      std::abs(fit.eigenvalue - Complex(0.5 * twice_canonical_jz(qn)))});
  });

  double ground = 0.0;
  for (int l = 0; l <= 8; ++l) {
    const auto qn = QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0);
    const auto e = energy(qn, bp);
    ground = std::max({ground, std::abs(e.mixing_sq()),
                       std::abs(e.total - std::hypot(bp.mass, bp.k))});
  }

  double partner_failures = 0.0;
  const auto table = spectrum_table(bp, 6, 6.5);
  for (const SpectrumEntry& s : table) {
    if (!s.partner) {
      const bool protected_ground =
          s.qn.family() == Family::SpinDownOamNonPositive && s.qn.p == 0;
      if (!protected_ground) partner_failures += 1.0;
      continue;
    }
    const QuantumNumbers& q = *s.partner;
    if (q.spin == s.qn.spin || ladder_level(q) != s.level ||
        twice_canonical_jz(q) != s.twice_jz ||
        mixing_partner(q) != std::optional<QuantumNumbers>(s.qn)) {
      partner_failures += 1.0;
    }
  }
  return {make_check("dirac_residual_l_p_le_8_three_sets", dirac, 1e-10),
          make_check("squared_dirac_residual", squared, 1e-10),
          make_check("canonical_jz_eigenvalue", eigen, 1e-10),
          make_check("ground_family_energy", ground, 0.0),
          make_check("spectrum_mixing_partners", partner_failures, 0.0)};
}

std::vector<Check> observables_suite(const Options& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_real_distribution<double> rs(0.0, 3.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> zt(-5.0, 5.0);

  const BeamParameters bp{0.3, 1.0, 0.8};
  double pointwise = 0.0;
  double radial = 0.0;
  double stationarity = 0.0;
  for_states(6, 6, [&](const QuantumNumbers& qn) {
    double scale = 0.0;
    for (int i = 0; i < 64; ++i) {
      scale = std::max(scale, observables::current_density(qn, bp, 0.05 * i).j0);
    }
    for (int i = 0; i < 8; ++i) {
      const SpacetimePoint x{rs(rng), angle(rng), zt(rng), zt(rng)};
      const auto c = observables::current_density(qn, bp, x.r);
      const auto d = observables::contract_current(evaluate_spinor(qn, bp, x));
      const auto s = observables::spin_texture(qn, bp, x.r);
      const auto t = observables::contract_spin(evaluate_spinor(qn, bp, x));
      pointwise = std::max({pointwise, std::abs(c.j0 - d.j0) / scale,
                            std::abs(c.jz - d.jz) / scale,
                            std::abs(c.jphi - d.jphi) / scale,
                            std::abs(s.s_phi - t.s_phi) / scale,
                            std::abs(s.s_z - t.s_z) / scale});
      radial = std::max({radial, std::abs(d.jr) / scale, std::abs(t.s_r) / scale});
      const SpacetimePoint y{x.r, angle(rng), zt(rng), zt(rng)};
      const auto e = observables::contract_current(evaluate_spinor(qn, bp, y));
      stationarity = std::max(
          {stationarity, std::abs(e.j0 - d.j0) / scale,
           std::abs(e.jz - d.jz) / scale, std::abs(e.jphi - d.jphi) / scale});
    }
  });

  double quad = 0.0;
  double long_form = 0.0;
  double moments = 0.0;
  double spin_state = 0.0;
  double half_integer = 0.0;
  for (const BeamParameters& q : kQuadratureSets) {
    for_states(6, 6, [&](const QuantumNumbers& qn) {
      const double mz = observables::magnetic_moment(qn, q);
      const double mz_scale = observables::integrated_density(qn, q) /
                              energy(qn, q).total;
      quad = std::max(
          {quad,
           rel(quadrature::integrated_density(qn, q),
               observables::integrated_density(qn, q)),
           std::abs(quadrature::integrated_jz(qn, q) -
                    observables::integrated_jz(qn, q)) /
               observables::integrated_density(qn, q),
           rel(quadrature::r2_moment(qn, q), observables::r2_moment(qn, q)),
           rel(quadrature::gauge_covariant_jz(qn, q),
               observables::gauge_covariant_jz_family_form(qn, q)),
           std::abs(quadrature::magnetic_moment(qn, q) - mz) /
               (mz == 0.0 ? mz_scale : std::abs(mz))});
      long_form = std::max(long_form,
                           rel(observables::integrated_density_long_form(qn, q),
                               observables::integrated_density(qn, q)));
      moments = std::max(
          {moments,
           std::abs(observables::magnetic_moment_spin_form(qn, q) - mz) /
               mz_scale,
           std::abs(observables::gauge_covariant_jz(qn, q) -
                    observables::gauge_covariant_jz_family_form(qn, q))});
      const double j = quadrature::gauge_covariant_jz(qn, q, SpinOrbit::Dropped);
      half_integer = std::max(
          half_integer, std::abs(j - (std::round(j - 0.5) + 0.5)));
      if (qn.l <= 3 && qn.p <= 3) {
        const auto rho = quadrature::reduced_spin_matrix(qn, q);
        const auto st = observables::reduced_spin_state(qn, q);
        spin_state = std::max(
            {spin_state, std::abs(st.trace() - 1.0),
             std::abs(rho(0, 0).real() - st.prob_up),
             std::abs(rho(1, 1).real() - st.prob_down), std::abs(rho(0, 1)),
             std::abs(rho(1, 0))});
      }
    });
  }

  double order_error = 0.0;
  const QuantumNumbers gordon_states[] = {
      QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 2, 3),
      QuantumNumbers::of_family(Family::SpinDownOamPositive, 1, 2),
      QuantumNumbers::of_family(Family::SpinUpOamNegative, 2, 1)};
  for (const auto& qn : gordon_states) {
    const double coarse = observables::gordon_residual(qn, bp, {4.0, 0.02});
    const double fine = observables::gordon_residual(qn, bp, {4.0, 0.01});
    const double order = std::log2(coarse / fine);
    order_error = std::max(order_error, std::max(0.0, 1.9 - order));
  }
  double gordon_ground = 0.0;
  for (int l = 0; l <= 4; ++l) {
    gordon_ground = std::max(
        gordon_ground,
        observables::gordon_residual(
            QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0), bp,
            {4.0, 0.05}));
  }

  double ring_failures = 0.0;
  for_states(6, 6, [&](const QuantumNumbers& qn) {
    const auto cs = observables::current_structure(qn, bp);
    if (static_cast<int>(cs.sign_changes.size()) !=
        observables::predicted_sign_changes(qn)) {
      ring_failures += 1.0;
    }
    // Dense scan oracle.
    const double r_max =
        cs.sign_changes.empty() ? 1.0 : cs.sign_changes.back() + 1.0;
    int scanned = 0;
    double prev = observables::current_density(qn, bp, 1e-6).jphi;
    for (int i = 1; i <= 20000; ++i) {
      const double v =
          observables::current_density(qn, bp, r_max * i / 20000.0).jphi;
      if ((v < 0.0 && prev > 0.0) || (v > 0.0 && prev < 0.0)) ++scanned;
      if (v != 0.0) prev = v;
    }
    if (scanned != static_cast<int>(cs.sign_changes.size())) ring_failures += 1.0;
    if (qn.oam == OrbitalSign::Negative && !cs.interval_signs.empty() &&
        (cs.interval_signs.front() != -1 || cs.interval_signs.back() != 1)) {
      ring_failures += 1.0;
    }
  });

  double ground = 0.0;
  for (int l = 0; l <= 6; ++l) {
    const auto qn = QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0);
    const auto st = observables::reduced_spin_state(qn, bp);
    ground = std::max({ground, std::abs(st.purity() - 1.0),
                       std::abs(observables::magnetic_moment(qn, bp)),
                       std::abs(observables::gauge_covariant_jz(qn, bp) - 0.5)});
    for (int i = 0; i < 512; ++i) {
      ground = std::max(
          ground, std::abs(observables::current_density(qn, bp, 8.0 * i / 511).jphi));
    }
  }

  return {make_check("closed_form_vs_pointwise_currents", pointwise, 1e-12),
          make_check("radial_current_and_spin", radial, 1e-14),
          make_check("stationarity", stationarity, 1e-12),
          make_check("quadrature_vs_closed_form", quad, 1e-9),
          make_check("density_long_form", long_form, 1e-13),
          make_check("moment_and_jz_forms", moments, 1e-12),
          make_check("reduced_spin_state", spin_state, 1e-12),
          make_check("spin_orbit_dropped_half_integer", half_integer, 1e-12),
          make_check("gordon_second_order", order_error, 0.0),
          make_check("gordon_ground_family", gordon_ground, 1e-14),
          make_check("counterflow_structure", ring_failures, 0.0),
          make_check("ground_state_protection", ground, 0.0)};
}

std::vector<Check> operator_oracle_suite(const Options& opt) {
  std::mt19937_64 rng(opt.seed + 3);
  oracle::Envelope env;
  env.length_scale = 1.0;
  env.k = 0.7;
  env.energy = 1.3;

  std::vector<oracle::FieldConfig> fields{oracle::FieldConfig{}};
  while (fields.size() < 5) fields.push_back(oracle::random_field(rng));
  std::vector<oracle::PolyGaussSpinor> spinors;
  for (int i = 0; i < 20; ++i) spinors.push_back(oracle::random_spinor(rng, 2, env));

  double jj = 0.0;
  double tensor = 0.0;
  double explicit12 = 0.0;
  for (const auto& field : fields) {
    for (const auto& f : spinors) {
      jj = std::max({jj, oracle::commutator_jj_residual(1, 2, field, f),
                     oracle::commutator_jj_residual(2, 3, field, f),
                     oracle::commutator_jj_residual(3, 1, field, f)});
      explicit12 = std::max(
          explicit12, oracle::commutator_dirac_j_residual(
                          1, 2, field, f, oracle::CommutatorRhs::Explicit));
    }
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        tensor = std::max(tensor, oracle::commutator_dirac_j_residual(
                                      mu, nu, field, spinors.front()));
      }
    }
  }
  oracle::FieldConfig ez;
  ez.E = {0.0, 0.0, 0.8};
  double pure_ez = 0.0;
  for (const auto& f : spinors) {
    pure_ez = std::max(pure_ez, oracle::commutator_dirac_j_residual(
                                    1, 2, ez, f, oracle::CommutatorRhs::Explicit));
  }
  return {make_check("jj_commutator_20x5", jj, 1e-12),
          make_check("dirac_j_commutator_tensor", tensor, 1e-12),
          make_check("dirac_j12_commutator_explicit", explicit12, 1e-12),
          make_check("dirac_j12_commutator_pure_ez", pure_ez, 1e-12)};
}

std::vector<Check> units_suite(const Options&) {
  const auto one = units::convert_units(1.0);
  const auto four = units::convert_units(4.0);
  // hbar omega_c / (m c^2) with omega_c = |e| B / m.
  constexpr double kElectronMassKg = 9.1093837015e-31;
  const double mc2 = kElectronMassKg * units::kSpeedOfLight * units::kSpeedOfLight;
  const double cyclotron = units::kHbar * units::kElementaryCharge / kElectronMassKg / mc2;
  const auto electron = units::convert_units(1.0, units::kElectronMassKeV);
  return {make_check("magnetic_length_1T_36nm",
                     std::abs(one.length_nm() - 36.0) / 36.0, 0.02),
          make_check("magnetic_length_scaling",
                     std::abs(four.length_m / one.length_m - 0.5), 1e-15),
          make_check("beB_over_m2_vs_cyclotron",
                     rel(electron.beB_over_m2, cyclotron), 1e-8)};
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"clifford_algebra", clifford_suite},
      {"laguerre", laguerre_suite},
      {"landau_states", landau_states_suite},
      {"observables", observables_suite},
      {"operator_oracle", operator_oracle_suite},
      {"units", units_suite}};
  return suites;
}

std::vector<Check> run_all(const Options& opt) {
  std::vector<Check> out;
  for (const Suite& s : all_suites()) {
    for (Check c : s.run(opt)) {
      c.name = s.name + "." + c.name;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace vortex::verify
