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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "vortex/laguerre.hpp"
#include "vortex/observables.hpp"

namespace {

using namespace vortex;
namespace ob = vortex::observables;
namespace qd = vortex::quadrature;

const Family kFamilies[] = {Family::SpinUpOamNonNegative,
                            Family::SpinDownOamPositive,
                            Family::SpinUpOamNegative,
                            Family::SpinDownOamNonPositive};

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

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const BeamParameters kSettings[] = {
    {0.1, 1.0, 1.0}, {1.0, 1.0, 3.0}, {2.265e-10, 1.0, 1.0}};

TEST(Currents, GroundFamilyHasNoAzimuthalCurrent) {
  const BeamParameters bp{0.5, 1.0, 1.0};
  for (int l = 0; l <= 4; ++l) {
    const auto qn = QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0);
    for (int i = 0; i <= 100; ++i) {
      EXPECT_EQ(ob::current_density(qn, bp, 0.05 * i).jphi, 0.0);
    }
  }
}

TEST(Currents, NegativeOamSignPattern) {
  const BeamParameters bp{0.5, 1.0, 1.0};
  for (int l = 1; l <= 4; ++l) {
    for (int p = 0; p <= 3; ++p) {
      const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNegative, l, p);
      EXPECT_LT(ob::current_density(qn, bp, 1e-3).jphi, 0.0);
      EXPECT_GT(ob::current_density(qn, bp, 6.0).jphi, 0.0);
    }
  }
}

TEST(Currents, ClosedFormMatchesContraction) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rs(0.0, 3.5), ang(0.0, 6.3), zt(-4, 4);
  for (const BeamParameters& bp : kSettings) {
    for_states(6, 6, [&](const QuantumNumbers& qn) {
      double scale = 0.0;
      for (int i = 0; i < 70; ++i) scale = std::max(scale, ob::current_density(qn, bp, 0.05 * i).j0);
      for (int i = 0; i < 4; ++i) {
        const SpacetimePoint x{rs(rng), ang(rng), zt(rng), zt(rng)};
        const auto c = ob::current_density(qn, bp, x.r);
        const auto d = ob::contract_current(evaluate_spinor(qn, bp, x));
        EXPECT_LE(std::abs(c.j0 - d.j0), 1e-12 * scale);
        EXPECT_LE(std::abs(c.jz - d.jz), 1e-12 * scale);
        EXPECT_LE(std::abs(c.jphi - d.jphi), 1e-12 * scale);
        EXPECT_LE(std::abs(d.jr), 1e-14 * scale);
        EXPECT_GE(c.j0, 0.0);
        EXPECT_EQ(c.jr, 0.0);
      }
    });
  }
}

TEST(Currents, RejectsNegativeRadius) {
  const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 1, 1);
  EXPECT_THROW(ob::current_density(qn, {0.1, 1.0, 1.0}, -0.1), std::invalid_argument);
}

TEST(Integrals, ClosedFormsAgree) {
  for (const BeamParameters& bp : kSettings) {
    for_states(10, 10, [&](const QuantumNumbers& qn) {
      EXPECT_LE(rel(ob::integrated_density_long_form(qn, bp),
                    ob::integrated_density(qn, bp)), 1e-13);
    });
  }
  const BeamParameters bp{0.2, 1.0, 0.6};
  const double e = std::sqrt(1.0 + 0.36);
  EXPECT_NEAR(ob::integrated_density(
                  QuantumNumbers::of_family(Family::SpinDownOamNonPositive, 0, 0), bp),
              2 * std::numbers::pi * e * (e + 1), 1e-13);
}

TEST(Integrals, QuadratureSweep) {
  for (const BeamParameters& bp : kSettings) {
    for_states(6, 6, [&](const QuantumNumbers& qn) {
      const double j0 = ob::integrated_density(qn, bp);
      EXPECT_LE(rel(qd::integrated_density(qn, bp), j0), 1e-10);
      EXPECT_LE(std::abs(qd::integrated_jz(qn, bp) - ob::integrated_jz(qn, bp)), 1e-10 * j0);
      EXPECT_LE(rel(qd::r2_moment(qn, bp), ob::r2_moment(qn, bp)), 1e-9);
      EXPECT_LE(rel(qd::gauge_covariant_jz(qn, bp),
                    ob::gauge_covariant_jz_family_form(qn, bp)), 1e-9);
      const double mz = ob::magnetic_moment(qn, bp);
      const double e = energy(qn, bp).total;
      EXPECT_LE(std::abs(qd::magnetic_moment(qn, bp) - mz),
                1e-10 * (mz == 0.0 ? j0 / e : std::abs(mz)));
    });
  }
}

TEST(Integrals, NormalizedDensityIsOne) {
  const BeamParameters bp{0.3, 1.0, 0.4};
  for_states(3, 3, [&](const QuantumNumbers& qn) {
    const double c = normalization_constant(qn, bp);
    EXPECT_NEAR(c * c * qd::integrated_density(qn, bp), 1.0, 1e-10);
  });
}

TEST(Integrals, LongitudinalCurrent) {
  const BeamParameters still{0.3, 1.0, 0.0};
  const BeamParameters back{0.3, 1.0, -0.8};
  for_states(3, 3, [&](const QuantumNumbers& qn) {
    EXPECT_EQ(ob::integrated_jz(qn, still), 0.0);
    EXPECT_LT(ob::integrated_jz(qn, back), 0.0);
    const auto e = energy(qn, back);
    EXPECT_NEAR(ob::integrated_jz(qn, back) / ob::integrated_density(qn, back),
                -0.8 / std::sqrt(1.0 + 0.64 + e.mixing_sq()), 1e-14);
  });
}

TEST(SpinTexture, Examples) {
  const BeamParameters bp{0.4, 1.0, 0.0};
  const BeamParameters moving{0.4, 1.0, 1.5};
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> rs(0.0, 3.0), ang(0.0, 6.3);
  for_states(4, 3, [&](const QuantumNumbers& qn) {
    for (int i = 0; i < 10; ++i) {
      const double r = rs(rng);
      EXPECT_EQ(ob::spin_texture(qn, bp, r).s_phi, 0.0);
      const auto s = ob::spin_texture(qn, moving, r);
      EXPECT_EQ(s.s_r, 0.0);
      const auto t = ob::contract_spin(evaluate_spinor(qn, moving, {r, ang(rng), 0, 0}));
      const double scale = std::max(1.0, ob::current_density(qn, moving, r).j0);
      EXPECT_LE(std::abs(t.s_r), 1e-13 * scale);
      EXPECT_LE(std::abs(t.s_phi - s.s_phi), 1e-13 * scale);
      EXPECT_LE(std::abs(t.s_z - s.s_z), 1e-13 * scale);
      if (qn.family() == Family::SpinDownOamNonPositive && qn.p == 0) {
        EXPECT_EQ(s.s_phi, 0.0);
      }
    }
  });
}

TEST(Gordon, GroundAndStillStates) {
  const BeamParameters bp{0.3, 1.0, 0.8};
  for (int l = 0; l <= 3; ++l) {
    EXPECT_LE(ob::gordon_residual(
                  QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0), bp,
                  {4.0, 0.1}),
              1e-14);
  }
  const BeamParameters still{0.3, 1.0, 0.0};
  for_states(3, 2, [&](const QuantumNumbers& qn) {
    EXPECT_EQ(ob::gordon_residual(qn, still, {4.0, 0.1}), 0.0);
  });
}

TEST(Gordon, SecondOrderConvergence) {
  const BeamParameters bp{0.3, 1.0, 0.8};
  for_states(3, 3, [&](const QuantumNumbers& qn) {
    if (qn.family() == Family::SpinDownOamNonPositive && qn.p == 0) return;
    const double a = ob::gordon_residual(qn, bp, {4.0, 0.02});
    const double b = ob::gordon_residual(qn, bp, {4.0, 0.01});
    const double c = ob::gordon_residual(qn, bp, {4.0, 0.005});
    EXPECT_GE(std::log2(a / b), 1.9) << to_string(qn);
    EXPECT_GE(std::log2(b / c), 1.9) << to_string(qn);
  });
}

TEST(Gordon, DaggerSpinDensityDoesNotConverge) {
  const BeamParameters bp{0.3, 1.0, 0.8};
  const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 2, 3);
  const double a = ob::gordon_residual(qn, bp, {4.0, 0.01}, ob::GordonSpin::Dagger);
  const double b = ob::gordon_residual(qn, bp, {4.0, 0.005}, ob::GordonSpin::Dagger);
  EXPECT_GT(b, 0.1);
  EXPECT_GT(b, 0.5 * a);
}

TEST(Gordon, RejectsDegenerateGrid) {
  const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 1, 1);
  EXPECT_THROW(ob::gordon_residual(qn, {0.3, 1, 1}, {4.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(ob::gordon_residual(qn, {0.3, 1, 1}, {0.1, 0.1}), std::invalid_argument);
}

TEST(ReducedSpin, GroundIsPure) {
  const BeamParameters bp{0.7, 1.0, 2.0};
  for (int l = 0; l <= 5; ++l) {
    const auto st = ob::reduced_spin_state(
        QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0), bp);
    EXPECT_EQ(st.prob_down, 1.0);
    EXPECT_EQ(st.prob_up, 0.0);
    EXPECT_EQ(st.purity(), 1.0);
  }
}

TEST(ReducedSpin, TraceAndQuadrature) {
  for (const BeamParameters& bp : kSettings) {
    for_states(3, 3, [&](const QuantumNumbers& qn) {
      const auto st = ob::reduced_spin_state(qn, bp);
      EXPECT_NEAR(st.trace(), 1.0, 1e-15);
      const auto e = energy(qn, bp);
      const double majority = ((1 + e.total) * (1 + e.total) + bp.k * bp.k) /
                              (2 * e.total * (e.total + 1));
      EXPECT_NEAR(qn.spin == Spin::Up ? st.prob_up : st.prob_down, majority, 1e-14);
      const bool ground = e.mixing_sq() == 0.0;
      EXPECT_EQ(st.purity() == 1.0, ground);
      const auto rho = qd::reduced_spin_matrix(qn, bp);
      EXPECT_NEAR(rho(0, 0).real(), st.prob_up, 1e-12);
      EXPECT_NEAR(rho(1, 1).real(), st.prob_down, 1e-12);
      EXPECT_LE(std::abs(rho(0, 1)), 1e-13);
    });
  }
}

TEST(AngularMomentum, CanonicalExamples) {
  EXPECT_EQ(ob::canonical_jz(QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 2, 0)), 2.5);
  EXPECT_EQ(ob::canonical_jz(QuantumNumbers::of_family(Family::SpinDownOamNonPositive, 0, 0)), -0.5);
  EXPECT_EQ(ob::canonical_jz(QuantumNumbers::of_family(Family::SpinUpOamNegative, 1, 0)), -0.5);
  EXPECT_EQ(ob::canonical_jz(QuantumNumbers::of_family(Family::SpinDownOamPositive, 3, 0)), 2.5);
}

TEST(AngularMomentum, GaugeCovariantForms) {
  for (const BeamParameters& bp : kSettings) {
    for_states(6, 6, [&](const QuantumNumbers& qn) {
      EXPECT_NEAR(ob::gauge_covariant_jz(qn, bp),
                  ob::gauge_covariant_jz_family_form(qn, bp), 1e-12);
      const double dropped = ob::gauge_covariant_jz(qn, bp, SpinOrbit::Dropped);
      EXPECT_EQ(dropped - std::floor(dropped), 0.5);
      const double quad = qd::gauge_covariant_jz(qn, bp, SpinOrbit::Dropped);
      EXPECT_NEAR(quad, dropped, 1e-12);
      const auto next = QuantumNumbers::of_family(qn.family(), qn.l, qn.p + 1);
      EXPECT_EQ(ob::gauge_covariant_jz(next, bp, SpinOrbit::Dropped) - dropped, 2.0);
    });
  }
  EXPECT_EQ(ob::gauge_covariant_jz(
                QuantumNumbers::of_family(Family::SpinDownOamNonPositive, 3, 0),
                {0.5, 1.0, 1.0}),
            0.5);
}

TEST(MagneticMoment, FormsAgree) {
  for (const BeamParameters& bp : kSettings) {
    for_states(6, 6, [&](const QuantumNumbers& qn) {
      const double a = ob::magnetic_moment(qn, bp);
      const double b = ob::magnetic_moment_spin_form(qn, bp);
      EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
    });
  }
  EXPECT_EQ(ob::magnetic_moment(
                QuantumNumbers::of_family(Family::SpinDownOamNonPositive, 2, 0),
                {0.5, 1.0, 1.0}),
            0.0);
  EXPECT_EQ(ob::orbital_plus_twice_spin(
                QuantumNumbers::of_family(Family::SpinDownOamNonPositive, 2, 0)),
            0);
  EXPECT_THROW(ob::magnetic_moment(
                   QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 0, 0),
                   {0.0, 1.0, 1.0}),
               std::invalid_argument);
}

TEST(Counterflow, Examples) {
  const BeamParameters bp{0.3, 1.0, 1.0};
  for (int l = 0; l <= 4; ++l) {
    EXPECT_TRUE(ob::current_structure(
        QuantumNumbers::of_family(Family::SpinUpOamNonNegative, l, 0), bp)
                    .sign_changes.empty());
    if (l >= 1) {
      EXPECT_TRUE(ob::counterflow_rings(
          QuantumNumbers::of_family(Family::SpinDownOamPositive, l, 0), bp).empty());
    }
    const auto ground = ob::current_structure(
        QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, 0), bp);
    EXPECT_TRUE(ground.sign_changes.empty());
    EXPECT_TRUE(ground.counterflow.empty());
    EXPECT_EQ(ground.dominant_sign, 0);
  }
  const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 2, 3);
  const auto cs = ob::current_structure(qn, bp);
  EXPECT_EQ(cs.sign_changes.size(), 6u);
  EXPECT_EQ(cs.counterflow.size(), 3u);
}

TEST(Counterflow, MatchesRootsAndDenseScan) {
  const BeamParameters bp{0.3, 1.0, 1.0};
  for_states(6, 6, [&](const QuantumNumbers& qn) {
    const auto cs = ob::current_structure(qn, bp);
    ASSERT_EQ(static_cast<int>(cs.sign_changes.size()), ob::predicted_sign_changes(qn));
    const double top = cs.sign_changes.empty() ? 2.0 : cs.sign_changes.back() + 1.0;
    const int n = 20000;
    std::size_t k = 0;
    double prev = ob::current_density(qn, bp, 1e-6).jphi;
    for (int i = 1; i <= n; ++i) {
      const double v = ob::current_density(qn, bp, top * i / n).jphi;
      if (v != 0.0 && prev != 0.0 && (v < 0) != (prev < 0)) {
        ASSERT_LT(k, cs.sign_changes.size());
        EXPECT_GE(cs.sign_changes[k], top * (i - 1) / n - 1e-12);
        EXPECT_LE(cs.sign_changes[k], top * i / n + 1e-12);
        ++k;
      }
      if (v != 0.0) prev = v;
    }
    EXPECT_EQ(k, cs.sign_changes.size()) << to_string(qn);
    for (const auto& ring : cs.counterflow) {
      const double mid = std::isinf(ring.hi) ? ring.lo + 1.0 : 0.5 * (ring.lo + ring.hi);
      EXPECT_EQ(ob::current_density(qn, bp, mid).jphi > 0 ? 1 : -1, -cs.dominant_sign);
    }
  });
}

TEST(Counterflow, CirculationIsCounterClockwise) {
  const BeamParameters bp{0.3, 1.0, 1.0};
  for_states(5, 5, [&](const QuantumNumbers& qn) {
    const auto cs = ob::current_structure(qn, bp);
    const bool ground = qn.family() == Family::SpinDownOamNonPositive && qn.p == 0;
    EXPECT_EQ(cs.dominant_sign, ground ? 0 : 1) << to_string(qn);
    for (std::size_t i = 0; i < cs.interval_signs.size(); ++i) {
      if (cs.interval_signs[i] < 0) {
        ASSERT_FALSE(cs.counterflow.empty());
      }
    }
  });
}

TEST(Counterflow, PlainRadialIntegralVanishesForDownNonPositive) {
  const BeamParameters bp{0.3, 1.0, 1.0};
  const auto rule = laguerre::gauss_laguerre(20, 0);
  for (int l = 0; l <= 4; ++l) {
    for (int p = 1; p <= 4; ++p) {
      const auto qn = QuantumNumbers::of_family(Family::SpinDownOamNonPositive, l, p);
      double net = 0.0, mag = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = std::sqrt(rule.nodes[i]);
        const double v = rule.weights[i] * std::exp(rule.nodes[i]) * 0.5 *
                         ob::current_density(qn, bp, r).jphi / r;
        net += v;
        mag += std::abs(v);
      }
      EXPECT_LE(std::abs(net), 1e-12 * mag);
    }
  }
}

TEST(Profile, GridAndNormalization) {
  const BeamParameters bp{0.3, 1.0, 1.0};
  const auto qn = QuantumNumbers::of_family(Family::SpinUpOamNonNegative, 1, 1);
  ob::ProfileOptions opt;
  opt.r_max = 3.0;
  opt.samples = 7;
  const auto raw = ob::radial_profile(qn, bp, opt);
  ASSERT_EQ(raw.r.size(), 7u);
  EXPECT_EQ(raw.r.front(), 0.0);
  EXPECT_EQ(raw.r.back(), 3.0);
  opt.normalized = true;
  opt.physical_surface_element = true;
  const auto norm = ob::radial_profile(qn, bp, opt);
  const double c = normalization_constant(qn, bp);
  EXPECT_NEAR(norm.j0[3], c * c * raw.j0[3], 1e-15);
  EXPECT_NEAR(norm.jphi[3], c * c * std::sqrt(0.15) * raw.jphi[3], 1e-15);
  opt.samples = 1;
  EXPECT_THROW(ob::radial_profile(qn, bp, opt), std::invalid_argument);
}

}  // namespace
