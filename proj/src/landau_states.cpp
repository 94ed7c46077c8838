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

#include "vortex/landau_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace vortex {

void QuantumNumbers::validate() const {
  if (l < 0) throw std::invalid_argument("l must be >= 0");
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (l == 0 && ((spin == Spin::Down && oam == OrbitalSign::Positive) ||
                 (spin == Spin::Up && oam == OrbitalSign::Negative))) {
    throw std::invalid_argument(
        "families (spin<0, OAM>0) and (spin>0, OAM<0) require l >= 1");
  }
}

Family QuantumNumbers::family() const {
  if (spin == Spin::Up) {
    return oam == OrbitalSign::Positive ? Family::SpinUpOamNonNegative
                                        : Family::SpinUpOamNegative;
  }
  return oam == OrbitalSign::Positive ? Family::SpinDownOamPositive
                                      : Family::SpinDownOamNonPositive;
}

QuantumNumbers QuantumNumbers::from_signed_l(int signed_l, int p, Spin spin) {
  QuantumNumbers qn;
  qn.spin = spin;
  qn.l = std::abs(signed_l);
  qn.p = p;
  if (signed_l > 0) {
    qn.oam = OrbitalSign::Positive;
  } else if (signed_l < 0) {
    qn.oam = OrbitalSign::Negative;
  } else {
    qn.oam = spin == Spin::Up ? OrbitalSign::Positive : OrbitalSign::Negative;
  }
  qn.validate();
  return qn;
}

QuantumNumbers QuantumNumbers::of_family(Family f, int l, int p) {
  QuantumNumbers qn;
  qn.l = l;
  qn.p = p;
  switch (f) {
    case Family::SpinUpOamNonNegative:
      qn.spin = Spin::Up;
      qn.oam = OrbitalSign::Positive;
      break;
    case Family::SpinDownOamPositive:
      qn.spin = Spin::Down;
      qn.oam = OrbitalSign::Positive;
      break;
    case Family::SpinUpOamNegative:
      qn.spin = Spin::Up;
      qn.oam = OrbitalSign::Negative;
      break;
    case Family::SpinDownOamNonPositive:
      qn.spin = Spin::Down;
      qn.oam = OrbitalSign::Negative;
      break;
  }
  qn.validate();
  return qn;
}

std::string family_label(Family f) {
  switch (f) {
    case Family::SpinUpOamNonNegative: return "up+";
    case Family::SpinDownOamPositive: return "down+";
    case Family::SpinUpOamNegative: return "up-";
    case Family::SpinDownOamNonPositive: return "down-";
  }
  return "?";
}

std::string to_string(const QuantumNumbers& qn) {
  return family_label(qn.family()) + "(l=" + std::to_string(qn.l) +
         ",p=" + std::to_string(qn.p) + ")";
}

void BeamParameters::validate() const {
  if (!(beB >= 0.0) || !std::isfinite(beB)) {
    throw std::invalid_argument("B|e| must be finite and >= 0");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("mass must be finite and > 0");
  }
  if (!std::isfinite(k)) throw std::invalid_argument("k must be finite");
}

EnergyDecomposition energy(const QuantumNumbers& qn, const BeamParameters& bp) {
  qn.validate();
  bp.validate();
  EnergyDecomposition e;
  e.landau_sq = bp.beB * (2.0 * qn.p + qn.l * (1.0 + sign_of(qn.oam)) + 1.0);
  e.zeeman_sq = sign_of(qn.spin) * bp.beB;
  e.total = std::sqrt(bp.mass * bp.mass + bp.k * bp.k + e.mixing_sq());
  return e;
}

int ladder_level(const QuantumNumbers& qn) {
  return qn.p + qn.l * (1 + sign_of(qn.oam)) / 2 + (1 + sign_of(qn.spin)) / 2;
}

int twice_canonical_jz(const QuantumNumbers& qn) {
  return 2 * qn.winding() + sign_of(qn.spin);
}

SolutionForm solution_form(const QuantumNumbers& qn, const BeamParameters& bp,
                           double total_energy) {
  qn.validate();
  bp.validate();
  const double m = bp.mass;
  const double k = bp.k;
  const int l = qn.l;
  const int p = qn.p;

  SolutionForm f;
  f.sqrt_beB = std::sqrt(bp.beB);
  f.main_power = l;
  f.main_laguerre = {p, l};
  f.main_winding = qn.winding();
  if (qn.spin == Spin::Up) {
    f.main_column = {m + total_energy, 0.0, k, 0.0};
    f.so_slot = 3;
  } else {
    f.main_column = {0.0, m + total_energy, 0.0, -k};
    f.so_slot = 2;
  }

  switch (qn.family()) {
    case Family::SpinUpOamNonNegative:
      f.so_coefficient = std::numbers::sqrt2;
      f.so_power = l + 1;
      f.so_winding = l + 1;
      f.so_laguerre = {p, l + 1};
      break;
    case Family::SpinDownOamPositive:
      f.so_coefficient = -std::numbers::sqrt2 * (p + l);
      f.so_power = l - 1;
      f.so_winding = l - 1;
      f.so_laguerre = {p, l - 1};
      break;
    case Family::SpinUpOamNegative:
      f.so_coefficient = -std::numbers::sqrt2 * (p + 1);
      f.so_power = l - 1;
      f.so_winding = -l + 1;
      f.so_laguerre = {p + 1, l - 1};
      break;
    case Family::SpinDownOamNonPositive:
      f.so_coefficient = std::numbers::sqrt2;
      f.so_power = l + 1;
      f.so_winding = -l - 1;
      f.so_laguerre = {p - 1, l + 1};
      break;
  }
  return f;
}

double radial_factor(int power, laguerre::LaguerreIndex idx, double r) {
  return std::pow(r, power) * laguerre::eval(idx, r * r);
}

Complex scalar_mode(const QuantumNumbers& qn, const BeamParameters& bp,
                    const SpacetimePoint& x) {
  const EnergyDecomposition e = energy(qn, bp);
  const double amp =
      radial_factor(qn.l, {qn.p, qn.l}, x.r) * std::exp(-0.5 * x.r * x.r);
  return std::polar(amp, bp.k * x.z - e.total * x.t + qn.winding() * x.phi);
}

SpinorValue evaluate_spinor(const QuantumNumbers& qn, const BeamParameters& bp,
                            const SpacetimePoint& x, SpinOrbit so) {
  const EnergyDecomposition e = energy(qn, bp);
  const SolutionForm f = solution_form(qn, bp, e.total);

  const double envelope = std::exp(-0.5 * x.r * x.r);
  const double plane = bp.k * x.z - e.total * x.t;
  const Complex main = std::polar(
      radial_factor(f.main_power, f.main_laguerre, x.r) * envelope,
      plane + f.main_winding * x.phi);

  SpinorValue out;
  out.point = x;
  for (int i = 0; i < 4; ++i) out.components(i) = main * f.main_column[i];
  if (so == SpinOrbit::Included) {
    const double amp = f.sqrt_beB * f.so_coefficient *
                       radial_factor(f.so_power, f.so_laguerre, x.r) *
                       envelope;
    out.components(f.so_slot) +=
        Complex(0.0, 1.0) * std::polar(amp, plane + f.so_winding * x.phi);
  }
  return out;
}

double normalization_constant(const QuantumNumbers& qn,
                              const BeamParameters& bp) {
  const double e = energy(qn, bp).total;
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * e * (e + bp.mass) *
                         laguerre::factorial_ratio(qn.l, qn.p));
}

std::optional<QuantumNumbers> mixing_partner(const QuantumNumbers& qn) {
  qn.validate();
  switch (qn.family()) {
    case Family::SpinUpOamNonNegative:
      return QuantumNumbers::of_family(Family::SpinDownOamPositive, qn.l + 1,
                                       qn.p);
    case Family::SpinDownOamPositive:
      return QuantumNumbers::of_family(Family::SpinUpOamNonNegative, qn.l - 1,
                                       qn.p);
    case Family::SpinUpOamNegative:
      return QuantumNumbers::of_family(Family::SpinDownOamNonPositive,
                                       qn.l - 1, qn.p + 1);
    case Family::SpinDownOamNonPositive:
      if (qn.p == 0) return std::nullopt;
      return QuantumNumbers::of_family(Family::SpinUpOamNegative, qn.l + 1,
                                       qn.p - 1);
  }
  return std::nullopt;
}

std::vector<SpectrumEntry> spectrum_table(const BeamParameters& bp,
                                          int max_levels,
                                          double max_abs_jz) {
  bp.validate();
  if (max_levels < 1) throw std::invalid_argument("max_levels must be >= 1");
  if (!(max_abs_jz >= 0.5)) {
    throw std::invalid_argument("max_abs_jz must be >= 1/2");
  }
  const int twice_max = static_cast<int>(std::floor(2.0 * max_abs_jz));

  std::vector<SpectrumEntry> out;
  for (Family f : {Family::SpinUpOamNonNegative, Family::SpinDownOamPositive,
                   Family::SpinUpOamNegative, Family::SpinDownOamNonPositive}) {
    const bool needs_l1 = f == Family::SpinDownOamPositive ||
                          f == Family::SpinUpOamNegative;
    for (int l = needs_l1 ? 1 : 0;; ++l) {
      const QuantumNumbers probe = QuantumNumbers::of_family(f, l, 0);
      if (std::abs(twice_canonical_jz(probe)) > twice_max) break;
      for (int p = 0;; ++p) {
        const QuantumNumbers qn = QuantumNumbers::of_family(f, l, p);
        const int level = ladder_level(qn);
        if (level >= max_levels) break;
        SpectrumEntry e;
        e.qn = qn;
        e.energy = energy(qn, bp);
        e.twice_jz = twice_canonical_jz(qn);
        e.level = level;
        e.partner = mixing_partner(qn);
        out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              return std::tuple(a.twice_jz, a.level, sign_of(a.qn.spin)) <
                     std::tuple(b.twice_jz, b.level, sign_of(b.qn.spin));
            });
  return out;
}

}  // namespace vortex
