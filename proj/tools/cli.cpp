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

#include "vortex/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "vortex/observables.hpp"
#include "vortex/units.hpp"
#include "vortex/verify.hpp"

namespace vortex::cli {
namespace {

constexpr double kCheckTolerance = 1e-9;

std::string spin_name(Spin s) { return s == Spin::Up ? "up" : "down"; }

std::string state_label(const QuantumNumbers& qn) {
  return family_label(qn.family()) + "(l=" + std::to_string(qn.winding()) +
         ",p=" + std::to_string(qn.p) + ")";
}

double rel_error(double got, double want, double scale) {
  return std::abs(got - want) / std::max(std::abs(want), scale);
}

void add_beam_meta(const RunConfig& cfg, Table& t) {
  const auto conv = units::convert_units(cfg.b_tesla, cfg.m_kev);
  t.meta.emplace_back("version", kVersion);
  t.meta.emplace_back("B_tesla", format_number(cfg.b_tesla));
  t.meta.emplace_back("m_keV", format_number(cfg.m_kev));
  t.meta.emplace_back("k_over_m", format_number(cfg.k_over_m));
  t.meta.emplace_back("beB_over_m2", format_number(conv.beB_over_m2));
  t.meta.emplace_back("rtilde_unit_nm", format_number(conv.length_nm()));
  t.meta.emplace_back("units",
                      "hbar = c = m = 1; r~ = sqrt(|e|B/2) r; states unnormalized "
                      "unless normalized = true");
}

void add_state_meta(const QuantumNumbers& qn, Table& t) {
  t.meta.emplace_back("family", family_label(qn.family()));
  t.meta.emplace_back("l", std::to_string(qn.winding()));
  t.meta.emplace_back("p", std::to_string(qn.p));
  t.meta.emplace_back("spin", spin_name(qn.spin));
}

std::string joined(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_number(v[i]);
  }
  return s.empty() ? "none" : s;
}

}  // namespace

void RunConfig::validate() const {
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw std::invalid_argument("--rmax must be > 0");
  }
  if (!(b_tesla >= 0.0) || !std::isfinite(b_tesla)) {
    throw std::invalid_argument("--B must be >= 0");
  }
  if (!(m_kev > 0.0) || !std::isfinite(m_kev)) {
    throw std::invalid_argument("--m-kev must be > 0");
  }
  if (!std::isfinite(k_over_m)) throw std::invalid_argument("--k-over-m must be finite");
  if (p && *p < 0) throw std::invalid_argument("--p must be >= 0");
  if (levels < 1) throw std::invalid_argument("--levels must be >= 1");
  if (!(max_jz >= 0.5)) throw std::invalid_argument("--max-jz must be >= 0.5");
  if (max_abs_l < 0 || max_p < 0) {
    throw std::invalid_argument("--lmax and --pmax must be >= 0");
  }
  if (figure < 1 || figure > 3) throw std::invalid_argument("--fig must be 1, 2 or 3");
  if (!sabotage.empty() && sabotage != "energy") {
    throw std::invalid_argument("--sabotage accepts only 'energy'");
  }
}

BeamParameters RunConfig::beam() const {
  BeamParameters bp;
  bp.beB = units::convert_units(b_tesla, m_kev).beB_over_m2;
  bp.mass = 1.0;
  bp.k = k_over_m;
  return bp;
}

QuantumNumbers RunConfig::state() const {
  return QuantumNumbers::from_signed_l(signed_l.value_or(0), p.value_or(0),
                                       spin.value_or(Spin::Up));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Table run_profile(const RunConfig& cfg) {
  const QuantumNumbers qn = cfg.state();
  const BeamParameters bp = cfg.beam();
  observables::ProfileOptions opt;
  opt.r_max = cfg.r_max;
  opt.samples = cfg.samples;
  opt.normalized = cfg.normalized;
  opt.physical_surface_element = cfg.physical_surface;
  const auto prof = observables::radial_profile(qn, bp, opt);
  const auto structure = observables::current_structure(qn, bp);

  Table t;
  t.meta.emplace_back("command", "profile");
  add_beam_meta(cfg, t);
  add_state_meta(qn, t);
  t.meta.emplace_back("normalized", cfg.normalized ? "true" : "false");
  t.meta.emplace_back("jphi_surface_element",
                      cfg.physical_surface ? "dz x dr" : "dz x dr~");
  t.meta.emplace_back("jphi_sign_changes_rtilde", joined(structure.sign_changes));
  const std::string unit = cfg.normalized ? "per unit r~^2" : "arb";
  t.columns = {"r_tilde[1]", "j0[" + unit + "]", "jz[" + unit + "]",
               "jphi[" + unit + "]", "S_phi[" + unit + "]"};
  for (std::size_t i = 0; i < prof.r.size(); ++i) {
    t.rows.push_back({Cell::of(prof.r[i]), Cell::of(prof.j0[i]),
                      Cell::of(prof.jz[i]), Cell::of(prof.jphi[i]),
                      Cell::of(prof.s_phi[i])});
  }
  return t;
}

Table run_spectrum(const RunConfig& cfg) {
  const BeamParameters bp = cfg.beam();
  Table t;
  t.meta.emplace_back("command", "spectrum");
  add_beam_meta(cfg, t);
  t.meta.emplace_back("levels", std::to_string(cfg.levels));
  t.meta.emplace_back("max_abs_jz", format_number(cfg.max_jz));
  t.columns = {"family", "l", "p", "spin", "canonical_Jz[hbar]",
               "mixing_sq[B|e|]", "E[m]", "partner"};
  for (const SpectrumEntry& e : spectrum_table(bp, cfg.levels, cfg.max_jz)) {
    t.rows.push_back(
        {Cell::of(family_label(e.qn.family())),
         Cell::of(static_cast<double>(e.qn.winding())),
         Cell::of(static_cast<double>(e.qn.p)), Cell::of(spin_name(e.qn.spin)),
         Cell::of(e.canonical_jz()), Cell::of(2.0 * e.level),
         Cell::of(e.energy.total / bp.mass),
         Cell::of(e.partner ? state_label(*e.partner) : std::string("none"))});
  }
  return t;
}

Table run_table(const RunConfig& cfg, bool* failed) {
  const BeamParameters bp = cfg.beam();
  std::vector<QuantumNumbers> states;
  if (cfg.signed_l || cfg.p || cfg.spin) {
    if (cfg.spin) {
      states.push_back(cfg.state());
    } else {
      for (Spin s : {Spin::Up, Spin::Down}) {
        states.push_back(QuantumNumbers::from_signed_l(cfg.signed_l.value_or(0),
                                                       cfg.p.value_or(0), s));
      }
    }
  } else {
    for (int l = -cfg.max_abs_l; l <= cfg.max_abs_l; ++l) {
      for (int p = 0; p <= cfg.max_p; ++p) {
        for (Spin s : {Spin::Up, Spin::Down}) {
          states.push_back(QuantumNumbers::from_signed_l(l, p, s));
        }
      }
    }
  }

  Table t;
  t.meta.emplace_back("command", "table");
  add_beam_meta(cfg, t);
  t.meta.emplace_back("Mz_convention",
                      "Mz/|e| = -(int j0 / E)(E_L^2 + E_Z^2)/(2 B|e|), electron "
                      "charge e = -|e|");
  t.columns = {"family", "l", "p", "spin", "int_j0[arb]", "int_jz[arb]",
               "Jz_gauge[hbar]", "Jz_no_spin_orbit[hbar]", "Mz_over_abs_e[arb]",
               "prob_up[1]", "prob_down[1]"};
  if (cfg.check) {
    for (const char* c : {"err_int_j0", "err_int_jz", "err_Jz_gauge",
                          "err_Jz_no_spin_orbit", "err_Mz", "err_rho"}) {
      t.columns.emplace_back(std::string(c) + "[1]");
    }
    t.meta.emplace_back("check_tolerance", format_number(kCheckTolerance));
  }

  bool any_failed = false;
  for (const QuantumNumbers& qn : states) {
    const double j0 = observables::integrated_density(qn, bp);
    const double jz = observables::integrated_jz(qn, bp);
    const double jg = observables::gauge_covariant_jz(qn, bp);
    const double jd = observables::gauge_covariant_jz(qn, bp, SpinOrbit::Dropped);
    const double mz = bp.beB > 0.0 ? observables::magnetic_moment(qn, bp)
                                   : std::numeric_limits<double>::quiet_NaN();
    const auto rho = observables::reduced_spin_state(qn, bp);
    std::vector<Cell> row{Cell::of(family_label(qn.family())),
                          Cell::of(static_cast<double>(qn.winding())),
                          Cell::of(static_cast<double>(qn.p)),
                          Cell::of(spin_name(qn.spin)),
                          Cell::of(j0), Cell::of(jz), Cell::of(jg), Cell::of(jd),
                          Cell::of(mz), Cell::of(rho.prob_up),
                          Cell::of(rho.prob_down)};
    if (cfg.check) {
      const double e = energy(qn, bp).total;
      const auto qrho = quadrature::reduced_spin_matrix(qn, bp);
      std::vector<double> errs{
          rel_error(quadrature::integrated_density(qn, bp), j0, 0.0),
          rel_error(quadrature::integrated_jz(qn, bp), jz, j0),
          rel_error(quadrature::gauge_covariant_jz(qn, bp), jg, 0.0),
          rel_error(quadrature::gauge_covariant_jz(qn, bp, SpinOrbit::Dropped), jd, 0.0),
          bp.beB > 0.0 ? rel_error(quadrature::magnetic_moment(qn, bp), mz, j0 / e)
                       : 0.0,
          std::max({std::abs(qrho(0, 0).real() - rho.prob_up),
                    std::abs(qrho(1, 1).real() - rho.prob_down),
                    std::abs(qrho(0, 1)), std::abs(qrho(1, 0))})};
      for (double v : errs) {
        if (!(v <= kCheckTolerance)) any_failed = true;
        row.push_back(Cell::of(v));
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (failed) *failed = any_failed;
  return t;
}

Table run_figure(const RunConfig& cfg) {
  if (cfg.figure == 1) {
    Table t = run_spectrum(cfg);
    t.meta.insert(t.meta.begin() + 1, {"figure", "1"});
    return t;
  }
  const BeamParameters bp = cfg.beam();
  struct Panel {
    const char* name;
    int l;
    int p;
  };
  const std::vector<Panel> panels =
      cfg.figure == 2
          ? std::vector<Panel>{{"a", 2, 3}, {"b", -2, 3}, {"c", -2, 0}}
          : std::vector<Panel>{{"a", 2, 3}, {"b", -2, 3}};

  Table t;
  t.meta.emplace_back("command", "figure");
  t.meta.emplace_back("figure", std::to_string(cfg.figure));
  add_beam_meta(cfg, t);

  if (cfg.figure == 2) {
    observables::ProfileOptions opt;
    opt.r_max = cfg.r_max;
    opt.samples = cfg.samples;
    opt.normalized = cfg.normalized;
    opt.physical_surface_element = cfg.physical_surface;
    t.columns.push_back("r_tilde[1]");
    std::vector<observables::RadialProfile> profiles;
    for (const Panel& panel : panels) {
      for (Spin s : {Spin::Up, Spin::Down}) {
        const auto qn = QuantumNumbers::from_signed_l(panel.l, panel.p, s);
        profiles.push_back(observables::radial_profile(qn, bp, opt));
        const std::string key =
            std::string(panel.name) + "_" + spin_name(s);
        t.columns.push_back("jphi_" + key + "[" +
                            (cfg.normalized ? "per unit r~^2" : "arb") + "]");
        t.meta.emplace_back(key + "_state", state_label(qn));
        t.meta.emplace_back(
            key + "_sign_changes_rtilde",
            joined(observables::current_structure(qn, bp).sign_changes));
      }
    }
    for (std::size_t i = 0; i < profiles.front().r.size(); ++i) {
      std::vector<Cell> row{Cell::of(profiles.front().r[i])};
      for (const auto& prof : profiles) row.push_back(Cell::of(prof.jphi[i]));
      t.rows.push_back(std::move(row));
    }
    return t;
  }

  // Regions of negative (clockwise) azimuthal current.
  const double unit_nm = units::convert_units(cfg.b_tesla, cfg.m_kev).length_nm();
  t.columns = {"panel", "l", "p", "spin", "r_tilde_lo[1]", "r_tilde_hi[1]",
               "r_lo[nm]", "r_hi[nm]"};
  for (const Panel& panel : panels) {
    for (Spin s : {Spin::Down, Spin::Up}) {
      const auto qn = QuantumNumbers::from_signed_l(panel.l, panel.p, s);
      const auto cs = observables::current_structure(qn, bp);
      std::vector<double> edges{0.0};
      edges.insert(edges.end(), cs.sign_changes.begin(), cs.sign_changes.end());
      for (std::size_t i = 0; i < cs.interval_signs.size(); ++i) {
        if (cs.interval_signs[i] >= 0) continue;
        const double lo = edges[i];
        const double hi = i + 1 < edges.size()
                              ? edges[i + 1]
                              : std::numeric_limits<double>::infinity();
        t.rows.push_back({Cell::of(panel.name),
                          Cell::of(static_cast<double>(panel.l)),
                          Cell::of(static_cast<double>(panel.p)),
                          Cell::of(spin_name(s)), Cell::of(lo), Cell::of(hi),
                          Cell::of(lo * unit_nm), Cell::of(hi * unit_nm)});
      }
    }
  }
  return t;
}

void write_csv(const Table& t, std::ostream& os) {
  os << "# landau-vortex\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << (row[i].is_text ? row[i].text : format_number(row[i].number));
    }
    os << '\n';
  }
}

namespace {

nlohmann::ordered_json meta_json(const Table& t) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  return meta;
}

nlohmann::ordered_json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0.0 ? 0.0 : v;
}

}  // namespace

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"] = meta_json(t);
  doc["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& c : row) {
      if (c.is_text) {
        r.push_back(c.text);
      } else {
        r.push_back(number_json(c.number));
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

namespace {

int run_verify(const RunConfig& cfg, Format format, std::ostream& out,
               std::ostream& err) {
  verify::Options opt;
  opt.sabotage_energy = cfg.sabotage == "energy";
  const auto start = std::chrono::steady_clock::now();
  const auto checks = verify::run_all(opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  bool ok = true;
  for (const auto& c : checks) {
    if (!c.pass) {
      ok = false;
      err << "FAILED " << c.name << ": residual " << format_number(c.residual)
          << " > " << format_number(c.tolerance) << '\n';
    }
  }
  err << checks.size() << " checks, " << (ok ? "all passed" : "failures")
      << " in " << seconds << " s\n";

  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"command", "verify"},
                   {"version", kVersion},
                   {"sabotage", cfg.sabotage.empty() ? "none" : cfg.sabotage},
                   {"pass", ok}};
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"residual", number_json(c.residual)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
    }
    doc["checks"] = std::move(list);
    out << doc.dump(2) << '\n';
  } else {
    Table t;
    t.meta = {{"command", "verify"}, {"version", kVersion},
              {"sabotage", cfg.sabotage.empty() ? "none" : cfg.sabotage}};
    t.columns = {"name", "residual", "tolerance", "pass"};
    for (const auto& c : checks) {
      t.rows.push_back({Cell::of(c.name), Cell::of(c.residual),
                        Cell::of(c.tolerance),
                        Cell::of(std::string(c.pass ? "true" : "false"))});
    }
    write_csv(t, out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Dirac vortex states in a uniform magnetic field",
               "landau-vortex"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  int l = 0;
  int p = 0;
  std::string spin;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--l", l, "Signed orbital quantum number");
    sub->add_option("--p", p, "Radial quantum number")->check(CLI::NonNegativeNumber);
    sub->add_option("--spin", spin, "Spin along B")
        ->check(CLI::IsMember({"up", "down"}));
    sub->add_option("--B", cfg.b_tesla, "Magnetic field in tesla");
    sub->add_option("--k-over-m", cfg.k_over_m, "Longitudinal momentum over mass");
    sub->add_option("--m-kev", cfg.m_kev, "Mass in keV");
    sub->add_option("--rmax", cfg.r_max, "Largest rescaled radius");
    sub->add_option("--samples", cfg.samples, "Radial samples");
    sub->add_flag("--normalized", cfg.normalized, "Normalize int j0 d^2r~ to 1");
    sub->add_flag("--physical-surface", cfg.physical_surface,
                  "Report jphi per dz x dr instead of dz x dr~");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Write to file instead of stdout");
  };

  auto* profile = app.add_subcommand("profile", "Radial current and spin profile");
  auto* spectrum = app.add_subcommand("spectrum", "Levels sorted by J_z");
  auto* table = app.add_subcommand("table", "Integrated observables per state");
  auto* figure = app.add_subcommand("figure", "Figure data");
  auto* verify_cmd = app.add_subcommand("verify", "Run all verification suites");
  for (auto* sub : {profile, spectrum, table, figure, verify_cmd}) add_common(sub);
  for (auto* sub : {spectrum, figure}) {
    sub->add_option("--levels", cfg.levels, "Squared-energy rungs");
    sub->add_option("--max-jz", cfg.max_jz, "Largest |J_z|");
  }
  table->add_flag("--check", cfg.check, "Re-derive by quadrature");
  table->add_option("--lmax", cfg.max_abs_l, "Largest |l| when no state given");
  table->add_option("--pmax", cfg.max_p, "Largest p when no state given");
  figure->add_option("--fig", cfg.figure, "Figure number (1, 2 or 3)");
  verify_cmd->add_option("--sabotage", cfg.sabotage, "Negative control")
      ->check(CLI::IsMember({"energy"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : {profile, spectrum, table, figure, verify_cmd}) {
    if (sub->count("--l")) cfg.signed_l = l;
    if (sub->count("--p")) cfg.p = p;
  }
  if (!spin.empty()) cfg.spin = spin == "up" ? Spin::Up : Spin::Down;
  if (!format.empty()) cfg.format = format == "json" ? Format::Json : Format::Csv;

  if (profile->parsed()) cfg.command = Command::Profile;
  if (spectrum->parsed()) cfg.command = Command::Spectrum;
  if (table->parsed()) cfg.command = Command::Table;
  if (figure->parsed()) cfg.command = Command::Figure;
  if (verify_cmd->parsed()) cfg.command = Command::Verify;

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    cfg.validate();
    if (cfg.command != Command::Verify) cfg.state();
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open " + cfg.out);
      sink = &file;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (cfg.command == Command::Verify) {
      return run_verify(cfg, cfg.format.value_or(Format::Json), *sink, err);
    }
    bool failed = false;
    Table t;
    switch (cfg.command) {
      case Command::Profile: t = run_profile(cfg); break;
      case Command::Spectrum: t = run_spectrum(cfg); break;
      case Command::Table: t = run_table(cfg, &failed); break;
      case Command::Figure: t = run_figure(cfg); break;
      case Command::Verify: break;
    }
    if (cfg.format.value_or(Format::Csv) == Format::Json) {
      write_json(t, *sink);
    } else {
      write_csv(t, *sink);
    }
    if (failed) {
      err << "quadrature check exceeded " << format_number(kCheckTolerance) << '\n';
      return 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace vortex::cli
