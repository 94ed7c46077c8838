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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vortex/landau_states.hpp"

namespace vortex::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Profile, Spectrum, Table, Figure, Verify };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Profile;
  std::optional<int> signed_l;  ///< --l, sign is the OAM sign
  std::optional<int> p;
  std::optional<Spin> spin;
  double b_tesla = 1.0;
  double k_over_m = 1.0;
  double m_kev = 511.0;
  double r_max = 4.0;
  int samples = 512;
  bool normalized = false;
  bool physical_surface = false;
  std::optional<Format> format;
  bool check = false;
  std::string out;
  std::string sabotage;
  int levels = 4;
  double max_jz = 4.5;
  int max_abs_l = 3;
  int max_p = 3;
  int figure = 2;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
  /// beB in units of m^2, mass 1, k = k_over_m.
  BeamParameters beam() const;
  QuantumNumbers state() const;
};

/// One output table: metadata, named columns and rows of cells. A cell is
/// either a number or a string.
struct Cell {
  double number = 0.0;
  std::string text;
  bool is_text = false;

  static Cell of(double v) { return Cell{v, {}, false}; }
  static Cell of(std::string s) { return Cell{0.0, std::move(s), true}; }
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Table run_profile(const RunConfig& cfg);
Table run_spectrum(const RunConfig& cfg);
/// Sets *failed when --check finds an error above 1e-9.
Table run_table(const RunConfig& cfg, bool* failed = nullptr);
Table run_figure(const RunConfig& cfg);

/// 17 significant digits, locale independent.
std::string format_number(double v);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

/// Entry point. Returns 0 on success, 1 on verification failure, 2 on usage
/// errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace vortex::cli
