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

#include <functional>
#include <string>
#include <vector>

namespace vortex::verify {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// residual <= tolerance, NaN fails.
Check make_check(std::string name, double residual, double tolerance);

struct Options {
  /// Negative control: build every Dirac state with a perturbed energy.
  bool sabotage_energy = false;
  unsigned seed = 20260415u;
};

std::vector<Check> clifford_suite(const Options& opt);
std::vector<Check> laguerre_suite(const Options& opt);
std::vector<Check> landau_states_suite(const Options& opt);
std::vector<Check> observables_suite(const Options& opt);
std::vector<Check> operator_oracle_suite(const Options& opt);
std::vector<Check> units_suite(const Options& opt);

struct Suite {
  std::string name;
  std::function<std::vector<Check>(const Options&)> run;
};

const std::vector<Suite>& all_suites();

/// Runs every suite in order, prefixing check names with the suite name.
std::vector<Check> run_all(const Options& opt);

}  // namespace vortex::verify
