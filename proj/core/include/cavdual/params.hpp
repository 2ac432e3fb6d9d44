// Copyright 2026 The cavity-duality Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAVDUAL_PARAMS_HPP
#define CAVDUAL_PARAMS_HPP

#include <vector>

namespace cavdual {

// Parameters of the two coupled (possibly Kerr-nonlinear) cavities.
// Everything is expressed in units of omega1; time in units of 1/omega1;
// hbar = 1. The detuning omega1 - omega2 is always derived, never stored.
struct SystemParams {
  double omega1 = 1.0;          // cavity-1 resonance (sets the unit system)
  double omega2 = 1.0;          // cavity-2 resonance
  double coupling = 0.0;        // linear hop amplitude, >= 0
  double kerr1 = 0.0;           // self-Kerr strength of cavity 1
  double kerr2 = 0.0;           // self-Kerr strength of cavity 2
  double coupling_phase = 0.0;  // phase of the hop term, radians

  double detuning() const { return omega1 - omega2; }

  // Keeps omega1 and moves omega2 so that omega1 - omega2 == value.
  SystemParams& set_detuning(double value) {
    omega2 = omega1 - value;
    return *this;
  }
};

// Per-site and per-bond parameters of the cavity array.
struct ArrayParams {
  std::vector<double> site_frequency;  // size N
  std::vector<double> site_kerr;       // size N
  std::vector<double> bond_coupling;   // size N-1, each >= 0
  std::vector<double> bond_phase;      // size N-1, radians

  int sites() const { return static_cast<int>(site_frequency.size()); }

  // N identical sites, one common nearest-neighbour coupling, no Kerr.
  static ArrayParams uniform(int n_sites, double site_frequency, double coupling);

  // Throws std::invalid_argument on inconsistent vector lengths or
  // negative couplings.
  void validate() const;
};

}  // namespace cavdual

#endif  // CAVDUAL_PARAMS_HPP
