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

#ifndef CAVDUAL_BASIS_HPP
#define CAVDUAL_BASIS_HPP

#include <string>
#include <vector>

namespace cavdual {

// Photon occupation (m, n) of the two coupled cavities.
struct TwoCavityState {
  int m = 0;  // photons in cavity 1
  int n = 0;  // photons in cavity 2

  int total() const { return m + n; }
  friend bool operator==(const TwoCavityState&, const TwoCavityState&) = default;
};

// Location of the single photon in the cavity array. Site indices are
// 1-based; l == 0 is reserved for the vacuum (no photon anywhere).
struct ArraySite {
  int l = 1;

  static ArraySite vacuum() { return ArraySite{0}; }
  bool is_vacuum() const { return l == 0; }
  friend bool operator==(const ArraySite&, const ArraySite&) = default;
};

// Serialized forms used in CSV headers: "m<m>n<n>", "site<l>", "vac".
std::string state_label(const TwoCavityState& state);
std::string state_label(const ArraySite& site);

enum class BasisKind {
  kTwoCavitySector,        // two cavities, fixed total photon number
  kArraySingleExcitation,  // one photon distributed over an N-site array
  kArraySingleExcitationWithVacuum,
};

// Ordered basis of one dynamical sector.
//
// Two-cavity sector of T photons: index i <-> |T-i, i> (dimension T+1).
// Array without vacuum: index i <-> site i+1 (dimension N).
// Array with vacuum: index 0 <-> vacuum, index i <-> site i (dimension N+1).
class SectorBasis {
 public:
  BasisKind kind() const { return kind_; }
  int dimension() const;
  int total_photons() const;  // two-cavity sectors only
  int sites() const;          // array bases only
  bool includes_vacuum() const {
    return kind_ == BasisKind::kArraySingleExcitationWithVacuum;
  }

  TwoCavityState two_cavity_state_of(int index) const;
  ArraySite site_of(int index) const;
  int index_of(const TwoCavityState& state) const;
  int index_of(const ArraySite& site) const;

  std::string label(int index) const;
  std::vector<std::string> labels() const;

  friend SectorBasis sector_basis(int total_photons);
  friend SectorBasis array_basis(int n_sites, bool include_vacuum);

 private:
  SectorBasis(BasisKind kind, int extent) : kind_(kind), extent_(extent) {}

  BasisKind kind_;
  int extent_;  // T for a sector basis, N for an array basis
};

// Basis of the fixed-total-photon sector of the two coupled cavities.
SectorBasis sector_basis(int total_photons);

// Basis of the one-photon sector of an N-site array, optionally extended
// by the vacuum state (needed for qubit transfer).
SectorBasis array_basis(int n_sites, bool include_vacuum = false);

}  // namespace cavdual

#endif  // CAVDUAL_BASIS_HPP
