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

#include "cavdual/basis.hpp"

#include <stdexcept>

namespace cavdual {

std::string state_label(const TwoCavityState& state) {
  return "m" + std::to_string(state.m) + "n" + std::to_string(state.n);
}

std::string state_label(const ArraySite& site) {
  if (site.is_vacuum()) return "vac";
  return "site" + std::to_string(site.l);
}

int SectorBasis::dimension() const {
  switch (kind_) {
    case BasisKind::kTwoCavitySector:
      return extent_ + 1;
    case BasisKind::kArraySingleExcitation:
      return extent_;
    case BasisKind::kArraySingleExcitationWithVacuum:
      return extent_ + 1;
  }
  return 0;
}

int SectorBasis::total_photons() const {
  if (kind_ != BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: total_photons() requires a two-cavity sector basis");
  }
  return extent_;
}

int SectorBasis::sites() const {
  if (kind_ == BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: sites() requires an array basis");
  }
  return extent_;
}

TwoCavityState SectorBasis::two_cavity_state_of(int index) const {
  if (kind_ != BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: not a two-cavity sector basis");
  }
  if (index < 0 || index >= dimension()) {
    throw std::out_of_range("SectorBasis: index out of range");
  }
  return TwoCavityState{extent_ - index, index};
}

ArraySite SectorBasis::site_of(int index) const {
  if (kind_ == BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: not an array basis");
  }
  if (index < 0 || index >= dimension()) {
    throw std::out_of_range("SectorBasis: index out of range");
  }
  if (includes_vacuum()) {
    return index == 0 ? ArraySite::vacuum() : ArraySite{index};
  }
  return ArraySite{index + 1};
}

int SectorBasis::index_of(const TwoCavityState& state) const {
  if (kind_ != BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: not a two-cavity sector basis");
  }
  if (state.m < 0 || state.n < 0 || state.total() != extent_) {
    throw std::out_of_range("SectorBasis: state " + state_label(state) +
                            " is not in the " + std::to_string(extent_) + "-photon sector");
  }
  return state.n;
}

int SectorBasis::index_of(const ArraySite& site) const {
  if (kind_ == BasisKind::kTwoCavitySector) {
    throw std::logic_error("SectorBasis: not an array basis");
  }
  if (site.is_vacuum()) {
    if (!includes_vacuum()) {
      throw std::out_of_range("SectorBasis: basis does not include the vacuum");
    }
    return 0;
  }
  if (site.l < 1 || site.l > extent_) {
    throw std::out_of_range("SectorBasis: site index " + std::to_string(site.l) +
                            " outside [1, " + std::to_string(extent_) + "]");
  }
  return includes_vacuum() ? site.l : site.l - 1;
}

std::string SectorBasis::label(int index) const {
  if (kind_ == BasisKind::kTwoCavitySector) return state_label(two_cavity_state_of(index));
  return state_label(site_of(index));
}

std::vector<std::string> SectorBasis::labels() const {
  std::vector<std::string> out;
  out.reserve(dimension());
  for (int i = 0; i < dimension(); ++i) out.push_back(label(i));
  return out;
}

SectorBasis sector_basis(int total_photons) {
  if (total_photons < 0) {
    throw std::invalid_argument("sector_basis: total photon number must be >= 0");
  }
  return SectorBasis(BasisKind::kTwoCavitySector, total_photons);
}

SectorBasis array_basis(int n_sites, bool include_vacuum) {
  if (n_sites < 1) {
    throw std::invalid_argument("array_basis: need at least one site");
  }
  return SectorBasis(include_vacuum ? BasisKind::kArraySingleExcitationWithVacuum
                                    : BasisKind::kArraySingleExcitation,
                     n_sites);
}

}  // namespace cavdual
