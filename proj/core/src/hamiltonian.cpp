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

#include "cavdual/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace cavdual {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if (hermiticity_defect() > 1e-12 * scale) {
    throw std::invalid_argument("HermitianMatrix: matrix is not Hermitian");
  }
}

double HermitianMatrix::hermiticity_defect() const {
  if (matrix_.size() == 0) return 0.0;
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double average_energy(const TwoCavityState& state, const SystemParams& params) {
  const double m = state.m;
  const double n = state.n;
  return (m * params.omega1 + n * params.omega2) + params.kerr1 * (m * (m - 1.0)) +
         params.kerr2 * (n * (n - 1.0));
}

HermitianMatrix two_cavity_matrix(const SystemParams& params, int total_photons) {
  if (total_photons < 0) {
    throw std::invalid_argument("two_cavity_matrix: total photon number must be >= 0");
  }
  if (params.coupling < 0.0) {
    throw std::invalid_argument("two_cavity_matrix: coupling must be >= 0");
  }
  const auto basis = sector_basis(total_photons);
  const int dim = basis.dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    h(i, i) = average_energy(basis.two_cavity_state_of(i), params);
  }
  const std::complex<double> phase = std::polar(1.0, params.coupling_phase);
  for (int i = 0; i + 1 < dim; ++i) {
    const double hop =
        std::sqrt(static_cast<double>((i + 1) * (total_photons - i))) * params.coupling;
    h(i, i + 1) = phase * hop;
    h(i + 1, i) = std::conj(h(i, i + 1));
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix array_matrix(const ArrayParams& params, bool include_vacuum) {
  params.validate();
  const int n = params.sites();
  const int offset = include_vacuum ? 1 : 0;
  const int dim = n + offset;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int l = 0; l < n; ++l) {
    h(l + offset, l + offset) = params.site_frequency[l] + params.site_kerr[l];
  }
  for (int l = 0; l + 1 < n; ++l) {
    h(l + offset, l + 1 + offset) =
        std::polar(1.0, params.bond_phase[l]) * params.bond_coupling[l];
    h(l + 1 + offset, l + offset) = std::conj(h(l + offset, l + 1 + offset));
  }
  return HermitianMatrix(std::move(h));
}

ArrayParams ArrayParams::uniform(int n_sites, double site_frequency, double coupling) {
  if (n_sites < 1) {
    throw std::invalid_argument("ArrayParams::uniform: need at least one site");
  }
  ArrayParams p;
  p.site_frequency.assign(n_sites, site_frequency);
  p.site_kerr.assign(n_sites, 0.0);
  p.bond_coupling.assign(n_sites - 1, coupling);
  p.bond_phase.assign(n_sites - 1, 0.0);
  p.validate();
  return p;
}

void ArrayParams::validate() const {
  const std::size_t n = site_frequency.size();
  if (n == 0) {
    throw std::invalid_argument("ArrayParams: need at least one site");
  }
  if (site_kerr.size() != n || bond_coupling.size() != n - 1 || bond_phase.size() != n - 1) {
    throw std::invalid_argument(
        "ArrayParams: expected N site frequencies, N site Kerr strengths and N-1 bond "
        "couplings/phases");
  }
  for (double j : bond_coupling) {
    if (j < 0.0) throw std::invalid_argument("ArrayParams: bond couplings must be >= 0");
  }
}

}  // namespace cavdual
