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

#ifndef CAVDUAL_HAMILTONIAN_HPP
#define CAVDUAL_HAMILTONIAN_HPP

#include <Eigen/Dense>
#include <complex>

#include "cavdual/basis.hpp"
#include "cavdual/params.hpp"

namespace cavdual {

// Complex Hermitian operator in a fixed basis. Builders fill the upper
// triangle and mirror the conjugate, so H == H^dagger holds exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Eigen::MatrixXcd matrix);

  Eigen::Index dimension() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const {
    return matrix_(i, j);
  }

  // max_ij |H(i,j) - conj(H(j,i))|
  double hermiticity_defect() const;

 private:
  Eigen::MatrixXcd matrix_;
};

// Energy of the bare occupation state |m, n>:
//   m*omega1 + n*omega2 + kerr1*m(m-1) + kerr2*n(n-1).
// This is also the diagonal of two_cavity_matrix, entry for entry.
double average_energy(const TwoCavityState& state, const SystemParams& params);

// Two-cavity Hamiltonian restricted to the sector with the given total
// photon number, in the ordering of sector_basis(). The hop between
// neighbouring occupation states |T-i, i> and |T-i-1, i+1> has amplitude
// e^{i phase} * sqrt((i+1)(T-i)) * coupling.
HermitianMatrix two_cavity_matrix(const SystemParams& params, int total_photons);

// Single-excitation Hamiltonian of the cavity array, in the ordering of
// array_basis(). Diagonal entries are site_frequency + site_kerr (one
// photon on a site picks up its full Kerr shift); with the vacuum flag
// an extra leading row/column of zeros is added (the vacuum decouples).
HermitianMatrix array_matrix(const ArrayParams& params, bool include_vacuum = false);

}  // namespace cavdual

#endif  // CAVDUAL_HAMILTONIAN_HPP
