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

#ifndef CAVDUAL_EVOLUTION_HPP
#define CAVDUAL_EVOLUTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "cavdual/hamiltonian.hpp"

namespace cavdual {

// Eigenvalues ascending; eigenvector columns orthonormal. Each column's
// global phase is fixed (first component of non-negligible magnitude made
// real positive) and degenerate clusters are ordered by the phase-fixed
// real part of the first basis component, so the decomposition is
// reproducible across equivalent inputs.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  Eigen::Index dimension() const { return eigenvalues.size(); }
};

SpectralDecomposition eigendecompose(const HermitianMatrix& h);

// exp(-iHt) applied through a cached spectral decomposition.
class Propagator {
 public:
  explicit Propagator(const HermitianMatrix& h) : Propagator(eigendecompose(h)) {}
  explicit Propagator(SpectralDecomposition decomposition)
      : decomposition_(std::move(decomposition)) {}

  // Requires a normalized state (||psi0| - 1| <= 1e-10).
  Eigen::VectorXcd operator()(const Eigen::VectorXcd& psi0, double t) const;

  const SpectralDecomposition& spectrum() const { return decomposition_; }

 private:
  SpectralDecomposition decomposition_;
};

Eigen::VectorXcd propagate(const HermitianMatrix& h, const Eigen::VectorXcd& psi0, double t);

// Complex amplitudes over a time grid; one row per time point.
struct EvolutionResult {
  std::vector<double> times;
  Eigen::MatrixXcd amplitudes;

  Eigen::MatrixXd populations() const { return amplitudes.cwiseAbs2(); }
};

// Evolves psi0 over the (ascending) time grid. Verifies that the total
// population stays within 1e-10 of unity at every sampled time.
EvolutionResult population_series(const HermitianMatrix& h, const Eigen::VectorXcd& psi0,
                                  const std::vector<double>& times);

// n evenly spaced points covering [first, last]; n == 1 gives {first}.
std::vector<double> time_grid(double first, double last, int n);

Eigen::VectorXcd basis_state(Eigen::Index dimension, Eigen::Index index);

}  // namespace cavdual

#endif  // CAVDUAL_EVOLUTION_HPP
