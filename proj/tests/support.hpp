// Copyright 2026 The udesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "udesign/matrix.hpp"
#include "udesign/signature.hpp"
#include "udesign/unitary_set.hpp"

namespace udesign::testing {

inline Matrix hadamard() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

inline Matrix phase_gate() {
  Matrix s = Matrix::Identity(2, 2);
  s(1, 1) = Complex(0.0, 1.0);
  return s;
}

// SU(2) image of the quaternion a + b i + c j + e k.
inline Matrix quaternion(double a, double b, double c, double e) {
  Matrix q(2, 2);
  q << Complex(a, b), Complex(c, e), Complex(-c, e), Complex(a, -b);
  return q;
}

// Two generators of the binary icosahedral group.
inline std::vector<Matrix> icosian_generators() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return {quaternion(0.5, 0.5, 0.5, 0.5), quaternion(phi / 2.0, 0.5 / phi, 0.5, 0.0)};
}

inline std::vector<Complex> eigen_power_sums(const Matrix& lambda, int k) {
  Eigen::ComplexEigenSolver<Matrix> es(lambda);
  std::vector<Complex> p(static_cast<std::size_t>(k) + 1, 0.0);
  for (int j = 0; j <= k; ++j) {
    for (Eigen::Index i = 0; i < lambda.rows(); ++i) p[j] += std::pow(es.eigenvalues()[i], j);
  }
  return p;
}

// Weyl character as a ratio of alternants in the eigenvalues.
inline Complex bialternant_character(const Signature& mu, const Matrix& lambda) {
  Eigen::ComplexEigenSolver<Matrix> es(lambda);
  const Eigen::VectorXcd z = es.eigenvalues();
  const int d = mu.dim();
  Matrix num(d, d), den(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      num(i, j) = std::pow(z[i], mu[j] + d - 1 - j);
      den(i, j) = std::pow(z[i], d - 1 - j);
    }
  }
  return num.determinant() / den.determinant();
}

inline std::vector<std::pair<Matrix, Matrix>> random_pairs(int d, int n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<std::pair<Matrix, Matrix>> out;
  for (int i = 0; i < n; ++i) {
    Matrix u = haar_unitary(d, engine);
    Matrix m = haar_unitary(d, engine);
    out.emplace_back(std::move(u), std::move(m));
  }
  return out;
}

}  // namespace udesign::testing
