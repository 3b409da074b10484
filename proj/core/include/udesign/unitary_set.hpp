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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "udesign/matrix.hpp"
#include "udesign/zonal.hpp"

namespace udesign {

// A finite ordered list of d x d unitaries sharing one dimension. Validated
// on construction; immutable afterwards.
class UnitarySet {
 public:
  UnitarySet() = default;
  // Throws InputError naming the first offending index if a matrix has the
  // wrong shape or violates unitarity beyond unitarity_tol.
  UnitarySet(int d, std::vector<Matrix> matrices,
             std::vector<std::string> labels = {},
             double unitarity_tol = kDefaultUnitarityTol);

  int dim() const { return d_; }
  std::size_t size() const { return matrices_.size(); }
  bool empty() const { return matrices_.empty(); }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  // Empty, or one label per matrix.
  const std::vector<std::string>& labels() const { return labels_; }

  // Columns are the row-major vectorisations of the matrices, so that
  // (A^* A)_{ij} = tr(U_i^* U_j).
  Matrix packed_columns() const;

 private:
  int d_ = 0;
  std::vector<Matrix> matrices_;
  std::vector<std::string> labels_;
};

inline constexpr double kWeightSumTol = 1e-12;

// A unitary set with a strictly positive probability weight per element.
class WeightedUnitarySet {
 public:
  WeightedUnitarySet() = default;
  // Uniform weights 1/|X|.
  explicit WeightedUnitarySet(UnitarySet base);
  // Throws InputError if sizes differ, a weight is not positive, or the
  // weights do not sum to 1 within kWeightSumTol.
  WeightedUnitarySet(UnitarySet base, std::vector<double> weights);

  const UnitarySet& base() const { return base_; }
  const std::vector<double>& weights() const { return weights_; }
  int dim() const { return base_.dim(); }
  std::size_t size() const { return base_.size(); }
  bool uniform() const { return uniform_; }

 private:
  UnitarySet base_;
  std::vector<double> weights_;
  bool uniform_ = true;
};

// G_ij = |tr(U_i^* U_j)|^2; diagonal is d^2.
RealMatrix gram_abs2(const UnitarySet& x);

// Streams the rows of gram_abs2 in blocks without materialising the full
// n x n matrix. fn(first_row, block) receives block rows first_row ..
// first_row + block.rows() - 1, all n columns. Row blocks are visited in
// increasing order.
void stream_gram_abs2(
    const UnitarySet& x,
    const std::function<void(Eigen::Index, const RealMatrix&)>& fn);

struct DistanceCluster {
  double value = 0.0;   // mean of the clustered |tr(U^* V)|^2 values
  double min = 0.0;
  double max = 0.0;
  std::uint64_t multiplicity = 0;  // over ordered pairs U != V
};

struct DistanceProfile {
  std::vector<DistanceCluster> clusters;  // sorted by value
  double cluster_tol = 1e-6;
  // Ordered pairs with |tr(U^* V)| = d (equal up to global phase).
  std::uint64_t phase_duplicate_pairs = 0;
  std::vector<std::string> warnings;

  int degree() const { return static_cast<int>(clusters.size()); }
};

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kPhaseDuplicateTol = 1e-8;

// Distinct off-diagonal values of |tr(U^* V)|^2, split into clusters where
// the sorted sequence has a gap larger than cluster_tol. Requires |X| >= 2.
DistanceProfile distance_profile(const UnitarySet& x,
                                 double cluster_tol = kDefaultClusterTol);

// n Haar-random unitaries: complex Gaussian matrix, Householder QR, columns
// rephased so that diag(R) is positive real. Deterministic in seed.
UnitarySet sample_haar(int d, std::size_t n, std::uint64_t seed);

// One Haar-random unitary drawn from a caller-owned engine.
Matrix haar_unitary(int d, std::mt19937_64& engine);

// Clock and shift operators: shift |j> -> |j+1>, clock |j> -> w^j |j>.
Matrix shift_matrix(int d);
Matrix clock_matrix(int d);

// D(a, b) = shift^a clock^b.
Matrix displacement(int d, int a, int b);

// All d^2 displacements D(a, b), a, b in 0..d-1, ordered by (a, b).
UnitarySet weyl_heisenberg(int d);

}  // namespace udesign
