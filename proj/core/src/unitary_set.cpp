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
#include "udesign/unitary_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "udesign/error.hpp"

namespace udesign {

UnitarySet::UnitarySet(int d, std::vector<Matrix> matrices,
                       std::vector<std::string> labels, double unitarity_tol)
    : d_(d), matrices_(std::move(matrices)), labels_(std::move(labels)) {
  if (d_ < 1) throw InputError("unitary set dimension must be >= 1");
  if (!labels_.empty() && labels_.size() != matrices_.size()) {
    throw InputError("label count does not match matrix count");
  }
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const Matrix& u = matrices_[i];
    if (u.rows() != d_ || u.cols() != d_) {
      throw InputError("matrix " + std::to_string(i) + " is not " +
                       std::to_string(d_) + "x" + std::to_string(d_));
    }
    if (!u.allFinite()) {
      throw InputError("matrix " + std::to_string(i) + " has non-finite entries");
    }
    const double defect = unitarity_defect(u);
    if (defect > unitarity_tol) {
      throw InputError("matrix " + std::to_string(i) +
                       " is not unitary (max |U*U - I| = " +
                       std::to_string(defect) + ")");
    }
  }
}

Matrix UnitarySet::packed_columns() const {
  const Eigen::Index dd = static_cast<Eigen::Index>(d_) * d_;
  Matrix a(dd, static_cast<Eigen::Index>(matrices_.size()));
  for (std::size_t j = 0; j < matrices_.size(); ++j) {
    const Matrix& u = matrices_[j];
    for (int r = 0; r < d_; ++r) {
      for (int c = 0; c < d_; ++c) {
        a(r * d_ + c, static_cast<Eigen::Index>(j)) = u(r, c);
      }
    }
  }
  return a;
}

WeightedUnitarySet::WeightedUnitarySet(UnitarySet base)
    : base_(std::move(base)),
      weights_(base_.size(), base_.empty() ? 0.0 : 1.0 / base_.size()),
      uniform_(true) {}

WeightedUnitarySet::WeightedUnitarySet(UnitarySet base,
                                       std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)), uniform_(false) {
  if (weights_.size() != base_.size()) {
    throw InputError("weights and matrices have different lengths");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw InputError("weight " + std::to_string(i) + " is not positive");
    }
    sum += weights_[i];
  }
  if (!weights_.empty() && std::abs(sum - 1.0) > kWeightSumTol) {
    throw InputError("weights are not normalized (sum = " +
                     std::to_string(sum) + ")");
  }
}

void stream_gram_abs2(
    const UnitarySet& x,
    const std::function<void(Eigen::Index, const RealMatrix&)>& fn) {
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  if (n == 0) return;
  const Matrix a = x.packed_columns();
  // Keep each complex block near 4M entries.
  const Eigen::Index block =
      std::max<Eigen::Index>(1, std::min<Eigen::Index>(n, 4'000'000 / n));
  for (Eigen::Index r0 = 0; r0 < n; r0 += block) {
    const Eigen::Index rows = std::min(block, n - r0);
    const Matrix inner = a.middleCols(r0, rows).adjoint() * a;
    fn(r0, inner.cwiseAbs2());
  }
}

RealMatrix gram_abs2(const UnitarySet& x) {
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  RealMatrix g(n, n);
  stream_gram_abs2(x, [&](Eigen::Index r0, const RealMatrix& block) {
    g.middleRows(r0, block.rows()) = block;
  });
  // exact symmetry and diagonal
  const double d2 = static_cast<double>(x.dim()) * x.dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = d2;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = 0.5 * (g(i, j) + g(j, i));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

namespace {

// Merges intervals (sorted by min) whose gaps are <= tol. Gap splitting of a
// sorted sequence gives the same clusters whether it is applied to the whole
// sequence at once or to partial cluster lists merged this way.
std::vector<DistanceCluster> merge_clusters(std::vector<DistanceCluster> in,
                                            double tol) {
  std::sort(in.begin(), in.end(),
            [](const DistanceCluster& a, const DistanceCluster& b) {
              return a.min < b.min;
            });
  std::vector<DistanceCluster> out;
  for (const DistanceCluster& c : in) {
    if (!out.empty() && c.min - out.back().max <= tol) {
      DistanceCluster& back = out.back();
      const double total = static_cast<double>(back.multiplicity + c.multiplicity);
      back.value = (back.value * static_cast<double>(back.multiplicity) +
                    c.value * static_cast<double>(c.multiplicity)) /
                   total;
      back.max = std::max(back.max, c.max);
      back.multiplicity += c.multiplicity;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

DistanceProfile distance_profile(const UnitarySet& x, double cluster_tol) {
  if (x.size() < 2) throw InputError("distance_profile needs at least 2 matrices");
  if (!(cluster_tol >= 0.0)) throw InputError("cluster_tol must be >= 0");
  DistanceProfile profile;
  profile.cluster_tol = cluster_tol;
  const double d = x.dim();
  const double dup_threshold = (d - kPhaseDuplicateTol) * (d - kPhaseDuplicateTol);
  std::vector<DistanceCluster> acc;
  std::vector<double> row;
  stream_gram_abs2(x, [&](Eigen::Index r0, const RealMatrix& block) {
    std::vector<DistanceCluster> pending = std::move(acc);
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      const Eigen::Index gi = r0 + i;
      row.clear();
      for (Eigen::Index j = 0; j < block.cols(); ++j) {
        if (j == gi) continue;
        const double v = block(i, j);
        if (v >= dup_threshold) ++profile.phase_duplicate_pairs;
        row.push_back(v);
      }
      std::sort(row.begin(), row.end());
      std::size_t first = pending.size();
      double sum = 0.0;
      for (double v : row) {
        if (pending.size() > first && v - pending.back().max <= cluster_tol) {
          DistanceCluster& c = pending.back();
          sum += v;
          c.max = v;
          ++c.multiplicity;
          c.value = sum / static_cast<double>(c.multiplicity);
        } else {
          pending.push_back({v, v, v, 1});
          sum = v;
        }
      }
    }
    acc = merge_clusters(std::move(pending), cluster_tol);
  });
  profile.clusters = std::move(acc);
  if (profile.phase_duplicate_pairs > 0) {
    profile.warnings.push_back(
        std::to_string(profile.phase_duplicate_pairs / 2) +
        " pair(s) of matrices are equal up to a global phase");
  }
  return profile;
}

Matrix haar_unitary(int d, std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix z(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) z(r, c) = Complex(normal(engine), normal(engine));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& packed = qr.matrixQR();
  for (int c = 0; c < d; ++c) {
    const Complex rcc = packed(c, c);
    const double mag = std::abs(rcc);
    if (mag > 0.0) q.col(c) *= rcc / mag;
  }
  return q;
}

UnitarySet sample_haar(int d, std::size_t n, std::uint64_t seed) {
  if (d < 1) throw InputError("sample_haar: d must be >= 1");
  std::vector<Matrix> out;
  out.reserve(n);
  std::mt19937_64 engine(seed);
  for (std::size_t i = 0; i < n; ++i) out.push_back(haar_unitary(d, engine));
  return UnitarySet(d, std::move(out));
}

Matrix shift_matrix(int d) {
  Matrix s = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) s((j + 1) % d, j) = 1.0;
  return s;
}

Matrix clock_matrix(int d) {
  Matrix c = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    c(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  }
  return c;
}

Matrix displacement(int d, int a, int b) {
  a = ((a % d) + d) % d;
  b = ((b % d) + d) % d;
  // shift^a clock^b |j> = w^{bj} |j + a>
  Matrix out = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    out((j + a) % d, j) =
        std::polar(1.0, 2.0 * std::numbers::pi * ((static_cast<long>(b) * j) % d) / d);
  }
  return out;
}

UnitarySet weyl_heisenberg(int d) {
  if (d < 1) throw InputError("weyl_heisenberg: d must be >= 1");
  std::vector<Matrix> ops;
  std::vector<std::string> labels;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ops.push_back(displacement(d, a, b));
      labels.push_back("D(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return UnitarySet(d, std::move(ops), std::move(labels));
}

}  // namespace udesign
