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
#include "udesign/weighted_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/SVD>

#include "udesign/error.hpp"
#include "udesign/group_designs.hpp"
#include "udesign/moments.hpp"
#include "udesign/zonal.hpp"

namespace udesign {

namespace {

RealMatrix potential_kernel(const UnitarySet& x, int t) {
  RealMatrix k = gram_abs2(x);
  return k.unaryExpr([t](double v) {
    double r = 1.0;
    for (int i = 0; i < t; ++i) r *= v;
    return r;
  });
}

std::vector<double> normalized(std::vector<double> w) {
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= sum;
  return w;
}

WeightedUnitarySet restrict_to(const UnitarySet& x, const std::vector<double>& w,
                               double drop_below) {
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  std::vector<double> kept;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (w[i] <= drop_below) continue;
    mats.push_back(x[i]);
    if (!x.labels().empty()) labels.push_back(x.labels()[i]);
    kept.push_back(w[i]);
  }
  if (kept.empty()) throw InvariantViolation("pruning removed every point");
  return WeightedUnitarySet(UnitarySet(x.dim(), std::move(mats), std::move(labels)),
                            normalized(std::move(kept)));
}

}  // namespace

FitResult fit_weights(const UnitarySet& pool, int t, double tol, long max_iter) {
  if (pool.empty()) throw InputError("fit_weights: empty pool");
  if (t < 1) throw InputError("fit_weights: t must be >= 1");
  const RealMatrix k = potential_kernel(pool, t);
  const Eigen::Index n = k.rows();
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd kw = k * w;

  FitResult res;
  res.moment = haar_moment(pool.dim(), t).convert_to<double>();
  double f = w.dot(kw);
  res.history.push_back(f);
  long it = 0;
  for (; it < max_iter; ++it) {
    Eigen::Index s = 0, v = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (kw[i] < kw[s]) s = i;
      if (w[i] > 0.0 && (v < 0 || kw[i] > kw[v])) v = i;
    }
    const double pair_gap = kw[v] - kw[s];
    res.stationary = pair_gap <= kStationarityTol;
    if (res.stationary || f - res.moment <= tol * res.moment) break;
    const double curvature = k(s, s) + k(v, v) - 2.0 * k(s, v);
    double step = curvature > 0.0 ? pair_gap / curvature : w[v];
    step = std::min(step, w[v]);
    w[s] += step;
    if (step == w[v]) {
      w[v] = 0.0;
    } else {
      w[v] -= step;
    }
    kw += step * (k.col(s) - k.col(v));
    f -= step * (2.0 * pair_gap - step * curvature);
    res.history.push_back(f);
  }
  res.iterations = it;

  w = w.cwiseMax(0.0);
  w /= w.sum();
  res.weights.assign(w.data(), w.data() + n);
  res.potential = w.dot(k * w);
  res.gap = res.potential - res.moment;
  if (res.gap < -1e-9 * std::max(1.0, res.moment)) {
    throw InvariantViolation("weighted potential fell below the Haar moment by " +
                             std::to_string(-res.gap));
  }
  res.converged = res.stationary || res.gap <= tol * res.moment;
  return res;
}

std::vector<Signature> moment_signatures(int d, int t) {
  return enumerate_signatures(d, t, t);
}

RealMatrix zonal_constraint_matrix(const UnitarySet& x, int t) {
  const auto sigs = moment_signatures(x.dim(), t);
  const auto n = static_cast<Eigen::Index>(x.size());
  int kmax = 1;
  for (const Signature& mu : sigs) kmax = std::max(kmax, required_power(mu));
  std::vector<double> dims;
  for (const Signature& mu : sigs) dims.push_back(weyl_dimension(mu).convert_to<double>());

  const auto m = static_cast<Eigen::Index>(sigs.size());
  RealMatrix c(2 * m * n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    for (Eigen::Index u = 0; u < n; ++u) {
      const TracePowerData tp = trace_powers_of(x[v].adjoint() * x[u], kmax);
      for (Eigen::Index a = 0; a < m; ++a) {
        const Complex z = zonal_eval(sigs[a], dims[a], tp) / (dims[a] * dims[a]);
        c(2 * (a * n + v), u) = z.real();
        c(2 * (a * n + v) + 1, u) = z.imag();
      }
    }
  }
  return c;
}

WeightedUnitarySet prune_support(const WeightedUnitarySet& w, int t, double tol) {
  if (t < 1) throw InputError("prune_support: t must be >= 1");
  if (!is_design(w, t, tol).verdict) {
    throw InputError("prune_support: input is not a " + std::to_string(t) +
                     "-design within tol");
  }
  const int d = w.dim();
  const double drop = 1e-3 * tol;

  // Merge points equal up to phase.
  ProjectiveIndex index(d);
  std::vector<double> merged;
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [idx, fresh] = index.insert(phase_canonical(w.base()[i]));
    if (fresh) {
      merged.push_back(w.weights()[i]);
      mats.push_back(w.base()[i]);
      if (!w.base().labels().empty()) labels.push_back(w.base().labels()[i]);
    } else {
      merged[idx] += w.weights()[i];
    }
  }
  UnitarySet support(d, std::move(mats), std::move(labels));
  WeightedUnitarySet current = restrict_to(support, merged, drop);

  // Project onto the exact minimizers of w^T K w on the current support:
  // solve [2K 1; 1^T 0] [delta; lambda] = [-2Kw; 0] in the least-norm sense.
  {
    const RealMatrix k = potential_kernel(current.base(), t);
    const Eigen::Index n = k.rows();
    const Eigen::Map<const Eigen::VectorXd> wv(current.weights().data(), n);
    RealMatrix kkt = RealMatrix::Zero(n + 1, n + 1);
    kkt.topLeftCorner(n, n) = 2.0 * k;
    kkt.block(0, n, n, 1).setOnes();
    kkt.block(n, 0, 1, n).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs.head(n) = -2.0 * k * wv;
    Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(kkt);
    cod.setThreshold(1e-11);
    const Eigen::VectorXd delta = cod.solve(rhs).head(n);
    const Eigen::VectorXd projected = wv + delta;
    if (projected.minCoeff() >= -drop && projected.allFinite()) {
      std::vector<double> pw(projected.data(), projected.data() + n);
      for (double& x : pw) x = std::max(x, 0.0);
      WeightedUnitarySet candidate = restrict_to(current.base(), normalized(pw), drop);
      if (is_design(candidate, t, tol).gap <= is_design(current, t, tol).gap + 1e-12) {
        current = std::move(candidate);
      }
    }
  }

  // Caratheodory steps along the kernel of the zonal constraint matrix.
  while (current.size() > 1) {
    const RealMatrix c = zonal_constraint_matrix(current.base(), t);
    Eigen::JacobiSVD<RealMatrix> svd(c, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const auto n = static_cast<Eigen::Index>(current.size());
    const double cutoff = 1e-9 * sv[0];
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > cutoff) ++rank;
    if (rank >= n) break;
    Eigen::VectorXd dir = svd.matrixV().col(n - 1);
    if (dir.maxCoeff() <= 0.0) dir = -dir;
    const auto& wts = current.weights();
    double theta = std::numeric_limits<double>::infinity();
    Eigen::Index hit = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (dir[i] > 1e-14 && wts[i] / dir[i] < theta) {
        theta = wts[i] / dir[i];
        hit = i;
      }
    }
    if (hit < 0) break;
    std::vector<double> next(wts.size());
    for (Eigen::Index i = 0; i < n; ++i) next[i] = std::max(0.0, wts[i] - theta * dir[i]);
    next[hit] = 0.0;
    current = restrict_to(current.base(), normalized(next), drop);
  }

  if (!is_design(current, t, 2.0 * tol).verdict) {
    throw InvariantViolation("pruned set no longer verifies as a " + std::to_string(t) +
                             "-design");
  }
  return current;
}

}  // namespace udesign
