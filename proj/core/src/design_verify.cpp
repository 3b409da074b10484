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
#include "udesign/design_verify.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "udesign/error.hpp"
#include "udesign/moments.hpp"

namespace udesign {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::kFramePotential: return "frame_potential";
    case Criterion::kZonalSums: return "zonal_sums";
    case Criterion::kMomentOperator: return "moment_operator";
    case Criterion::kCharacter: return "character";
  }
  return "unknown";
}

namespace {

void require_nonempty(const WeightedUnitarySet& w, int t) {
  if (w.size() == 0) throw InputError("design check needs a nonempty set");
  if (t < 0) throw InputError("design strength t must be >= 0");
}

double int_pow(double x, int t) {
  double r = 1.0;
  for (int i = 0; i < t; ++i) r *= x;
  return r;
}

}  // namespace

double frame_potential(const WeightedUnitarySet& w, int t) {
  require_nonempty(w, t);
  const auto n = static_cast<Eigen::Index>(w.size());
  const Eigen::Map<const Eigen::VectorXd> weights(w.weights().data(), n);
  double total = 0.0;
  stream_gram_abs2(w.base(), [&](Eigen::Index r0, const RealMatrix& block) {
    const RealMatrix powered = block.unaryExpr([t](double v) { return int_pow(v, t); });
    const Eigen::VectorXd rows = powered * weights;
    total += rows.dot(weights.segment(r0, block.rows()));
  });
  return total;
}

double frame_potential(const UnitarySet& x, int t) {
  return frame_potential(WeightedUnitarySet(x), t);
}

VerificationReport is_design(const WeightedUnitarySet& w, int t, double tol) {
  require_nonempty(w, t);
  VerificationReport rep;
  rep.criterion = Criterion::kFramePotential;
  rep.t = t;
  rep.tolerance = tol;
  rep.moment = haar_moment(w.dim(), t);
  const double moment = rep.moment.convert_to<double>();
  rep.potential = frame_potential(w, t);
  rep.gap = rep.potential - moment;
  rep.statistic = rep.gap / moment;
  if (rep.gap < -tol * moment) {
    throw InvariantViolation("frame potential " + std::to_string(rep.potential) +
                             " is below the Haar moment " +
                             std::to_string(moment));
  }
  rep.verdict = std::abs(rep.gap) <= tol * moment;
  return rep;
}

int strength(const WeightedUnitarySet& w, int t_max, double tol) {
  if (t_max < 1) throw InputError("strength: t_max must be >= 1");
  int best = 0;
  bool failed = false;
  for (int t = 1; t <= t_max; ++t) {
    const bool ok = is_design(w, t, tol).verdict;
    if (ok && failed) {
      throw InvariantViolation("design verdicts are not downward closed at t = " +
                               std::to_string(t) + "; check the tolerance");
    }
    if (ok) best = t;
    else failed = true;
  }
  return best;
}

std::vector<Signature> nontrivial_balanced_signatures(int d, int t) {
  std::vector<Signature> out;
  for (Signature& mu : enumerate_signatures(d, t, t)) {
    if (!mu.is_zero()) out.push_back(std::move(mu));
  }
  return out;
}

VerificationReport zonal_design_check(const WeightedUnitarySet& w, int t,
                                      double tol) {
  require_nonempty(w, t);
  const int d = w.dim();
  const auto sigs = nontrivial_balanced_signatures(d, t);
  std::vector<double> dims;
  int k = 1;
  for (const Signature& mu : sigs) {
    dims.push_back(weyl_dimension(mu).convert_to<double>());
    k = std::max(k, required_power(mu));
  }
  const std::size_t n = w.size();
  const auto& mats = w.base().matrices();
  const auto& wt = w.weights();
  // sums(m, i) = sum_j w_j Z_{mu_m, U_i}(U_j)
  Matrix sums = Matrix::Zero(static_cast<Eigen::Index>(sigs.size()),
                             static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ui_adj = mats[i].adjoint();
    for (std::size_t j = i; j < n; ++j) {
      // L_ji = L_ij^*, whose power sums and determinant are conjugates.
      const TracePowerData tp = trace_powers_of(ui_adj * mats[j], k);
      for (std::size_t m = 0; m < sigs.size(); ++m) {
        const Complex z = zonal_eval(sigs[m], dims[m], tp);
        const auto mi = static_cast<Eigen::Index>(m);
        sums(mi, static_cast<Eigen::Index>(i)) += wt[j] * z;
        if (j != i) sums(mi, static_cast<Eigen::Index>(j)) += wt[i] * std::conj(z);
      }
    }
  }
  double worst = 0.0;
  for (std::size_t m = 0; m < sigs.size(); ++m) {
    const double scale = dims[m] * dims[m];
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(sums(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(i))) /
                                  scale);
    }
  }
  VerificationReport rep;
  rep.criterion = Criterion::kZonalSums;
  rep.t = t;
  rep.tolerance = tol;
  rep.moment = haar_moment(d, t);
  rep.potential = frame_potential(w, t);
  rep.gap = rep.potential - rep.moment.convert_to<double>();
  rep.statistic = worst;
  rep.verdict = worst <= tol;
  return rep;
}

Matrix permutation_operator(int d, const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  long dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  Matrix p = Matrix::Zero(dim, dim);
  std::vector<int> in(static_cast<std::size_t>(n));
  std::vector<int> out(static_cast<std::size_t>(n));
  for (long a = 0; a < dim; ++a) {
    long rest = a;
    for (int i = n - 1; i >= 0; --i) {
      in[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] =
          in[static_cast<std::size_t>(i)];
    }
    long b = 0;
    for (int i = 0; i < n; ++i) b = b * d + out[static_cast<std::size_t>(i)];
    p(b, a) = 1.0;
  }
  return p;
}

Matrix haar_moment_operator(int d, int t) {
  const double dd = d;
  if (t == 1) return permutation_operator(d, {1, 0}) / dd;
  if (t == 2) {
    if (d < 2) throw InputError("t = 2 moment operator needs d >= 2");
    // slots 1..4 -> 0..3; (13)(24), (14)(23), (1423), (1324)
    const Matrix p1324 = permutation_operator(d, {2, 3, 0, 1});
    const Matrix p1423 = permutation_operator(d, {3, 2, 1, 0});
    const Matrix c1423 = permutation_operator(d, {3, 2, 0, 1});
    const Matrix c1324 = permutation_operator(d, {2, 3, 1, 0});
    return (p1324 + p1423) / (dd * dd - 1.0) -
           (c1423 + c1324) / (dd * (dd * dd - 1.0));
  }
  throw InputError("moment operator available for t = 1, 2 only");
}

double moment_operator_residual(const WeightedUnitarySet& w, int t) {
  require_nonempty(w, t);
  if (t != 1 && t != 2) throw InputError("moment operator available for t = 1, 2 only");
  const int d = w.dim();
  long dim = 1;
  for (int i = 0; i < 2 * t; ++i) dim *= d;
  if (dim > kMaxMomentOperatorDim) {
    throw InputError("moment operator too large for d = " + std::to_string(d));
  }
  Matrix acc = -haar_moment_operator(d, t);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Matrix& u = w.base()[i];
    const Matrix ua = u.adjoint();
    if (t == 1) {
      acc += w.weights()[i] * Matrix(Eigen::kroneckerProduct(u, ua));
    } else {
      const Matrix uu = Eigen::kroneckerProduct(u, u);
      const Matrix aa = Eigen::kroneckerProduct(ua, ua);
      acc += w.weights()[i] * Matrix(Eigen::kroneckerProduct(uu, aa));
    }
  }
  return acc.norm();
}

VerificationReport moment_operator_check(const WeightedUnitarySet& w, int t,
                                         double tol) {
  VerificationReport rep;
  rep.criterion = Criterion::kMomentOperator;
  rep.t = t;
  rep.tolerance = tol;
  rep.residual = moment_operator_residual(w, t);
  rep.moment = haar_moment(w.dim(), t);
  const double moment = rep.moment.convert_to<double>();
  rep.potential = frame_potential(w, t);
  rep.gap = rep.potential - moment;
  rep.statistic = rep.residual * rep.residual / moment;
  rep.verdict = rep.statistic <= tol;
  return rep;
}

VerificationReport verify(const WeightedUnitarySet& w, int t, Criterion c,
                          double tol) {
  switch (c) {
    case Criterion::kFramePotential: return is_design(w, t, tol);
    case Criterion::kZonalSums: return zonal_design_check(w, t, tol);
    case Criterion::kMomentOperator: return moment_operator_check(w, t, tol);
    case Criterion::kCharacter: break;
  }
  throw InputError("unknown criterion");
}

Complex quadrature_inner_product(const WeightedUnitarySet& x,
                                 const Signature& mu, const Matrix& u,
                                 const Matrix& m) {
  const double dim_mu = weyl_dimension(mu).convert_to<double>();
  const int k = required_power(mu);
  const Matrix ua = u.adjoint();
  const Matrix ma = m.adjoint();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Matrix& v = x.base()[i];
    const Complex zu = zonal_eval(mu, dim_mu, trace_powers_of(ua * v, k));
    const Complex zm = zonal_eval(mu, dim_mu, trace_powers_of(ma * v, k));
    acc += x.weights()[i] * std::conj(zu) * zm;
  }
  return acc;
}

}  // namespace udesign
