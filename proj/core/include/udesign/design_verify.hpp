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

#include <limits>
#include <string>
#include <vector>

#include "udesign/repdims.hpp"
#include "udesign/unitary_set.hpp"

namespace udesign {

inline constexpr double kDefaultDesignTol = 1e-6;

enum class Criterion { kFramePotential, kZonalSums, kMomentOperator, kCharacter };

std::string to_string(Criterion c);

struct VerificationReport {
  Criterion criterion = Criterion::kFramePotential;
  int t = 0;
  double tolerance = kDefaultDesignTol;
  BigCount moment = 0;
  // Weighted frame potential and potential - moment. Filled by every
  // criterion so reports can be compared side by side.
  double potential = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
  // The quantity the verdict thresholds:
  //   frame potential: gap / moment
  //   zonal sums:      max over U, mu of |sum_M w(M) Z_{mu,U}(M)| / d_mu^2
  //   moment operator: residual^2 / moment (residual = Frobenius norm)
  double statistic = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  bool verdict = false;
};

// sum_{U,V} w(U) w(V) |tr(U^* V)|^{2t}; uniform weights give the
// normalised frame potential. Never below haar_moment(d, t).
double frame_potential(const WeightedUnitarySet& w, int t);
double frame_potential(const UnitarySet& x, int t);

// Frame-potential test. Verdict: |gap| <= tol * moment. Throws
// InvariantViolation if gap < -tol * moment.
VerificationReport is_design(const WeightedUnitarySet& w, int t,
                             double tol = kDefaultDesignTol);

// Largest t <= t_max passing is_design (0 if none). Throws
// InvariantViolation if the verdicts are not downward closed.
int strength(const WeightedUnitarySet& w, int t_max,
             double tol = kDefaultDesignTol);

// Signatures with |mu| = 0 and 1 <= |mu_+| <= t in dimension d.
std::vector<Signature> nontrivial_balanced_signatures(int d, int t);

// Zonal-sum test: for every U in the set and every mu from
// nontrivial_balanced_signatures, sum_M w(M) Z_{mu,U}(M) must vanish.
// Verdict: every |sum| <= tol * d_mu^2.
VerificationReport zonal_design_check(const WeightedUnitarySet& w, int t,
                                      double tol = kDefaultDesignTol);

// Frobenius norm of sum_U w(U) U^{(x)t} (x) (U^*)^{(x)t} minus the Haar
// average written with permutation operators. t must be 1 or 2 (d >= 2 for
// t = 2) and d^{2t} at most kMaxMomentOperatorDim.
double moment_operator_residual(const WeightedUnitarySet& w, int t);

inline constexpr long kMaxMomentOperatorDim = 2401;

// The Haar average of U^{(x)t} (x) (U^*)^{(x)t} for t in {1, 2}.
Matrix haar_moment_operator(int d, int t);

// Permutation operator on (C^d)^{(x)n}: the tensor factor in slot i moves to
// slot image[i] (0-based).
Matrix permutation_operator(int d, const std::vector<int>& image);

// Verdict: residual^2 <= tol * moment. residual^2 equals the frame-potential
// gap, so this agrees with is_design whenever both are evaluated.
VerificationReport moment_operator_check(const WeightedUnitarySet& w, int t,
                                         double tol = kDefaultDesignTol);

VerificationReport verify(const WeightedUnitarySet& w, int t, Criterion c,
                          double tol = kDefaultDesignTol);

// <Z_{mu,U}, Z_{mu,M}>_X = sum_V w(V) conj(Z_{mu,U}(V)) Z_{mu,M}(V).
Complex quadrature_inner_product(const WeightedUnitarySet& x,
                                 const Signature& mu, const Matrix& u,
                                 const Matrix& m);

}  // namespace udesign
