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

#include <vector>

#include "udesign/design_verify.hpp"
#include "udesign/unitary_set.hpp"

namespace udesign {

inline constexpr long kDefaultFitMaxIter = 100000;
// Pairwise gap max_{support} (Kw)_i - min_j (Kw)_j below which a fit is
// declared stationary.
inline constexpr double kStationarityTol = 1e-10;

struct FitResult {
  std::vector<double> weights;
  double potential = 0.0;
  double moment = 0.0;
  double gap = 0.0;  // potential - moment
  long iterations = 0;
  bool converged = false;
  bool stationary = false;
  std::vector<double> history;  // objective after each iteration, history[0] at start
};

// Minimizes w^T K w over the simplex, K_ij = |tr(U_i^* U_j)|^{2t}, with
// pairwise conditional-gradient steps from the uniform start. Exhausting
// max_iter is not an error: the result comes back with converged = false.
FitResult fit_weights(const UnitarySet& pool, int t, double tol = kDefaultDesignTol,
                      long max_iter = kDefaultFitMaxIter);

// Balanced signatures mu (|mu| = 0, |mu_+| <= t) that fit in dimension d,
// including the zero signature.
std::vector<Signature> moment_signatures(int d, int t);

// Real matrix whose kernel is the set of weight perturbations leaving every
// moment sum_U w(U) Z_{mu,V}(U) unchanged, for V ranging over x.
RealMatrix zonal_constraint_matrix(const UnitarySet& x, int t);

// Reduces the support of a weighted t-design: merges phase duplicates,
// projects the weights onto the exact design set of the current support,
// drops negligible weights, then moves along kernel directions of the zonal
// constraint matrix until a weight vanishes, repeating until the kernel is
// trivial. Throws InputError if w is not a t-design within tol.
WeightedUnitarySet prune_support(const WeightedUnitarySet& w, int t,
                                 double tol = kDefaultDesignTol);

}  // namespace udesign
