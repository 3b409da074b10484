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

#include "udesign/matrix.hpp"
#include "udesign/signature.hpp"

namespace udesign {

inline constexpr double kDefaultUnitarityTol = 1e-8;

// Power sums p_k = tr(L^k), k = 0..K (p_0 = d), and det L, for L = U^* M.
// Everything the characters of U(d) need, without an eigendecomposition.
struct TracePowerData {
  int d = 0;
  std::vector<Complex> p;
  Complex det{1.0, 0.0};

  int max_power() const { return static_cast<int>(p.size()) - 1; }
};

// Power sums of an arbitrary square matrix by repeated multiplication; the
// determinant by partial-pivot LU.
TracePowerData trace_powers_of(const Matrix& lambda, int max_power);

// Power sums of L = U^* M. Throws InputError on dimension mismatch or when
// either input is farther than unitarity_tol from unitary.
TracePowerData trace_powers(const Matrix& u, const Matrix& m, int max_power,
                            double unitarity_tol = kDefaultUnitarityTol);

// |mu'| where mu' = mu - mu_d: the highest power sum needed by char_eval.
int required_power(const Signature& mu);

// Schur polynomial s_lambda of the eigenvalues, from power sums via Newton's
// identities and the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
// lambda must have nonnegative entries.
Complex schur_from_power_sums(const std::vector<int>& lambda,
                              const std::vector<Complex>& p);

// Irreducible character chi_mu(L) = det(L)^{mu_d} s_{mu'}(L).
// Throws InputError if tp has too few power sums or the wrong dimension.
Complex char_eval(const Signature& mu, const TracePowerData& tp);

// Zonal polynomial Z_{mu,U}(M) = d_mu chi_mu(U^* M).
Complex zonal_eval(const Signature& mu, const Matrix& u, const Matrix& m,
                   double unitarity_tol = kDefaultUnitarityTol);

// Same, from precomputed power sums; d_mu is passed in so batch callers can
// hoist it.
Complex zonal_eval(const Signature& mu, double dim_mu, const TracePowerData& tp);

// The rows of the closed-form zonal table, each a zero-padded signature
// shape valid for large enough d.
enum class Table1Row {
  kTrivial,          // (0,...,0)
  kFundamental,      // (1,0,...,0)
  kAdjoint,          // (1,0,...,0,-1)
  kTwoOneBar,        // (2,0,...,0,-1)
  kOneOneOneBar,     // (1,1,0,...,0,-1)
  kTwoTwoBar,        // (2,0,...,0,-2)
  kTwoOneOneBar,     // (2,0,...,0,-1,-1)
  kOneOneTwoBar,     // (1,1,0,...,0,-2)
  kOneOneOneOneBar,  // (1,1,0,...,0,-1,-1)
};

inline constexpr Table1Row kAllTable1Rows[] = {
    Table1Row::kTrivial,       Table1Row::kFundamental,
    Table1Row::kAdjoint,       Table1Row::kTwoOneBar,
    Table1Row::kOneOneOneBar,  Table1Row::kTwoTwoBar,
    Table1Row::kTwoOneOneBar,  Table1Row::kOneOneTwoBar,
    Table1Row::kOneOneOneOneBar};

// The signature of a table row in dimension d; throws InputError if the row
// does not fit in d slots.
Signature table1_signature(Table1Row row, int d);

// Closed-form Z_{mu,U}(M) in terms of tr L, tr L^2 and conjugates.
// Throws InputError when the row's signature does not fit in dimension d.
Complex zonal_table1_oracle(Table1Row row, const Matrix& u, const Matrix& m);

}  // namespace udesign
