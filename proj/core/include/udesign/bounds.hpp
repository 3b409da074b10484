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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "udesign/repdims.hpp"
#include "udesign/unitary_set.hpp"

namespace udesign {

// A real bound with an optional exact rational value (present when every
// input was rational) and a note on what equality would mean.
struct BoundReport {
  double value = 0.0;
  std::optional<boost::rational<long long>> exact;
  std::string equality;
};

// |X| >= dim Hom(d, ceil(t/2), floor(t/2)) for any t-design.
BigCount absolute_design_bound(int d, int t);

// |X| <= dim Hom(d, s, s) for an s-distance set, or dim Hom(d, s, s-1) when
// some pair is orthogonal.
BigCount absolute_code_bound(int d, int s, bool has_orthogonal_pair);

// 1-distance sets with |tr(U^* M)|^2 = alpha < 1: |X| <= (d^2 - alpha)/(1 - alpha),
// equality iff X is a 1-design.
BoundReport rel_code_bound_1(int d, double alpha);
BoundReport rel_code_bound_1(int d, boost::rational<long long> alpha);

// 2-distance sets with values alpha, beta satisfying alpha + beta <= 4 and
// alpha + beta < alpha beta + 2:
//   |X| <= (d^2 - alpha)(d^2 - beta) / (alpha beta - alpha - beta + 2),
// equality iff X is a 2-design. Throws InputError naming the failed
// inequality.
BoundReport rel_code_bound_2(int d, double alpha, double beta);
BoundReport rel_code_bound_2(int d, boost::rational<long long> alpha,
                             boost::rational<long long> beta);

// Design-side versions: lower bounds with the same formulas. The pair
// version additionally needs alpha < beta.
BoundReport rel_design_bound_1(int d, double alpha);
BoundReport rel_design_bound_2(int d, double alpha, double beta);

// F = sum over zero-weight signatures mu of c_mu Z_mu.
class ZonalExpansion {
 public:
  explicit ZonalExpansion(int d) : d_(d) {}

  // Throws InputError if mu has the wrong length or |mu| != 0.
  void set(const Signature& mu, double coefficient);

  int dim() const { return d_; }
  const std::map<Signature, double>& coefficients() const { return coeffs_; }
  double constant_term() const;

  // F(I) = sum c_mu d_mu^2.
  double value_at_identity() const;
  // F evaluated at L = U^* M.
  double evaluate(const Matrix& u, const Matrix& m) const;

 private:
  int d_;
  std::map<Signature, double> coeffs_;
};

// |X| <= F(I) / c_0 for a set on which F(U^* M) <= 0 off the diagonal.
// Validates the sign pattern only (c_0 > 0, all c_mu >= 0).
double general_relative_bound(const ZonalExpansion& f);

// Off-diagonal pairs (i, j) of x where F(U_i^* U_j) > tol, i.e. where the
// pointwise hypothesis of general_relative_bound fails.
std::vector<std::pair<std::size_t, std::size_t>> check_annihilator_hypothesis(
    const ZonalExpansion& f, const UnitarySet& x, double tol = 1e-9);

// Expansions behind rel_code_bound_1 and rel_code_bound_2, written in zonal
// polynomials of dimension d.
ZonalExpansion one_distance_expansion(int d, double alpha);
ZonalExpansion two_distance_expansion(int d, double alpha, double beta);

// F_t = sum of Z_mu over enumerate_signatures(d, ceil(t/2), floor(t/2)),
// evaluated at U^* M. Equals dim_hom at M = U; vanishes on distinct pairs of
// a tight t-design.
Complex annihilator_Ft(int d, int t, const Matrix& u, const Matrix& m);

// | 1/2 [(d^2 - 2) tr(L)^2 + d tr(L^2)] conj(tr L) - (d^2 - 3) tr L |, the
// defect of the trace identity every distinct pair of a tight 3-design obeys.
double tight3_residual(const Matrix& u, const Matrix& m);
double tight3_residual(const TracePowerData& tp);

}  // namespace udesign
