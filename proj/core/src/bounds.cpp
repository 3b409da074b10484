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
#include "udesign/bounds.hpp"

#include <cmath>

#include "udesign/error.hpp"
#include "udesign/zonal.hpp"

namespace udesign {

using Rational = boost::rational<long long>;

BigCount absolute_design_bound(int d, int t) {
  if (t < 1) throw InputError("absolute_design_bound: t must be >= 1");
  return dim_hom(d, (t + 1) / 2, t / 2);
}

BigCount absolute_code_bound(int d, int s, bool has_orthogonal_pair) {
  if (s < 1) throw InputError("absolute_code_bound: s must be >= 1");
  return has_orthogonal_pair ? dim_hom(d, s, s - 1) : dim_hom(d, s, s);
}

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void check_pair_conditions(double a, double b, bool design_side) {
  if (design_side && !(a < b)) {
    throw InputError("precondition failed: alpha < beta");
  }
  if (!(a + b <= 4.0)) {
    throw InputError("precondition failed: alpha + beta <= 4");
  }
  if (!(a + b < a * b + 2.0)) {
    throw InputError("precondition failed: alpha + beta < alpha*beta + 2");
  }
}

}  // namespace

BoundReport rel_code_bound_1(int d, double alpha) {
  if (!(alpha >= 0.0) || !(alpha < 1.0)) {
    throw InputError("precondition failed: 0 <= alpha < 1");
  }
  const double d2 = static_cast<double>(d) * d;
  return {(d2 - alpha) / (1.0 - alpha), std::nullopt,
          "equality iff the set is a 1-design"};
}

BoundReport rel_code_bound_1(int d, Rational alpha) {
  if (alpha < 0 || alpha >= 1) throw InputError("precondition failed: 0 <= alpha < 1");
  const Rational d2(static_cast<long long>(d) * d);
  const Rational exact = (d2 - alpha) / (Rational(1) - alpha);
  return {to_double(exact), exact, "equality iff the set is a 1-design"};
}

BoundReport rel_code_bound_2(int d, double alpha, double beta) {
  check_pair_conditions(alpha, beta, false);
  const double d2 = static_cast<double>(d) * d;
  return {(d2 - alpha) * (d2 - beta) / (alpha * beta - alpha - beta + 2.0),
          std::nullopt, "equality iff the set is a 2-design"};
}

BoundReport rel_code_bound_2(int d, Rational alpha, Rational beta) {
  check_pair_conditions(to_double(alpha), to_double(beta), false);
  const Rational d2(static_cast<long long>(d) * d);
  const Rational exact =
      (d2 - alpha) * (d2 - beta) / (alpha * beta - alpha - beta + Rational(2));
  return {to_double(exact), exact, "equality iff the set is a 2-design"};
}

BoundReport rel_design_bound_1(int d, double alpha) {
  if (!(alpha < 1.0)) throw InputError("precondition failed: alpha < 1");
  const double d2 = static_cast<double>(d) * d;
  return {(d2 - alpha) / (1.0 - alpha), std::nullopt,
          "equality iff |tr(U*M)|^2 = alpha for all distinct pairs"};
}

BoundReport rel_design_bound_2(int d, double alpha, double beta) {
  check_pair_conditions(alpha, beta, true);
  const double d2 = static_cast<double>(d) * d;
  return {(d2 - alpha) * (d2 - beta) / (alpha * beta - alpha - beta + 2.0),
          std::nullopt,
          "equality iff |tr(U*M)|^2 takes only the values alpha, beta"};
}

void ZonalExpansion::set(const Signature& mu, double coefficient) {
  if (mu.dim() != d_) throw InputError("expansion signature has wrong length");
  if (mu.weight() != 0) throw InputError("expansion signatures must have |mu| = 0");
  coeffs_[mu] = coefficient;
}

double ZonalExpansion::constant_term() const {
  auto it = coeffs_.find(Signature::zero(d_));
  return it == coeffs_.end() ? 0.0 : it->second;
}

double ZonalExpansion::value_at_identity() const {
  double total = 0.0;
  for (const auto& [mu, c] : coeffs_) {
    const double dm = weyl_dimension(mu).convert_to<double>();
    total += c * dm * dm;
  }
  return total;
}

double ZonalExpansion::evaluate(const Matrix& u, const Matrix& m) const {
  int k = 0;
  for (const auto& [mu, c] : coeffs_) k = std::max(k, required_power(mu));
  const TracePowerData tp = trace_powers(u, m, std::max(k, 1));
  Complex total = 0.0;
  for (const auto& [mu, c] : coeffs_) {
    total += c * zonal_eval(mu, weyl_dimension(mu).convert_to<double>(), tp);
  }
  return total.real();
}

double general_relative_bound(const ZonalExpansion& f) {
  const double c0 = f.constant_term();
  if (!(c0 > 0.0)) throw InputError("sign pattern violated: constant term must be > 0");
  for (const auto& [mu, c] : f.coefficients()) {
    if (c < 0.0) {
      throw InputError("sign pattern violated: coefficient of " + mu.to_string() +
                       " is negative");
    }
  }
  return f.value_at_identity() / c0;
}

std::vector<std::pair<std::size_t, std::size_t>> check_annihilator_hypothesis(
    const ZonalExpansion& f, const UnitarySet& x, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i != j && f.evaluate(x[i], x[j]) > tol) bad.emplace_back(i, j);
    }
  }
  return bad;
}

ZonalExpansion one_distance_expansion(int d, double alpha) {
  const double d2 = static_cast<double>(d) * d;
  ZonalExpansion f(d);
  f.set(Signature::zero(d), 1.0 - alpha);
  f.set(Signature::padded(d, {1}, {-1}), 1.0 / (d2 - 1.0));
  return f;
}

ZonalExpansion two_distance_expansion(int d, double alpha, double beta) {
  if (d < 3) throw InputError("two-distance expansion needs d >= 3");
  const double d2 = static_cast<double>(d) * d;
  ZonalExpansion f(d);
  f.set(Signature::zero(d), alpha * beta - alpha - beta + 2.0);
  f.set(Signature::padded(d, {1}, {-1}), (4.0 - alpha - beta) / (d2 - 1.0));
  // (|tr L|^2)^2 part: each degree-two zonal term enters as Z_mu / d_mu.
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes = {
      {{2}, {-2}}, {{2}, {-1, -1}}, {{1, 1}, {-2}}, {{1, 1}, {-1, -1}}};
  for (const auto& [head, tail] : shapes) {
    if (head.size() + tail.size() > static_cast<std::size_t>(d)) continue;
    const Signature mu = Signature::padded(d, head, tail);
    f.set(mu, 1.0 / weyl_dimension(mu).convert_to<double>());
  }
  return f;
}

Complex annihilator_Ft(int d, int t, const Matrix& u, const Matrix& m) {
  if (t < 1) throw InputError("annihilator_Ft: t must be >= 1");
  if (u.rows() != d) throw InputError("annihilator_Ft: dimension mismatch");
  const auto sigs = enumerate_signatures(d, (t + 1) / 2, t / 2);
  int k = 1;
  for (const Signature& mu : sigs) k = std::max(k, required_power(mu));
  const TracePowerData tp = trace_powers(u, m, k);
  Complex total = 0.0;
  for (const Signature& mu : sigs) {
    total += zonal_eval(mu, weyl_dimension(mu).convert_to<double>(), tp);
  }
  return total;
}

double tight3_residual(const TracePowerData& tp) {
  if (tp.max_power() < 2) throw InputError("tight3_residual needs tr(L^2)");
  const double d = tp.d;
  const Complex t1 = tp.p[1];
  const Complex t2 = tp.p[2];
  const Complex lhs = 0.5 * ((d * d - 2.0) * t1 * t1 + d * t2) * std::conj(t1);
  return std::abs(lhs - (d * d - 3.0) * t1);
}

double tight3_residual(const Matrix& u, const Matrix& m) {
  return tight3_residual(trace_powers(u, m, 2));
}

}  // namespace udesign
