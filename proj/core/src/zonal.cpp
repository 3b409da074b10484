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
#include "udesign/zonal.hpp"

#include <string>

#include "udesign/error.hpp"
#include "udesign/repdims.hpp"

namespace udesign {

TracePowerData trace_powers_of(const Matrix& lambda, int max_power) {
  if (lambda.rows() != lambda.cols() || lambda.rows() == 0) {
    throw InputError("trace_powers: matrix must be square and nonempty");
  }
  if (max_power < 0) throw InputError("trace_powers: max_power must be >= 0");
  TracePowerData tp;
  tp.d = static_cast<int>(lambda.rows());
  tp.p.resize(static_cast<std::size_t>(max_power) + 1);
  tp.p[0] = static_cast<double>(tp.d);
  Matrix power = lambda;
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) power = power * lambda;
    tp.p[static_cast<std::size_t>(k)] = power.trace();
  }
  tp.det = lambda.partialPivLu().determinant();
  return tp;
}

TracePowerData trace_powers(const Matrix& u, const Matrix& m, int max_power,
                            double unitarity_tol) {
  if (u.rows() != m.rows() || u.cols() != m.cols()) {
    throw InputError("trace_powers: dimension mismatch");
  }
  if (!is_unitary(u, unitarity_tol) || !is_unitary(m, unitarity_tol)) {
    throw InputError("trace_powers: input is not unitary within tolerance");
  }
  return trace_powers_of(u.adjoint() * m, max_power);
}

int required_power(const Signature& mu) {
  const int last = mu[mu.dim() - 1];
  return mu.weight() - mu.dim() * last;
}

Complex schur_from_power_sums(const std::vector<int>& lambda,
                              const std::vector<Complex>& p) {
  int ell = 0;
  int total = 0;
  for (int part : lambda) {
    if (part < 0) throw InputError("Schur index must be nonnegative");
    if (part > 0) ++ell;
    total += part;
  }
  if (ell == 0) return {1.0, 0.0};
  if (static_cast<int>(p.size()) <= total) {
    throw InputError("not enough power sums for Schur evaluation");
  }
  // Newton: k h_k = sum_{i=1}^k p_i h_{k-i}
  std::vector<Complex> h(static_cast<std::size_t>(total) + 1);
  h[0] = 1.0;
  for (int k = 1; k <= total; ++k) {
    Complex acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      acc += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
    }
    h[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
  }
  auto hk = [&](int k) -> Complex {
    return (k < 0) ? Complex(0.0) : h[static_cast<std::size_t>(k)];
  };
  if (ell == 1) return hk(lambda[0]);
  Matrix jt(ell, ell);
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < ell; ++j) {
      jt(i, j) = hk(lambda[static_cast<std::size_t>(i)] - i + j);
    }
  }
  return jt.partialPivLu().determinant();
}

Complex char_eval(const Signature& mu, const TracePowerData& tp) {
  const int d = mu.dim();
  if (tp.d != d) throw InputError("char_eval: dimension mismatch");
  const int need = required_power(mu);
  if (tp.max_power() < need) {
    throw InputError("char_eval: need power sums up to " + std::to_string(need));
  }
  const int shift = mu[d - 1];
  std::vector<int> lambda(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) lambda[static_cast<std::size_t>(i)] = mu[i] - shift;
  Complex value = schur_from_power_sums(lambda, tp.p);
  if (shift != 0) {
    // |det| = 1 for unitary L, so negative powers are well conditioned.
    value *= std::pow(tp.det, shift);
  }
  return value;
}

Complex zonal_eval(const Signature& mu, double dim_mu, const TracePowerData& tp) {
  return dim_mu * char_eval(mu, tp);
}

Complex zonal_eval(const Signature& mu, const Matrix& u, const Matrix& m,
                   double unitarity_tol) {
  const auto tp = trace_powers(u, m, required_power(mu), unitarity_tol);
  return zonal_eval(mu, weyl_dimension(mu).convert_to<double>(), tp);
}

Signature table1_signature(Table1Row row, int d) {
  switch (row) {
    case Table1Row::kTrivial: return Signature::zero(d);
    case Table1Row::kFundamental: return Signature::padded(d, {1}, {});
    case Table1Row::kAdjoint: return Signature::padded(d, {1}, {-1});
    case Table1Row::kTwoOneBar: return Signature::padded(d, {2}, {-1});
    case Table1Row::kOneOneOneBar: return Signature::padded(d, {1, 1}, {-1});
    case Table1Row::kTwoTwoBar: return Signature::padded(d, {2}, {-2});
    case Table1Row::kTwoOneOneBar: return Signature::padded(d, {2}, {-1, -1});
    case Table1Row::kOneOneTwoBar: return Signature::padded(d, {1, 1}, {-2});
    case Table1Row::kOneOneOneOneBar:
      return Signature::padded(d, {1, 1}, {-1, -1});
  }
  throw InputError("unknown table row");
}

Complex zonal_table1_oracle(Table1Row row, const Matrix& u, const Matrix& m) {
  const int di = static_cast<int>(u.rows());
  table1_signature(row, di);  // rejects rows that do not fit
  const double d = di;
  const Matrix lambda = u.adjoint() * m;
  const Complex t1 = lambda.trace();
  const Complex t2 = (lambda * lambda).trace();
  const Complex sq = t1 * t1;
  const double abs1 = std::norm(t1);
  switch (row) {
    case Table1Row::kTrivial:
      return 1.0;
    case Table1Row::kFundamental:
      return d * t1;
    case Table1Row::kAdjoint:
      return (d * d - 1.0) * (abs1 - 1.0);
    case Table1Row::kTwoOneBar:
      return d * (d - 1.0) * (d + 2.0) / 2.0 *
             (0.5 * (sq + t2) * std::conj(t1) - t1);
    case Table1Row::kOneOneOneBar:
      return d * (d + 1.0) * (d - 2.0) / 2.0 *
             (0.5 * (sq - t2) * std::conj(t1) - t1);
    case Table1Row::kTwoTwoBar:
      return d * d * (d - 1.0) * (d + 3.0) / 4.0 *
             (0.25 * std::norm(sq + t2) - abs1);
    case Table1Row::kTwoOneOneBar:
      return (d * d - 1.0) * (d * d - 4.0) / 4.0 *
             (0.25 * (sq + t2) * std::conj(sq - t2) - abs1 + 1.0);
    case Table1Row::kOneOneTwoBar:
      return (d * d - 1.0) * (d * d - 4.0) / 4.0 *
             (0.25 * (sq - t2) * std::conj(sq + t2) - abs1 + 1.0);
    case Table1Row::kOneOneOneOneBar:
      return d * d * (d + 1.0) * (d - 3.0) / 4.0 *
             (0.25 * std::norm(sq - t2) - abs1);
  }
  throw InputError("unknown table row");
}

}  // namespace udesign
