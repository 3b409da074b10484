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
#include "udesign/repdims.hpp"

#include <utility>

#include "udesign/error.hpp"

namespace udesign {

BigCount weyl_dimension(const Signature& mu) {
  const int d = mu.dim();
  BigCount num = 1;
  BigCount den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= mu[i] - mu[j] + (j - i);
      den *= j - i;
    }
  }
  BigCount q;
  BigCount rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0 || q <= 0) {
    throw InvariantViolation("Weyl dimension not a positive integer for " +
                             mu.to_string());
  }
  return q;
}

BigCount dim_hom(int d, int r, int s) {
  BigCount total = 0;
  for (const Signature& mu : enumerate_signatures(d, r, s)) {
    BigCount dm = weyl_dimension(mu);
    total += dm * dm;
  }
  return total;
}

BigCount binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

std::optional<BigCount> dim_hom_closed(int d, int r, int s) {
  if (d < 1 || r < 0 || s < 0) return std::nullopt;
  if (r < s) std::swap(r, s);
  const BigCount x = d;
  const BigCount x2 = x * x;
  const BigCount x4 = x2 * x2;
  const BigCount x6 = x4 * x2;
  const BigCount x8 = x4 * x4;

  if (s == 0) return binomial(static_cast<long>(d) * d + r - 1, r);
  if (d == 2) return binomial(r + s + 3, 3);

  if (r == 1 && s == 1) return x4 - 2 * x2 + 2;
  if (r == 2 && s == 1 && d >= 2) return x2 * (x4 - 3 * x2 + 6) / 2;
  if (r == 2 && s == 2 && d >= 3) {
    return (x8 - 6 * x6 + 25 * x4 - 28 * x2 + 16) / 4;
  }
  if (r == 3 && s == 2) {
    if (d == 3) return BigCount(2835);
    if (d >= 4) return x2 * (x8 - 8 * x6 + 47 * x4 - 88 * x2 + 84) / 12;
  }
  if (r == 3 && s == 3) {
    if (d == 3) return BigCount(7540);
    if (d == 4) return BigCount(265879);
    if (d >= 5) {
      const BigCount x10 = x8 * x2;
      const BigCount x12 = x6 * x6;
      return (x12 - 12 * x10 + 103 * x8 - 378 * x6 + 778 * x4 - 600 * x2 +
              252) /
             36;
    }
  }
  return std::nullopt;
}

}  // namespace udesign
