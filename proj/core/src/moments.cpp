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
#include "udesign/moments.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "udesign/error.hpp"

namespace udesign {

BigCount standard_tableaux_count(const Partition& lambda) {
  const auto& rows = lambda.parts();
  const int n = lambda.weight();
  BigCount hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++below;
      hooks *= (rows[i] - j - 1) + below + 1;
    }
  }
  BigCount fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BigCount q;
  BigCount rem;
  boost::multiprecision::divide_qr(fact, hooks, q, rem);
  if (rem != 0) throw InvariantViolation("hook-length division not exact");
  return q;
}

BigCount haar_moment(int d, int t) {
  if (d < 1 || t < 0) throw InputError("haar_moment: need d >= 1, t >= 0");
  BigCount total = 0;
  for (const Partition& lambda : partitions_max_parts(t, d)) {
    BigCount f = standard_tableaux_count(lambda);
    total += f * f;
  }
  return total;
}

namespace {

int longest_increasing_run(const std::vector<int>& perm) {
  // patience sorting
  std::vector<int> tails;
  for (int x : perm) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

BigCount haar_moment_bruteforce(int d, int t) {
  if (d < 1 || t < 0) throw InputError("haar_moment: need d >= 1, t >= 0");
  if (t > kBruteForceMaxT) {
    throw InputError("brute-force moment limited to t <= 8");
  }
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    if (longest_increasing_run(perm) <= d) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace udesign
