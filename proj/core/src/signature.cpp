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
#include "udesign/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "udesign/error.hpp"

namespace udesign {

Signature::Signature(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("signature must have length >= 1");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw InputError("signature entries must be nonincreasing: " +
                       to_string());
    }
  }
}

Signature Signature::zero(int d) {
  if (d < 1) throw InputError("signature dimension must be >= 1");
  return Signature(std::vector<int>(static_cast<std::size_t>(d), 0));
}

Signature Signature::padded(int d, const std::vector<int>& head,
                            const std::vector<int>& tail) {
  if (d < 1 || head.size() + tail.size() > static_cast<std::size_t>(d)) {
    throw InputError("signature pieces do not fit in dimension " +
                     std::to_string(d));
  }
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  std::copy(head.begin(), head.end(), e.begin());
  std::copy(tail.begin(), tail.end(), e.end() - static_cast<long>(tail.size()));
  return Signature(std::move(e));
}

int Signature::weight() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int Signature::positive_weight() const {
  int w = 0;
  for (int x : entries_) w += std::max(x, 0);
  return w;
}

Signature Signature::dual() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  for (int& x : e) x = -x;
  return Signature(std::move(e));
}

bool Signature::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int x) { return x == 0; });
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

SignatureStats signature_stats(const Signature& mu) {
  return {mu.weight(), mu.positive_weight(), mu.dual()};
}

namespace {

// Fills slot i onward with entries <= cap, tracking the running sum and the
// positive part. Entries lie in [-s, r]; enumeration goes high to low so the
// output is in descending lexicographic order.
void fill_signatures(int d, int r, int s, int i, int cap, int sum, int pos,
                     std::vector<int>& cur, std::vector<Signature>& out) {
  const int target = r - s;
  if (i == d) {
    if (sum == target) out.emplace_back(cur);
    return;
  }
  const int remaining = d - i;
  for (int x = cap; x >= -s; --x) {
    const int npos = pos + std::max(x, 0);
    if (npos > r) continue;
    const int nsum = sum + x;
    // The remaining slots hold values in [-s, x].
    const int rest = remaining - 1;
    if (nsum + rest * x < target) break;
    if (nsum - rest * s > target) continue;
    cur[static_cast<std::size_t>(i)] = x;
    fill_signatures(d, r, s, i + 1, x, nsum, npos, cur, out);
  }
}

}  // namespace

std::vector<Signature> enumerate_signatures(int d, int r, int s) {
  if (d < 1) throw InputError("enumerate_signatures: d must be >= 1");
  if (r < 0 || s < 0) throw InputError("enumerate_signatures: r, s must be >= 0");
  std::vector<Signature> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  fill_signatures(d, r, s, 0, r, 0, 0, cur, out);
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InputError("partition parts must be positive and nonincreasing");
    }
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void fill_partitions(int remaining, int max_part, int slots,
                     std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (p * slots < remaining) break;
    cur.push_back(p);
    fill_partitions(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_max_parts(int t, int d) {
  if (t < 0 || d < 1) throw InputError("partitions_max_parts: need t >= 0, d >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  fill_partitions(t, t, d, cur, out);
  return out;
}

}  // namespace udesign
