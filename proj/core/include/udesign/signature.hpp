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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace udesign {

// A nonincreasing integer sequence of length d >= 1 indexing an irreducible
// representation of U(d).
class Signature {
 public:
  Signature() = default;
  // Throws InputError if the entries are empty or increase anywhere.
  explicit Signature(std::vector<int> entries);
  Signature(std::initializer_list<int> entries)
      : Signature(std::vector<int>(entries)) {}

  // The zero signature of length d.
  static Signature zero(int d);
  // (head..., 0, ..., 0, tail...) of length d, e.g. padded(5, {2}, {-1, -1})
  // is (2,0,0,-1,-1). Throws InputError if the pieces do not fit in d slots
  // or the result is not nonincreasing.
  static Signature padded(int d, const std::vector<int>& head,
                          const std::vector<int>& tail);

  int dim() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

  // sum of entries, |mu|
  int weight() const;
  // sum of the positive entries, |mu_+|
  int positive_weight() const;
  // (-mu_d, ..., -mu_1)
  Signature dual() const;
  bool is_zero() const;

  std::string to_string() const;

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<int> entries_;
};

struct SignatureStats {
  int weight = 0;
  int positive_weight = 0;
  Signature dual;
};

SignatureStats signature_stats(const Signature& mu);

// All length-d signatures with |mu| = r - s and |mu_+| <= r, in descending
// lexicographic order. These index the irreducible constituents of
// (C^d)^{(x)r} (x) (C^d*)^{(x)s}.
std::vector<Signature> enumerate_signatures(int d, int r, int s);

// Integer partition: positive nonincreasing parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Partitions of t with at most d parts, descending lexicographic order.
std::vector<Partition> partitions_max_parts(int t, int d);

}  // namespace udesign
