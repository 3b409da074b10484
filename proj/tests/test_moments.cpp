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
#include <gtest/gtest.h>

#include "udesign/error.hpp"
#include "udesign/moments.hpp"

namespace udesign {
namespace {

BigCount factorial(int t) {
  BigCount f = 1;
  for (int i = 2; i <= t; ++i) f *= i;
  return f;
}

TEST(Moments, FactorialOnceDimensionCoversDegree) {
  for (int t = 0; t <= 6; ++t) {
    for (int d = t; d <= t + 3; ++d) EXPECT_EQ(haar_moment(std::max(d, 1), t), factorial(t));
  }
  EXPECT_EQ(haar_moment(5, 4), 24);
}

TEST(Moments, Examples) {
  EXPECT_EQ(haar_moment(2, 4), 14);
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(haar_moment(1, t), 1);
}

TEST(Moments, QubitColumnIsCatalan) {
  const std::vector<int> catalan = {1, 2, 5, 14, 42, 132};
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(haar_moment(2, t), catalan[t - 1]);
    EXPECT_EQ(haar_moment_bruteforce(2, t), catalan[t - 1]);
  }
}

TEST(Moments, TwoAlgorithmsAgree) {
  for (int d = 1; d <= 8; ++d) {
    for (int t = 0; t <= 8; ++t) EXPECT_EQ(haar_moment(d, t), haar_moment_bruteforce(d, t));
  }
}

TEST(Moments, MonotoneInDimension) {
  for (int t = 0; t <= 8; ++t) {
    for (int d = 1; d < 8; ++d) EXPECT_LE(haar_moment(d, t), haar_moment(d + 1, t));
  }
}

TEST(Moments, BruteForceIsCapped) {
  EXPECT_THROW(haar_moment_bruteforce(3, kBruteForceMaxT + 1), InputError);
  EXPECT_NO_THROW(haar_moment(3, 20));
}

TEST(Moments, HookLengthCounts) {
  EXPECT_EQ(standard_tableaux_count(Partition({2, 1})), 2);
  EXPECT_EQ(standard_tableaux_count(Partition({3, 2})), 5);
  EXPECT_EQ(standard_tableaux_count(Partition({3, 2, 1})), 16);
  for (int t = 1; t <= 10; ++t) {
    BigCount sum = 0;
    for (const auto& p : partitions_max_parts(t, t)) {
      const BigCount f = standard_tableaux_count(p);
      sum += f * f;
    }
    EXPECT_EQ(sum, factorial(t));
  }
}

}  // namespace
}  // namespace udesign
