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
#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "udesign/error.hpp"
#include "udesign/signature.hpp"

namespace udesign {
namespace {

// All nonincreasing length-d vectors with entries in [lo, hi].
void scan(int d, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  const int top = cur.empty() ? hi : cur.back();
  for (int v = lo; v <= top; ++v) {
    cur.push_back(v);
    scan(d, lo, hi, cur, out);
    cur.pop_back();
  }
}

std::set<Signature> brute_force(int d, int r, int s) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  scan(d, -s, r, cur, all);
  std::set<Signature> out;
  for (auto& v : all) {
    Signature mu(v);
    if (mu.weight() == r - s && mu.positive_weight() <= r) out.insert(mu);
  }
  return out;
}

TEST(Signature, RejectsIncreasingOrEmpty) {
  EXPECT_THROW(Signature({0, 1}), InputError);
  EXPECT_THROW(Signature(std::vector<int>{}), InputError);
  EXPECT_NO_THROW(Signature({3, 3, -1}));
}

TEST(Signature, PaddedPlacesHeadAndTail) {
  EXPECT_EQ(Signature::padded(5, {2}, {-1, -1}), Signature({2, 0, 0, -1, -1}));
  EXPECT_EQ(Signature::padded(2, {1}, {-1}), Signature({1, -1}));
  EXPECT_THROW(Signature::padded(2, {1, 1}, {-1}), InputError);
}

TEST(Signature, StatsExamples) {
  auto st = signature_stats(Signature({1, 1, 0, -1}));
  EXPECT_EQ(st.weight, 1);
  EXPECT_EQ(st.positive_weight, 2);
  EXPECT_EQ(st.dual, Signature({1, 0, -1, -1}));

  st = signature_stats(Signature::zero(4));
  EXPECT_EQ(st.weight, 0);
  EXPECT_EQ(st.positive_weight, 0);
  EXPECT_EQ(st.dual, Signature::zero(4));

  st = signature_stats(Signature({2, 0, -2}));
  EXPECT_EQ(st.weight, 0);
  EXPECT_EQ(st.positive_weight, 2);
  EXPECT_EQ(st.dual, Signature({2, 0, -2}));
}

TEST(Enumerate, ThreeTwoTwo) {
  const auto sigs = enumerate_signatures(3, 2, 2);
  const std::vector<Signature> expected = {
      {2, 0, -2}, {2, -1, -1}, {1, 1, -2}, {1, 0, -1}, {0, 0, 0}};
  EXPECT_EQ(sigs, expected);
}

TEST(Enumerate, SmallCases) {
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(enumerate_signatures(d, 0, 0), std::vector<Signature>{Signature::zero(d)});
  }
  EXPECT_EQ(enumerate_signatures(2, 1, 0), std::vector<Signature>{Signature({1, 0})});
  // |mu| = 1 cannot be written with one slot and |mu_+| <= 0.
  EXPECT_TRUE(enumerate_signatures(1, 0, 1).size() == 1);
  EXPECT_EQ(enumerate_signatures(1, 0, 1)[0], Signature({-1}));
}

TEST(Enumerate, MatchesBruteForceScan) {
  for (int d = 1; d <= 4; ++d) {
    for (int r = 0; r <= 4; ++r) {
      for (int s = 0; s <= 4; ++s) {
        const auto sigs = enumerate_signatures(d, r, s);
        const std::set<Signature> got(sigs.begin(), sigs.end());
        EXPECT_EQ(got, brute_force(d, r, s)) << d << " " << r << " " << s;
      }
    }
  }
}

TEST(Enumerate, DescendingAndDuplicateFree) {
  for (int d = 1; d <= 5; ++d) {
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; s <= 3; ++s) {
        const auto sigs = enumerate_signatures(d, r, s);
        for (std::size_t i = 1; i < sigs.size(); ++i) EXPECT_GT(sigs[i - 1], sigs[i]);
        EXPECT_EQ(sigs, enumerate_signatures(d, r, s));
      }
    }
  }
}

TEST(Enumerate, DualityExchangesDegrees) {
  for (int d = 1; d <= 6; ++d) {
    for (int r = 0; r <= 6; ++r) {
      for (int s = 0; s <= 6; ++s) {
        const auto a = enumerate_signatures(d, r, s);
        const auto b = enumerate_signatures(d, s, r);
        const std::set<Signature> bs(b.begin(), b.end());
        ASSERT_EQ(a.size(), b.size());
        for (const auto& mu : a) EXPECT_TRUE(bs.count(mu.dual())) << mu.to_string();
      }
    }
  }
}

TEST(Partitions, Examples) {
  const auto p = partitions_max_parts(4, 2);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].parts(), (std::vector<int>{4}));
  EXPECT_EQ(p[1].parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(p[2].parts(), (std::vector<int>{2, 2}));
  for (int t = 1; t <= 7; ++t) {
    const auto one = partitions_max_parts(t, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].parts(), std::vector<int>{t});
  }
  const auto empty = partitions_max_parts(0, 3);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].length(), 0);
}

TEST(Partitions, MatchesBruteForce) {
  for (int t = 0; t <= 9; ++t) {
    for (int d = 1; d <= 6; ++d) {
      // nonincreasing vectors over [0, t] of length d with sum t
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      scan(d, 0, t, cur, all);
      std::set<std::vector<int>> expected;
      for (auto v : all) {
        int sum = 0;
        for (int x : v) sum += x;
        if (sum != t) continue;
        v.erase(std::remove(v.begin(), v.end(), 0), v.end());
        expected.insert(v);
      }
      std::set<std::vector<int>> got;
      for (const auto& p : partitions_max_parts(t, d)) {
        EXPECT_EQ(p.weight(), t);
        got.insert(p.parts());
      }
      EXPECT_EQ(got, expected) << t << " " << d;
    }
  }
}

}  // namespace
}  // namespace udesign
