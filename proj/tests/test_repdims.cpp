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

#include "udesign/repdims.hpp"
#include "udesign/signature.hpp"

namespace udesign {
namespace {

// Semistandard tableaux of shape lambda with entries in 1..d, filled cell by
// cell in row-major order.
long count_ssyt(const std::vector<int>& lambda, int d) {
  std::vector<std::vector<int>> grid;
  for (int len : lambda) grid.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  long count = 0;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= d; ++v) {
      grid[r][c] = v;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  return count;
}

TEST(WeylDimension, Examples) {
  EXPECT_EQ(weyl_dimension(Signature({1, 0, 0})), 3);
  for (int d = 1; d <= 9; ++d) {
    EXPECT_EQ(weyl_dimension(Signature::padded(d, {1}, {})), d);
    EXPECT_EQ(weyl_dimension(Signature::zero(d)), 1);
  }
  EXPECT_EQ(weyl_dimension(Signature({2, 0, -2})), 27);
  EXPECT_EQ(weyl_dimension(Signature({1, 0, -1})), 8);
  EXPECT_EQ(weyl_dimension(Signature({2, -1, -1})), 10);
}

TEST(WeylDimension, CountsSemistandardTableaux) {
  for (int d = 1; d <= 4; ++d) {
    for (int t = 0; t <= 6; ++t) {
      for (const auto& p : partitions_max_parts(t, d)) {
        std::vector<int> entries = p.parts();
        entries.resize(static_cast<std::size_t>(d), 0);
        // shifting every entry by a constant tensors with a power of det
        for (int shift : {0, -2, 3}) {
          std::vector<int> shifted = entries;
          for (int& x : shifted) x += shift;
          EXPECT_EQ(weyl_dimension(Signature(shifted)), count_ssyt(p.parts(), d));
        }
      }
    }
  }
}

TEST(WeylDimension, DualHasSameDimension) {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& mu : enumerate_signatures(d, 3, 2)) {
      EXPECT_EQ(weyl_dimension(mu), weyl_dimension(mu.dual()));
    }
  }
}

TEST(DimHom, Examples) {
  EXPECT_EQ(dim_hom(3, 2, 2), 994);
  EXPECT_EQ(dim_hom(3, 1, 1), 65);
  EXPECT_EQ(dim_hom(2, 2, 2), 35);
}

TEST(DimHom, Symmetric) {
  for (int d = 1; d <= 6; ++d) {
    for (int r = 0; r <= 4; ++r) {
      for (int s = 0; s <= 4; ++s) EXPECT_EQ(dim_hom(d, r, s), dim_hom(d, s, r));
    }
  }
}

TEST(DimHom, ClosedFormsAgree) {
  int checked = 0;
  for (int d = 1; d <= 8; ++d) {
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; s <= 3; ++s) {
        if (auto c = dim_hom_closed(d, r, s)) {
          EXPECT_EQ(*c, dim_hom(d, r, s)) << d << " " << r << " " << s;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(DimHom, ClosedFormExamples) {
  EXPECT_EQ(dim_hom_closed(4, 3, 3).value(), 265879);
  EXPECT_EQ(dim_hom_closed(3, 3, 2).value(), 2835);
  EXPECT_EQ(dim_hom_closed(5, 2, 1).value(), 6950);
  EXPECT_EQ(dim_hom_closed(3, 3, 3).value(), 7540);
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(dim_hom_closed(d, 1, 0).value(), d * d);
    EXPECT_EQ(dim_hom(d, 1, 1), BigCount(d * d * d * d - 2 * d * d + 2));
  }
}

TEST(DimHom, OneSidedIsBinomial) {
  for (int d = 1; d <= 6; ++d) {
    for (int r = 0; r <= 5; ++r) EXPECT_EQ(dim_hom(d, r, 0), binomial(d * d + r - 1, r));
  }
}

TEST(DimHom, QubitIsTetrahedral) {
  for (int r = 0; r <= 5; ++r) {
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(dim_hom(2, r, s), binomial(r + s + 3, 3));
  }
}

TEST(DimHom, BelowMonomialCount) {
  for (int d = 1; d <= 5; ++d) {
    for (int r = 0; r <= 3; ++r) {
      for (int s = 0; s <= 3; ++s) {
        EXPECT_LE(dim_hom(d, r, s), binomial(d * d + r - 1, r) * binomial(d * d + s - 1, s));
      }
    }
  }
}

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), BigCount("118264581564861424"));
}

}  // namespace
}  // namespace udesign
