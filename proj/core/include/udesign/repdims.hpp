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

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "udesign/signature.hpp"

namespace udesign {

// Exact nonnegative integer. All dimension and moment counts use it.
using BigCount = boost::multiprecision::cpp_int;

// Weyl dimension formula: d_mu = prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
// Numerator and denominator are accumulated separately and divided once;
// a nonzero remainder throws InvariantViolation.
BigCount weyl_dimension(const Signature& mu);

// dim Hom(d, r, s) = sum of d_mu^2 over enumerate_signatures(d, r, s).
BigCount dim_hom(int d, int r, int s);

// Closed forms for dim Hom(d, r, s) where one is known (the r, s <= 3 list,
// d = 2 and s = 0 binomials). Arguments are symmetrised so that r >= s.
// Returns nullopt outside every formula's validity range.
std::optional<BigCount> dim_hom_closed(int d, int r, int s);

// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigCount binomial(long n, long k);

}  // namespace udesign
