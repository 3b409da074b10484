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

#include "udesign/repdims.hpp"

namespace udesign {

// Number of standard Young tableaux of shape lambda (hook-length formula,
// exact division checked).
BigCount standard_tableaux_count(const Partition& lambda);

// Haar moment M_t(d) = integral of |tr U|^{2t} over U(d), which counts
// permutations of t letters whose longest increasing subsequence is <= d.
// Evaluated as sum of f_lambda^2 over partitions of t with at most d parts.
BigCount haar_moment(int d, int t);

// Brute-force count over all t! permutations. Throws InputError for t > 8.
BigCount haar_moment_bruteforce(int d, int t);

inline constexpr int kBruteForceMaxT = 8;

}  // namespace udesign
