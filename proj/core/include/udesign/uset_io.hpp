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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "udesign/unitary_set.hpp"

namespace udesign {

// uset-v1: a JSON object
//   {"format": "uset-v1", "d": <int>, "weights": [...]?, "labels": [...]?,
//    "matrices": [ [[ [re, im], ... ], ...], ... ]}
// Numbers are written in shortest round-trip form (at most 17 significant
// digits), one matrix per line, so save -> load -> save is byte-identical.
//
// A file without "weights" loads as a uniform WeightedUnitarySet
// (uniform() == true) and is saved back without weights.

WeightedUnitarySet parse_set(const std::string& text,
                             double unitarity_tol = kDefaultUnitarityTol);
WeightedUnitarySet load_set(const std::filesystem::path& path,
                            double unitarity_tol = kDefaultUnitarityTol);

std::string format_set(const WeightedUnitarySet& set);
void save_set(const WeightedUnitarySet& set, const std::filesystem::path& path);
void save_set(const UnitarySet& set, const std::filesystem::path& path);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace udesign
