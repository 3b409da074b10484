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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "udesign/design_verify.hpp"
#include "udesign/unitary_set.hpp"

namespace udesign {

inline constexpr double kClosureTol = 1e-8;
inline constexpr std::size_t kDefaultMaxGroupSize = 100000;

// Divides a by the phase of its largest-modulus entry (first in row-major
// order among entries within 1e-9 of the maximum).
Matrix phase_canonical(const Matrix& a);

// Frobenius distance between a and e^{i phi} b for the best phase phi.
double projective_distance(const Matrix& a, const Matrix& b);

// Set of matrices up to global phase. Lookups hash a linear functional of the
// canonical entries on a 1e-6 grid, probe neighbouring cells, and confirm
// with projective_distance <= tol.
class ProjectiveIndex {
 public:
  explicit ProjectiveIndex(int d, double tol = kClosureTol);

  std::optional<std::size_t> find(const Matrix& canonical) const;
  // Returns the index of the new or existing element and whether it was new.
  std::pair<std::size_t, bool> insert(const Matrix& canonical);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  double fingerprint(const Matrix& a) const;

  int d_;
  double tol_;
  RealMatrix coeff_re_;
  RealMatrix coeff_im_;
  std::vector<Matrix> elements_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
};

// Breadth-first closure of the generators under multiplication, modulo
// global phase. Element order is discovery order, starting from the
// identity. Throws InputError once more than max_size elements appear.
UnitarySet close_group(const UnitarySet& generators,
                       std::size_t max_size = kDefaultMaxGroupSize,
                       double tol = kClosureTol);

// 2x2 matrix over Z_p given row-major as {alpha, beta, gamma, delta}.
using SymplecticMatrix = std::array<int, 4>;

// Unitary U with U D(a, b) U^* proportional to D(F (a, b)) where
// D(a, b) = X^a Z^b. p must be prime and det F = 1 mod p.
Matrix symplectic_unitary(int p, const SymplecticMatrix& f);

// Weyl-Heisenberg group extended by the images of the listed symplectic
// generators, closed modulo phase.
UnitarySet affine_symplectic_closure(int p, const std::vector<SymplecticMatrix>& gens);

const std::vector<int>& chau_dimensions();
const std::vector<SymplecticMatrix>& chau_generators(int d);

// Group 2-designs of size d^2 (d^2 - 1).
UnitarySet chau_design(int d);
// Group 2-design of size q^3 (q^2 - 1), q prime.
UnitarySet clifford_design(int q);

bool is_prime(int n);

struct CharacterClass {
  std::int64_t size = 0;
  Complex value;
};

struct CharacterData {
  std::int64_t group_order = 0;
  int degree = 0;
  std::vector<CharacterClass> classes;

  // Throws InputError unless the sizes sum to the group order and some class
  // of size 1 has value equal to the degree.
  void validate() const;
};

// Compares (1/|G|) sum size |value|^{2t} against the Haar moment.
VerificationReport character_design_check(const CharacterData& table, int t,
                                          double tol = kDefaultDesignTol);

// One class of size 1 per element carrying |tr U|. Throws InputError if the
// set is not closed under products (all pairs up to 400 elements, a fixed
// random sample of pairs beyond that).
CharacterData abs_character_data(const UnitarySet& x, double tol = kClosureTol);

// chartab-v1 files.
CharacterData parse_chartab(const std::string& text);
CharacterData load_chartab(const std::filesystem::path& path);
std::string format_chartab(const CharacterData& table);

}  // namespace udesign
