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
#include <map>

#include <gtest/gtest.h>

#include "support.hpp"
#include "udesign/error.hpp"
#include "udesign/group_designs.hpp"
#include "udesign/moments.hpp"

namespace udesign {
namespace {

UnitarySet qubit_clifford() {
  return close_group(UnitarySet(2, {testing::hadamard(), testing::phase_gate()}));
}

std::string data_file(const std::string& name) {
  return std::string(UDESIGN_TEST_DATA_DIR) + "/" + name;
}

void expect_closed(const UnitarySet& x, int pairs, std::uint64_t seed) {
  ProjectiveIndex index(x.dim());
  for (const Matrix& m : x.matrices()) index.insert(phase_canonical(m));
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  for (int k = 0; k < pairs; ++k) {
    const std::size_t i = pick(engine), j = pick(engine);
    EXPECT_TRUE(index.find(phase_canonical(x[i] * x[j])).has_value());
    EXPECT_TRUE(index.find(phase_canonical(x[i].adjoint())).has_value());
  }
}

TEST(PhaseCanonical, RemovesGlobalPhase) {
  std::mt19937_64 engine(1);
  const Matrix u = haar_unitary(3, engine);
  const Matrix a = phase_canonical(u);
  const Matrix b = phase_canonical(std::polar(1.0, 2.1) * u);
  EXPECT_LT((a - b).norm(), 1e-12);
  EXPECT_NEAR(projective_distance(u, std::polar(1.0, -0.4) * u), 0.0, 1e-12);
  // ties resolve to the first entry in row-major order
  const Matrix h = phase_canonical(Complex(0.0, 1.0) * testing::hadamard());
  EXPECT_NEAR(std::abs(h(0, 0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(CloseGroup, Examples) {
  EXPECT_EQ(qubit_clifford().size(), 24u);
  EXPECT_EQ(close_group(UnitarySet(2, {Matrix::Identity(2, 2)})).size(), 1u);
  Matrix rot = Matrix::Identity(2, 2);
  rot(1, 1) = std::polar(1.0, std::sqrt(2.0));
  try {
    close_group(UnitarySet(2, {rot}), 1000);
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("max_size"), std::string::npos);
  }
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  EXPECT_THROW(close_group(UnitarySet(2, {bad})), InputError);
}

TEST(CloseGroup, ResultIsClosedAndDuplicateFree) {
  for (const UnitarySet& x : {qubit_clifford(), chau_design(3), clifford_design(3)}) {
    expect_closed(x, 50, x.size());
    EXPECT_EQ(distance_profile(x).phase_duplicate_pairs, 0u);
    const double d = x.dim();
    const RealMatrix g = gram_abs2(x);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        if (i != j) EXPECT_LT(std::sqrt(g(i, j)), d - 1e-6);
      }
    }
  }
}

TEST(CloseGroup, DeterministicOrder) {
  const UnitarySet a = chau_design(3);
  const UnitarySet b = chau_design(3);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_LT((a[0] - Matrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(Symplectic, ConjugationActsLinearly) {
  const std::vector<SymplecticMatrix> mats = {
      {1, 1, 0, 1}, {0, -1, 1, 0}, {0, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 2, 2},
      {2, 0, 0, 3}, {1, 2, 1, 3}, {2, 0, 0, 4}, {2, 0, 0, 6}, {3, 0, 5, 5}};
  for (int p : {2, 3, 5, 7, 11}) {
    for (const auto& f : mats) {
      const long long det = (static_cast<long long>(f[0]) * f[3] - static_cast<long long>(f[1]) * f[2]) % p;
      if ((det + p) % p != 1) continue;
      const Matrix u = symplectic_unitary(p, f);
      EXPECT_LT((u.adjoint() * u - Matrix::Identity(p, p)).norm(), 1e-10);
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          const Matrix lhs = u * displacement(p, a, b) * u.adjoint();
          const int fa = (((f[0] * a + f[1] * b) % p) + p) % p;
          const int fb = (((f[2] * a + f[3] * b) % p) + p) % p;
          EXPECT_NEAR(std::abs(trace_adjoint_product(displacement(p, fa, fb), lhs)), p, 1e-9)
              << "p=" << p << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(Symplectic, RejectsBadInput) {
  EXPECT_THROW(symplectic_unitary(4, {1, 0, 0, 1}), InputError);
  EXPECT_THROW(symplectic_unitary(5, {1, 1, 1, 1}), InputError);
}

TEST(Catalog, ChauSizesAndStrength) {
  for (int d : {2, 3, 5}) {
    const UnitarySet x = chau_design(d);
    EXPECT_EQ(x.size(), static_cast<std::size_t>(d * d * (d * d - 1)));
    const WeightedUnitarySet w(x);
    EXPECT_LE(is_design(w, 2).statistic, 1e-8);
    EXPECT_GE(strength(w, 2), 2);
  }
  EXPECT_THROW(chau_design(4), InputError);
  EXPECT_THROW(chau_design(13), InputError);
}

TEST(Catalog, CliffordSizesAndStrength) {
  EXPECT_EQ(clifford_design(2).size(), 24u);
  const UnitarySet c3 = clifford_design(3);
  EXPECT_EQ(c3.size(), 216u);
  const VerificationReport r = is_design(WeightedUnitarySet(c3), 2);
  EXPECT_LE(std::abs(r.gap), 1e-8);
  EXPECT_EQ(strength(WeightedUnitarySet(c3), 3), 2);
  EXPECT_EQ(strength(WeightedUnitarySet(clifford_design(2)), 4), 3);
  EXPECT_THROW(clifford_design(9), InputError);
  EXPECT_THROW(clifford_design(1), InputError);
}

TEST(Characters, TrivialGroup) {
  CharacterData trivial{1, 1, {{1, 1.0}}};
  for (int t = 0; t <= 6; ++t) EXPECT_TRUE(character_design_check(trivial, t).verdict);
}

TEST(Characters, ValidationNamesTheProblem) {
  CharacterData bad{4, 2, {{1, 2.0}, {2, 0.0}}};
  EXPECT_THROW(bad.validate(), InputError);
  CharacterData no_identity{2, 2, {{1, 1.0}, {1, 0.0}}};
  EXPECT_THROW(character_design_check(no_identity, 1), InputError);
}

TEST(Characters, ChauAbsoluteTable) {
  const UnitarySet x = chau_design(3);
  const CharacterData table = abs_character_data(x);
  EXPECT_EQ(table.group_order, 72);
  std::int64_t total = 0;
  for (const auto& c : table.classes) total += c.size;
  EXPECT_EQ(total, 72);
  EXPECT_TRUE(character_design_check(table, 2).verdict);
  EXPECT_FALSE(character_design_check(table, 3).verdict);
}

TEST(Characters, AbsoluteTableExamples) {
  const CharacterData id = abs_character_data(UnitarySet(3, {Matrix::Identity(3, 3)}));
  EXPECT_EQ(id.group_order, 1);
  ASSERT_EQ(id.classes.size(), 1u);
  EXPECT_EQ(id.classes[0].value, Complex(3.0));

  const CharacterData c = abs_character_data(qubit_clifford());
  EXPECT_EQ(c.classes.size(), 24u);
  std::map<long, int> spectrum;
  for (const auto& cl : c.classes) spectrum[std::lround(std::norm(cl.value))]++;
  EXPECT_EQ(spectrum, (std::map<long, int>{{0, 9}, {1, 8}, {2, 6}, {4, 1}}));
}

TEST(Characters, RejectsOpenSets) {
  EXPECT_THROW(abs_character_data(sample_haar(3, 4, 1)), InputError);
  // the displacement operators form a group modulo phase
  EXPECT_TRUE(character_design_check(abs_character_data(weyl_heisenberg(3)), 1).verdict);
  std::vector<Matrix> partial = qubit_clifford().matrices();
  partial.pop_back();
  EXPECT_THROW(abs_character_data(UnitarySet(2, partial)), InputError);
}

TEST(Characters, AgreeWithFramePotential) {
  for (const UnitarySet& x : {qubit_clifford(), chau_design(2), chau_design(3), clifford_design(3)}) {
    const CharacterData table = abs_character_data(x);
    for (int t = 1; t <= 3; ++t) {
      const VerificationReport a = character_design_check(table, t);
      const VerificationReport b = is_design(WeightedUnitarySet(x), t);
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_NEAR(a.potential, b.potential, 1e-9 * b.potential);
    }
  }
}

TEST(Characters, BinaryIcosahedralFromFile) {
  const CharacterData table = load_chartab(data_file("binary_icosahedral.chartab.json"));
  EXPECT_EQ(table.group_order, 120);
  const VerificationReport r5 = character_design_check(table, 5);
  EXPECT_EQ(r5.moment, 42);
  EXPECT_TRUE(r5.verdict);
  EXPECT_NEAR(r5.potential, 42.0, 1e-9);
  EXPECT_FALSE(character_design_check(table, 6).verdict);
}

TEST(Characters, BinaryIcosahedralTableMatchesClosure) {
  const UnitarySet g = close_group(UnitarySet(2, testing::icosian_generators()));
  ASSERT_EQ(g.size(), 60u);
  // each projective element lifts to +-U; |tr| is the same on both lifts
  std::map<long, std::int64_t> from_closure, from_file;
  for (const Matrix& m : g.matrices()) from_closure[std::lround(1e6 * std::abs(m.trace()))] += 2;
  const CharacterData table = load_chartab(data_file("binary_icosahedral.chartab.json"));
  for (const auto& c : table.classes) from_file[std::lround(1e6 * std::abs(c.value))] += c.size;
  EXPECT_EQ(from_closure, from_file);
  EXPECT_TRUE(character_design_check(abs_character_data(g), 5).verdict);
  EXPECT_EQ(strength(WeightedUnitarySet(g), 6), 5);
}

TEST(Chartab, ParseAndFormat) {
  const std::string text = R"({"format":"chartab-v1","group_order":3,"degree":1,
    "classes":[{"size":1,"value":[1]},{"size":1,"value":[-0.5,0.8660254037844386]},
               {"size":1,"value":[-0.5,-0.8660254037844386]}]})";
  const CharacterData t = parse_chartab(text);
  EXPECT_EQ(t.classes.size(), 3u);
  const CharacterData back = parse_chartab(format_chartab(t));
  EXPECT_EQ(format_chartab(back), format_chartab(t));
  EXPECT_TRUE(character_design_check(t, 1).verdict);
}

TEST(Chartab, MalformedInput) {
  auto why = [](const std::string& text) {
    try {
      parse_chartab(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(why("[").find("malformed chartab-v1"), std::string::npos);
  EXPECT_NE(why(R"({"format":"chartab-v1","group_order":2,"degree":1,"classes":[{"size":1,"value":[1]}]})")
                .find("sum to 1"),
            std::string::npos);
  EXPECT_NE(why(R"({"format":"chartab-v1","group_order":1,"degree":1,"classes":[{"size":1,"value":[1,2,3]}]})")
                .find("[re, im]"),
            std::string::npos);
  EXPECT_NE(why(R"({"format":"chartab-v1","group_order":1,"degree":1,"classes":[{"size":1,"value":[-1]}]})")
                .find("nonnegative"),
            std::string::npos);
  EXPECT_NE(why(R"({"format":"chartab-v1","group_order":1,"degree":2,"classes":[{"size":1,"value":[1]}]})")
                .find("identity"),
            std::string::npos);
  EXPECT_NE(why(R"({"format":"x","group_order":1,"degree":1,"classes":[]})").find("format"),
            std::string::npos);
}

}  // namespace
}  // namespace udesign
