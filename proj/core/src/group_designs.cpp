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
#include "udesign/group_designs.hpp"

#include <cmath>
#include <deque>
#include <random>

#include "udesign/error.hpp"
#include "udesign/moments.hpp"

namespace udesign {

namespace {

constexpr double kTieTol = 1e-9;
constexpr double kGrid = 1e-6;

long long mod(long long x, long long p) { return ((x % p) + p) % p; }

long long inverse_mod(long long a, long long p) {
  long long result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool proportional(const Matrix& a, const Matrix& b) {
  return std::abs(std::abs(trace_adjoint_product(b, a)) - a.rows()) < 1e-9;
}

Matrix hadamard() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Matrix phase_gate() {
  Matrix s = Matrix::Identity(2, 2);
  s(1, 1) = Complex(0.0, 1.0);
  return s;
}

const UnitarySet& qubit_clifford() {
  static const UnitarySet group = close_group(UnitarySet(2, {hadamard(), phase_gate()}));
  return group;
}

}  // namespace

Matrix phase_canonical(const Matrix& a) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) best = std::max(best, std::abs(a(r, c)));
  }
  if (best == 0.0) return a;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const double m = std::abs(a(r, c));
      if (m >= best - kTieTol) return a * (m / a(r, c));
    }
  }
  return a;
}

double projective_distance(const Matrix& a, const Matrix& b) {
  const Complex overlap = trace_adjoint_product(b, a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
  return (a - phase * b).norm();
}

ProjectiveIndex::ProjectiveIndex(int d, double tol) : d_(d), tol_(tol) {
  std::mt19937_64 engine(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  coeff_re_ = RealMatrix::NullaryExpr(2, d, [&] { return coeff(engine); });
  coeff_im_ = RealMatrix::NullaryExpr(2, d, [&] { return coeff(engine); });
}

// |v^* A w|^2 for two fixed random vector pairs: invariant under global phase
// and independent of which representative was chosen.
double ProjectiveIndex::fingerprint(const Matrix& a) const {
  double f = 0.0;
  for (Eigen::Index k = 0; k < 2; ++k) {
    const Eigen::VectorXcd v =
        coeff_re_.row(k).transpose().cast<Complex>() +
        Complex(0.0, 1.0) * coeff_im_.row(k).transpose().cast<Complex>();
    const Eigen::VectorXcd w = coeff_im_.row(k).transpose().cast<Complex>() -
                               Complex(0.0, 0.5) * coeff_re_.row(k).transpose().cast<Complex>();
    f += std::norm(v.dot(a * w)) * (k + 1);
  }
  return f;
}

std::optional<std::size_t> ProjectiveIndex::find(const Matrix& canonical) const {
  const auto key = static_cast<std::int64_t>(std::llround(fingerprint(canonical) / kGrid));
  for (std::int64_t k = key - 1; k <= key + 1; ++k) {
    auto it = buckets_.find(k);
    if (it == buckets_.end()) continue;
    for (std::size_t idx : it->second) {
      if (projective_distance(canonical, elements_[idx]) <= tol_) return idx;
    }
  }
  return std::nullopt;
}

std::pair<std::size_t, bool> ProjectiveIndex::insert(const Matrix& canonical) {
  if (auto found = find(canonical)) return {*found, false};
  const auto key = static_cast<std::int64_t>(std::llround(fingerprint(canonical) / kGrid));
  elements_.push_back(canonical);
  buckets_[key].push_back(elements_.size() - 1);
  return {elements_.size() - 1, true};
}

UnitarySet close_group(const UnitarySet& generators, std::size_t max_size, double tol) {
  if (max_size < 1) throw InputError("close_group: max_size must be >= 1");
  const int d = generators.dim();
  if (d < 1) throw InputError("close_group: no generators");
  ProjectiveIndex index(d, tol);
  index.insert(Matrix::Identity(d, d));
  for (std::size_t i = 0; i < index.size(); ++i) {
    const Matrix current = index.elements()[i];
    for (const Matrix& g : generators.matrices()) {
      if (index.insert(phase_canonical(current * g)).second && index.size() > max_size) {
        throw InputError("group closure exceeded max_size = " + std::to_string(max_size));
      }
    }
  }
  return UnitarySet(d, index.elements());
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Matrix symplectic_unitary(int p, const SymplecticMatrix& f) {
  if (!is_prime(p)) throw InputError("symplectic_unitary: " + std::to_string(p) + " is not prime");
  const long long alpha = mod(f[0], p), beta = mod(f[1], p);
  const long long gamma = mod(f[2], p), delta = mod(f[3], p);
  if (mod(alpha * delta - beta * gamma, p) != 1) {
    throw InputError("symplectic_unitary: determinant is not 1 mod " + std::to_string(p));
  }
  if (p == 2) {
    const Matrix x = displacement(2, 1, 0);
    const Matrix z = displacement(2, 0, 1);
    const Matrix fx = displacement(2, static_cast<int>(alpha), static_cast<int>(gamma));
    const Matrix fz = displacement(2, static_cast<int>(beta), static_cast<int>(delta));
    for (const Matrix& u : qubit_clifford().matrices()) {
      if (proportional(u * x * u.adjoint(), fx) && proportional(u * z * u.adjoint(), fz)) {
        return u;
      }
    }
    throw InvariantViolation("no qubit Clifford element realizes the symplectic matrix");
  }
  // tau = -e^{i pi / p} is a p-th root of unity: tau^x = omega^{x (p + 1) / 2}.
  const long long half = (p + 1) / 2;
  auto tau_pow = [&](long long x) {
    const double angle = 2.0 * M_PI * static_cast<double>(mod(x * half, p)) / p;
    return Complex(std::cos(angle), std::sin(angle));
  };
  Matrix u = Matrix::Zero(p, p);
  if (beta != 0) {
    const long long binv = inverse_mod(beta, p);
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    for (long long j = 0; j < p; ++j) {
      for (long long k = 0; k < p; ++k) {
        const long long e = binv * mod(alpha * k * k - 2 * j * k + delta * j * j, p);
        u(j, k) = norm * tau_pow(e);
      }
    }
  } else {
    for (long long k = 0; k < p; ++k) u(mod(alpha * k, p), k) = tau_pow(alpha * gamma % p * k * k);
  }
  return u;
}

UnitarySet affine_symplectic_closure(int p, const std::vector<SymplecticMatrix>& gens) {
  std::vector<Matrix> matrices = {shift_matrix(p), clock_matrix(p)};
  for (const auto& f : gens) matrices.push_back(symplectic_unitary(p, f));
  const auto q = static_cast<std::size_t>(p);
  return close_group(UnitarySet(p, std::move(matrices)), 2 * q * q * q * (q * q - 1) + 16);
}

const std::vector<int>& chau_dimensions() {
  static const std::vector<int> dims = {2, 3, 5, 7, 11};
  return dims;
}

const std::vector<SymplecticMatrix>& chau_generators(int d) {
  static const std::unordered_map<int, std::vector<SymplecticMatrix>> table = {
      {2, {{0, 1, 1, 1}}},
      {3, {{1, 1, 1, 2}, {1, 2, 2, 2}}},
      {5, {{2, 0, 0, 3}, {1, 2, 1, 3}}},
      {7, {{2, 0, 0, 4}, {1, 2, 1, 3}}},
      {11, {{2, 0, 0, 6}, {1, 1, 1, 2}}},
  };
  auto it = table.find(d);
  if (it == table.end()) {
    throw InputError("chau_design: unsupported dimension " + std::to_string(d) +
                     " (supported: 2, 3, 5, 7, 11)");
  }
  return it->second;
}

UnitarySet chau_design(int d) {
  const auto& gens = chau_generators(d);
  UnitarySet x = affine_symplectic_closure(d, gens);
  const auto expected = static_cast<std::size_t>(d) * d * (d * d - 1);
  if (x.size() != expected) {
    throw InvariantViolation("chau_design(" + std::to_string(d) + ") produced " +
                             std::to_string(x.size()) + " elements, expected " +
                             std::to_string(expected));
  }
  return x;
}

UnitarySet clifford_design(int q) {
  if (!is_prime(q)) throw InputError("clifford_design: " + std::to_string(q) + " is not prime");
  UnitarySet x = affine_symplectic_closure(q, {{1, 1, 0, 1}, {0, q - 1, 1, 0}});
  const auto qq = static_cast<std::size_t>(q);
  const std::size_t expected = qq * qq * qq * (qq * qq - 1);
  if (x.size() != expected) {
    throw InvariantViolation("clifford_design(" + std::to_string(q) + ") produced " +
                             std::to_string(x.size()) + " elements, expected " +
                             std::to_string(expected));
  }
  return x;
}

void CharacterData::validate() const {
  if (group_order < 1) throw InputError("character table: group_order must be positive");
  if (degree < 1) throw InputError("character table: degree must be positive");
  if (classes.empty()) throw InputError("character table: no classes");
  std::int64_t total = 0;
  bool identity = false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (c.size < 1) {
      throw InputError("character table: class " + std::to_string(i) + " has nonpositive size");
    }
    if (!std::isfinite(c.value.real()) || !std::isfinite(c.value.imag())) {
      throw InputError("character table: class " + std::to_string(i) + " has a non-finite value");
    }
    total += c.size;
    if (c.size == 1 && std::abs(c.value - static_cast<double>(degree)) < 1e-9) identity = true;
  }
  if (total != group_order) {
    throw InputError("character table: class sizes sum to " + std::to_string(total) +
                     ", not group_order = " + std::to_string(group_order));
  }
  if (!identity) {
    throw InputError("character table: no identity class (size 1, value = degree)");
  }
}

VerificationReport character_design_check(const CharacterData& table, int t, double tol) {
  table.validate();
  if (t < 0) throw InputError("design strength t must be >= 0");
  VerificationReport rep;
  rep.criterion = Criterion::kCharacter;
  rep.t = t;
  rep.tolerance = tol;
  rep.moment = haar_moment(table.degree, t);
  const double moment = rep.moment.convert_to<double>();
  long double sum = 0.0L;
  for (const auto& c : table.classes) {
    sum += static_cast<long double>(c.size) * std::pow(static_cast<long double>(std::norm(c.value)), t);
  }
  rep.potential = static_cast<double>(sum / table.group_order);
  rep.gap = rep.potential - moment;
  rep.statistic = std::abs(rep.gap) / moment;
  rep.verdict = rep.statistic <= tol;
  return rep;
}

CharacterData abs_character_data(const UnitarySet& x, double tol) {
  if (x.empty()) throw InputError("abs_character_data: empty set");
  const int d = x.dim();
  ProjectiveIndex index(d, tol);
  for (const Matrix& m : x.matrices()) index.insert(phase_canonical(m));
  if (index.size() != x.size()) throw InputError("abs_character_data: set has phase duplicates");
  if (!index.find(Matrix::Identity(d, d))) {
    throw InputError("abs_character_data: set does not contain the identity");
  }
  auto check = [&](std::size_t i, std::size_t j) {
    if (!index.find(phase_canonical(x[i] * x[j]))) {
      throw InputError("abs_character_data: set is not closed under multiplication (product of " +
                       std::to_string(i) + " and " + std::to_string(j) + " is missing)");
    }
  };
  const std::size_t n = x.size();
  if (n <= 400) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) check(i, j);
    }
  } else {
    std::mt19937_64 engine(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 20000; ++k) check(pick(engine), pick(engine));
  }
  CharacterData table;
  table.group_order = static_cast<std::int64_t>(n);
  table.degree = d;
  table.classes.reserve(n);
  for (const Matrix& m : x.matrices()) table.classes.push_back({1, std::abs(m.trace())});
  // Pin the identity record exactly.
  for (auto& c : table.classes) {
    if (std::abs(c.value.real() - d) < 1e-9) c.value = static_cast<double>(d);
  }
  return table;
}

}  // namespace udesign
