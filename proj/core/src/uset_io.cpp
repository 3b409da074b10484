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
#include "udesign/uset_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "udesign/error.hpp"

namespace udesign {

namespace {

using nlohmann::json;

double read_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  return v.get<double>();
}

Matrix read_matrix(const json& jm, int d, std::size_t index) {
  const std::string where = "malformed uset-v1 file: matrix " + std::to_string(index);
  if (!jm.is_array() || jm.size() != static_cast<std::size_t>(d)) {
    throw InputError(where + ": expected " + std::to_string(d) + " rows");
  }
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    const json& row = jm[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
      throw InputError(where + ", row " + std::to_string(r) + ": expected " +
                       std::to_string(d) + " entries");
    }
    for (int c = 0; c < d; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2) {
        throw InputError(where + ": entry (" + std::to_string(r) + "," +
                         std::to_string(c) + ") must be [re, im]");
      }
      m(r, c) = Complex(read_number(e[0], where), read_number(e[1], where));
    }
  }
  return m;
}

std::string number(double x) { return json(x).dump(); }

}  // namespace

WeightedUnitarySet parse_set(const std::string& text, double unitarity_tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed uset-v1 file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("malformed uset-v1 file: not an object");
  if (!doc.contains("format") || doc["format"] != "uset-v1") {
    throw InputError("malformed uset-v1 file: missing or wrong \"format\"");
  }
  if (!doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<long>() < 1) {
    throw InputError("malformed uset-v1 file: \"d\" must be a positive integer");
  }
  const int d = doc["d"].get<int>();
  if (!doc.contains("matrices") || !doc["matrices"].is_array()) {
    throw InputError("malformed uset-v1 file: \"matrices\" must be an array");
  }
  const json& jms = doc["matrices"];
  std::vector<Matrix> matrices;
  matrices.reserve(jms.size());
  for (std::size_t i = 0; i < jms.size(); ++i) {
    matrices.push_back(read_matrix(jms[i], d, i));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_array() || jl.size() != jms.size()) {
      throw InputError("malformed uset-v1 file: \"labels\" length mismatch");
    }
    for (const json& l : jl) {
      if (!l.is_string()) throw InputError("malformed uset-v1 file: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  UnitarySet base(d, std::move(matrices), std::move(labels), unitarity_tol);
  if (!doc.contains("weights")) return WeightedUnitarySet(std::move(base));
  const json& jw = doc["weights"];
  if (!jw.is_array()) throw InputError("malformed uset-v1 file: \"weights\" must be an array");
  if (jw.size() != base.size()) {
    throw InputError("malformed uset-v1 file: weights and matrices have different lengths");
  }
  std::vector<double> weights;
  for (const json& w : jw) weights.push_back(read_number(w, "malformed uset-v1 file: weights"));
  return WeightedUnitarySet(std::move(base), std::move(weights));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedUnitarySet load_set(const std::filesystem::path& path,
                            double unitarity_tol) {
  return parse_set(read_text_file(path), unitarity_tol);
}

std::string format_set(const WeightedUnitarySet& set) {
  const UnitarySet& base = set.base();
  const int d = base.dim();
  std::ostringstream os;
  os << "{\n  \"format\": \"uset-v1\",\n  \"d\": " << d << ",\n";
  if (!set.uniform()) {
    os << "  \"weights\": [";
    for (std::size_t i = 0; i < set.weights().size(); ++i) {
      if (i) os << ", ";
      os << number(set.weights()[i]);
    }
    os << "],\n";
  }
  if (!base.labels().empty()) {
    os << "  \"labels\": [";
    for (std::size_t i = 0; i < base.labels().size(); ++i) {
      if (i) os << ", ";
      os << json(base.labels()[i]).dump();
    }
    os << "],\n";
  }
  os << "  \"matrices\": [";
  for (std::size_t k = 0; k < base.size(); ++k) {
    os << (k ? ",\n    " : "\n    ") << '[';
    const Matrix& m = base[k];
    for (int r = 0; r < d; ++r) {
      if (r) os << ", ";
      os << '[';
      for (int c = 0; c < d; ++c) {
        if (c) os << ", ";
        os << '[' << number(m(r, c).real()) << ", " << number(m(r, c).imag()) << ']';
      }
      os << ']';
    }
    os << ']';
  }
  os << (base.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

void save_set(const WeightedUnitarySet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << format_set(set);
  if (!out) throw InputError("write failed: " + path.string());
}

void save_set(const UnitarySet& set, const std::filesystem::path& path) {
  save_set(WeightedUnitarySet(set), path);
}

}  // namespace udesign
