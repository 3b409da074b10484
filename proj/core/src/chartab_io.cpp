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
#include <sstream>

#include "json.hpp"
#include "udesign/error.hpp"
#include "udesign/group_designs.hpp"
#include "udesign/uset_io.hpp"

namespace udesign {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& why) {
  throw InputError("malformed chartab-v1 file: " + why);
}

std::int64_t positive_integer(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() < 1) {
    fail(std::string("\"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::int64_t>();
}

}  // namespace

CharacterData parse_chartab(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("not an object");
  if (!doc.contains("format") || doc["format"] != "chartab-v1") {
    fail("missing or wrong \"format\"");
  }
  CharacterData table;
  table.group_order = positive_integer(doc, "group_order");
  const std::int64_t degree = positive_integer(doc, "degree");
  if (degree > 1000000) fail("\"degree\" is too large");
  table.degree = static_cast<int>(degree);
  if (!doc.contains("classes") || !doc["classes"].is_array()) fail("\"classes\" must be an array");
  std::size_t i = 0;
  for (const json& jc : doc["classes"]) {
    const std::string where = "class " + std::to_string(i++);
    if (!jc.is_object()) fail(where + ": not an object");
    if (!jc.contains("size") || !jc["size"].is_number_integer() ||
        jc["size"].get<std::int64_t>() < 1) {
      fail(where + ": \"size\" must be a positive integer");
    }
    if (!jc.contains("value") || !jc["value"].is_array()) {
      fail(where + ": \"value\" must be [re, im] or [abs]");
    }
    const json& v = jc["value"];
    for (const json& e : v) {
      if (!e.is_number()) fail(where + ": value entries must be numbers");
    }
    Complex value;
    if (v.size() == 2) {
      value = Complex(v[0].get<double>(), v[1].get<double>());
    } else if (v.size() == 1) {
      if (v[0].get<double>() < 0.0) fail(where + ": [abs] value must be nonnegative");
      value = v[0].get<double>();
    } else {
      fail(where + ": \"value\" must be [re, im] or [abs]");
    }
    table.classes.push_back({jc["size"].get<std::int64_t>(), value});
  }
  try {
    table.validate();
  } catch (const InputError& e) {
    fail(e.what());
  }
  return table;
}

CharacterData load_chartab(const std::filesystem::path& path) {
  return parse_chartab(read_text_file(path));
}

std::string format_chartab(const CharacterData& table) {
  std::ostringstream out;
  out << "{\"format\": \"chartab-v1\", \"group_order\": " << table.group_order
      << ", \"degree\": " << table.degree << ", \"classes\": [\n";
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& c = table.classes[i];
    out << "  {\"size\": " << c.size << ", \"value\": [" << json(c.value.real()).dump() << ", "
        << json(c.value.imag()).dump() << "]}" << (i + 1 < table.classes.size() ? ",\n" : "\n");
  }
  out << "]}\n";
  return out.str();
}

}  // namespace udesign
