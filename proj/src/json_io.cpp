// Copyright 2026 The mvfep Authors
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

#include "mvfep/json_io.hpp"

#include <cstdint>

namespace mvfep {

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("expected integer field '") + key + "'");
  }
  return j[key].get<int>();
}

Rational rational_field(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json algebra_to_json(const FiniteMvAlgebra& alg) {
  Json j;
  j["size"] = alg.size();
  j["zero"] = alg.zero();
  Json neg = Json::array();
  for (int i = 0; i < alg.size(); ++i) neg.push_back(alg.neg(i));
  j["neg"] = std::move(neg);
  Json oplus = Json::array();
  for (int i = 0; i < alg.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < alg.size(); ++k) row.push_back(alg.oplus(i, k));
    oplus.push_back(std::move(row));
  }
  j["oplus"] = std::move(oplus);
  j["names"] = alg.names();
  return j;
}

FiniteMvAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected a JSON object");
  int n = int_field(j, "size");
  if (n < 1) throw ParseError("algebra: size must be >= 1");
  int zero = int_field(j, "zero");
  if (!j.contains("neg") || !j["neg"].is_array() ||
      static_cast<int>(j["neg"].size()) != n) {
    throw ParseError("algebra: neg must be an array of length size");
  }
  if (!j.contains("oplus") || !j["oplus"].is_array() ||
      static_cast<int>(j["oplus"].size()) != n) {
    throw ParseError("algebra: oplus must be a size x size array");
  }
  std::vector<int> neg;
  neg.reserve(static_cast<std::size_t>(n));
  for (const Json& v : j["neg"]) {
    if (!v.is_number_integer()) throw ParseError("algebra: neg entries must be integers");
    neg.push_back(v.get<int>());
  }
  std::vector<std::vector<int>> oplus;
  oplus.reserve(static_cast<std::size_t>(n));
  for (const Json& row : j["oplus"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("algebra: oplus must be a size x size array");
    }
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(n));
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw ParseError("algebra: oplus entries must be integers");
      r.push_back(v.get<int>());
    }
    oplus.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != n) {
      throw ParseError("algebra: names must be an array of length size");
    }
    for (const Json& v : j["names"]) {
      if (!v.is_string()) throw ParseError("algebra: names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  try {
    return FiniteMvAlgebra(std::move(oplus), std::move(neg), zero, std::move(names));
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
}

Json system_to_json(const LinearSystem& sys) {
  Json a = Json::array();
  for (const auto& row : sys.a) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(v.str());
    a.push_back(std::move(r));
  }
  Json b = Json::array();
  for (const Rational& v : sys.b) b.push_back(v.str());
  return Json{{"A", std::move(a)}, {"b", std::move(b)}};
}

LinearSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b") ||
      !j["A"].is_array() || !j["b"].is_array()) {
    throw ParseError("system: expected {\"A\": [[..]], \"b\": [..]}");
  }
  LinearSystem sys;
  for (const Json& row : j["A"]) {
    if (!row.is_array()) throw ParseError("system: A must be a matrix");
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const Json& v : row) r.push_back(rational_field(v));
    sys.a.push_back(std::move(r));
  }
  for (const Json& v : j["b"]) sys.b.push_back(rational_field(v));
  try {
    sys.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("system: ") + e.what());
  }
  return sys;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(r.str());
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(rational_field(v));
  return out;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

std::string digest(const Json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mvfep
