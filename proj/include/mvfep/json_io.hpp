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

#ifndef MVFEP_JSON_IO_HPP
#define MVFEP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "mvfep/farkas.hpp"
#include "mvfep/mv_algebra.hpp"

namespace mvfep {

using Json = nlohmann::json;

/// {"size": n, "zero": i, "neg": [...], "oplus": [[...]], "names": [...]?}
Json algebra_to_json(const FiniteMvAlgebra& alg);
FiniteMvAlgebra algebra_from_json(const Json& j);

/// {"A": [["p/q", ...], ...], "b": ["p/q", ...]} with rational strings.
Json system_to_json(const LinearSystem& sys);
LinearSystem system_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

/// Parses a whole JSON document; malformed input raises ParseError.
Json parse_json(const std::string& text);

/// 64-bit FNV-1a digest of the canonical dump, as "fnv1a64:<hex>".
std::string digest(const Json& j);

}  // namespace mvfep

#endif  // MVFEP_JSON_IO_HPP
