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

#ifndef MVFEP_COMMANDS_HPP
#define MVFEP_COMMANDS_HPP

#include <string>

#include "mvfep/json_io.hpp"

namespace mvfep {

// Every command emits a self-contained witness bundle: enough data for
// run_verify to re-check the claim without re-running the solver. Outputs
// are deterministic, byte for byte, for identical inputs.

Json run_axioms(const Json& algebra);
Json run_filters(const Json& algebra, const std::string& mode);  // all|prime|ultra
Json run_quotient(const Json& algebra, int filter_id);
Json run_embed_chain(const std::string& oracle_selector, const std::string& elements,
                     std::size_t row_cap);
Json run_embed(const Json& algebra, std::size_t row_cap);
Json run_farkas(const Json& system, std::size_t row_cap);

/// Re-verifies any bundle emitted by the commands above. The returned
/// bundle's "verified" field is the verdict; failures carry witnesses.
Json run_verify(const Json& bundle);

/// One-line human description of a bundle, for log output.
std::string summarize(const Json& bundle);

}  // namespace mvfep

#endif  // MVFEP_COMMANDS_HPP
