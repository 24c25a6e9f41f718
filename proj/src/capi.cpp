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

#include "mvfep.h"

#include <new>
#include <string>

#include "mvfep/commands.hpp"
#include "mvfep/embedding.hpp"

struct mvfep_algebra {
  mvfep::FiniteMvAlgebra value;
  mvfep::Json json;  // canonical echo, reused by the commands
};

struct mvfep_result {
  mvfep_status status = MVFEP_OK;
  std::string json;     // empty when the command failed
  std::string summary;  // human one-liner, or the error message
};

namespace {

thread_local std::string t_last_error;

std::size_t effective_cap(long row_cap) {
  return row_cap > 0 ? static_cast<std::size_t>(row_cap)
                     : static_cast<std::size_t>(MVFEP_DEFAULT_ROW_CAP);
}

// Runs a command body, translating exceptions into status codes.
template <typename Fn>
mvfep_result* run_command(Fn&& body) {
  auto* result = new (std::nothrow) mvfep_result;
  if (result == nullptr) return nullptr;
  try {
    mvfep::Json bundle = body();
    result->json = bundle.dump(2);
    result->json.push_back('\n');
    result->summary = mvfep::summarize(bundle);
    bool verified = bundle.value("verified", false);
    result->status = verified ? MVFEP_OK : MVFEP_VERIFY_ERROR;
  } catch (const mvfep::OracleContradiction& e) {
    result->status = MVFEP_CERTIFICATE_ERROR;
    std::string lam = "[";
    for (std::size_t i = 0; i < e.lambda.size(); ++i) {
      if (i > 0) lam += ", ";
      lam += e.lambda[i].str();
    }
    lam += "]";
    result->summary = std::string(e.what()) + "; lambda = " + lam;
  } catch (const mvfep::ResourceLimit& e) {
    result->status = MVFEP_RESOURCE_ERROR;
    result->summary = e.what();
  } catch (const mvfep::VerificationFailure& e) {
    result->status = MVFEP_VERIFY_ERROR;
    result->summary = e.what();
  } catch (const mvfep::ParseError& e) {
    result->status = MVFEP_PARSE_ERROR;
    result->summary = e.what();
  } catch (const mvfep::InvalidInput& e) {
    result->status = MVFEP_PARSE_ERROR;
    result->summary = e.what();
  } catch (const std::exception& e) {
    result->status = MVFEP_ERROR;
    result->summary = e.what();
  }
  return result;
}

}  // namespace

extern "C" {

const char* mvfep_version(void) { return "1.0.0"; }

const char* mvfep_last_error(void) { return t_last_error.c_str(); }

mvfep_algebra* mvfep_algebra_parse(const char* json) {
  if (json == nullptr) {
    t_last_error = "null input";
    return nullptr;
  }
  try {
    mvfep::Json j = mvfep::parse_json(json);
    mvfep::FiniteMvAlgebra alg = mvfep::algebra_from_json(j);
    mvfep::Json echo = mvfep::algebra_to_json(alg);
    return new mvfep_algebra{std::move(alg), std::move(echo)};
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return nullptr;
  }
}

void mvfep_algebra_free(mvfep_algebra* alg) { delete alg; }

int mvfep_algebra_size(const mvfep_algebra* alg) {
  return alg == nullptr ? 0 : alg->value.size();
}

mvfep_result* mvfep_run_axioms(const mvfep_algebra* alg) {
  return run_command([&] {
    if (alg == nullptr) throw mvfep::InvalidInput("null algebra");
    return mvfep::run_axioms(alg->json);
  });
}

mvfep_result* mvfep_run_filters(const mvfep_algebra* alg, const char* mode) {
  return run_command([&] {
    if (alg == nullptr) throw mvfep::InvalidInput("null algebra");
    return mvfep::run_filters(alg->json, mode == nullptr ? "all" : mode);
  });
}

mvfep_result* mvfep_run_quotient(const mvfep_algebra* alg, int filter_id) {
  return run_command([&] {
    if (alg == nullptr) throw mvfep::InvalidInput("null algebra");
    return mvfep::run_quotient(alg->json, filter_id);
  });
}

mvfep_result* mvfep_run_embed(const mvfep_algebra* alg, long row_cap) {
  return run_command([&] {
    if (alg == nullptr) throw mvfep::InvalidInput("null algebra");
    return mvfep::run_embed(alg->json, effective_cap(row_cap));
  });
}

mvfep_result* mvfep_run_embed_chain(const char* oracle, const char* elements,
                                    long row_cap) {
  return run_command([&] {
    if (oracle == nullptr || elements == nullptr) {
      throw mvfep::InvalidInput("null argument");
    }
    return mvfep::run_embed_chain(oracle, elements, effective_cap(row_cap));
  });
}

mvfep_result* mvfep_run_farkas(const char* system_json, long row_cap) {
  return run_command([&] {
    if (system_json == nullptr) throw mvfep::InvalidInput("null system");
    return mvfep::run_farkas(mvfep::parse_json(system_json),
                             effective_cap(row_cap));
  });
}

mvfep_result* mvfep_run_verify(const char* bundle_json) {
  return run_command([&] {
    if (bundle_json == nullptr) throw mvfep::InvalidInput("null bundle");
    return mvfep::run_verify(mvfep::parse_json(bundle_json));
  });
}

mvfep_status mvfep_result_status(const mvfep_result* result) {
  return result == nullptr ? MVFEP_ERROR : result->status;
}

const char* mvfep_result_json(const mvfep_result* result) {
  if (result == nullptr || result->json.empty()) return nullptr;
  return result->json.c_str();
}

const char* mvfep_result_summary(const mvfep_result* result) {
  return result == nullptr ? "allocation failure" : result->summary.c_str();
}

void mvfep_result_free(mvfep_result* result) { delete result; }

}  // extern "C"
