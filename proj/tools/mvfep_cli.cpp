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

// Command-line front end. Everything goes through the C API of the shared
// library; this file contains no algebra of its own.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mvfep.h"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(MVFEP_PARSE_ERROR);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct AlgebraHandle {
  mvfep_algebra* ptr = nullptr;
  ~AlgebraHandle() { mvfep_algebra_free(ptr); }
};

mvfep_algebra* parse_algebra_or_exit(const std::string& path,
                                     AlgebraHandle& holder) {
  holder.ptr = mvfep_algebra_parse(read_input(path).c_str());
  if (holder.ptr == nullptr) {
    std::cerr << "error: " << mvfep_last_error() << "\n";
    std::exit(MVFEP_PARSE_ERROR);
  }
  return holder.ptr;
}

int emit(mvfep_result* result, const std::string& output_path,
         std::chrono::steady_clock::time_point started) {
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - started)
                  .count();
  int status = mvfep_result_status(result);
  const char* json = mvfep_result_json(result);
  if (json != nullptr) {
    if (output_path.empty() || output_path == "-") {
      std::fwrite(json, 1, std::char_traits<char>::length(json), stdout);
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        mvfep_result_free(result);
        return MVFEP_ERROR;
      }
      out << json;
    }
  }
  std::fprintf(stderr, "%s [%.1f ms]\n", mvfep_result_summary(result), ms);
  mvfep_result_free(result);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite MV-algebra embedding toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  std::string oracle;
  std::string elements;
  std::string mode_flag;
  long row_cap = MVFEP_DEFAULT_ROW_CAP;
  int filter_id = 0;

  auto* axioms = app.add_subcommand(
      "axioms", "check the MV axioms and adjointness of a table algebra");
  axioms->add_option("--input", input, "algebra JSON (- for stdin)");
  axioms->add_option("--output", output, "write the report here");

  auto* filters = app.add_subcommand("filters", "enumerate filters");
  filters->add_option("--input", input, "algebra JSON (- for stdin)");
  filters->add_option("--output", output, "write the report here");
  bool prime_only = false, ultra_only = false;
  filters->add_flag("--prime", prime_only, "list only prime filters");
  filters->add_flag("--ultra", ultra_only, "list only ultrafilters");

  auto* quotient = app.add_subcommand("quotient", "quotient by a filter");
  quotient->add_option("--input", input, "algebra JSON (- for stdin)");
  quotient->add_option("--filter", filter_id, "filter id from the enumeration")
      ->required();
  quotient->add_option("--output", output, "write the report here");

  auto* embed_chain = app.add_subcommand(
      "embed-chain", "embed a finite subset of a chain into some L_k");
  embed_chain->add_option("--algebra", oracle, "lk:<k>, qunit or chang")
      ->required();
  embed_chain
      ->add_option("--elements", elements,
                   "comma-separated elements, e.g. 1/3,2/3 or (0,1),(1,-1)")
      ->required();
  embed_chain->add_option("--row-cap", row_cap, "solver row cap");
  embed_chain->add_option("--output", output, "write the witness here");

  auto* embed = app.add_subcommand(
      "embed", "embed a finite MV-algebra into a power of some L_k");
  embed->add_option("--input", input, "algebra JSON (- for stdin)");
  embed->add_option("--row-cap", row_cap, "solver row cap");
  embed->add_option("--output", output, "write the witness here");

  auto* farkas = app.add_subcommand(
      "farkas", "solve A*x <= b exactly or certify infeasibility");
  farkas->add_option("--input", input, "system JSON (- for stdin)");
  farkas->add_option("--row-cap", row_cap, "solver row cap");
  farkas->add_option("--output", output, "write the result here");

  auto* verify = app.add_subcommand("verify", "re-verify a witness bundle");
  verify->add_option("--input", input, "bundle JSON (- for stdin)");
  verify->add_option("--output", output, "write the verdict here");

  CLI11_PARSE(app, argc, argv);
  auto started = std::chrono::steady_clock::now();

  if (axioms->parsed()) {
    AlgebraHandle alg;
    return emit(mvfep_run_axioms(parse_algebra_or_exit(input, alg)), output,
                started);
  }
  if (filters->parsed()) {
    if (prime_only && ultra_only) {
      std::cerr << "error: --prime and --ultra are mutually exclusive\n";
      return MVFEP_PARSE_ERROR;
    }
    AlgebraHandle alg;
    const char* mode = prime_only ? "prime" : (ultra_only ? "ultra" : "all");
    return emit(mvfep_run_filters(parse_algebra_or_exit(input, alg), mode),
                output, started);
  }
  if (quotient->parsed()) {
    AlgebraHandle alg;
    return emit(mvfep_run_quotient(parse_algebra_or_exit(input, alg), filter_id),
                output, started);
  }
  if (embed_chain->parsed()) {
    return emit(mvfep_run_embed_chain(oracle.c_str(), elements.c_str(), row_cap),
                output, started);
  }
  if (embed->parsed()) {
    AlgebraHandle alg;
    return emit(mvfep_run_embed(parse_algebra_or_exit(input, alg), row_cap),
                output, started);
  }
  if (farkas->parsed()) {
    return emit(mvfep_run_farkas(read_input(input).c_str(), row_cap), output,
                started);
  }
  if (verify->parsed()) {
    return emit(mvfep_run_verify(read_input(input).c_str()), output, started);
  }
  return MVFEP_ERROR;
}
